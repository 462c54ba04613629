#include "infsimp/ainf.hpp"
#include "infsimp/random_models.hpp"

#include <doctest.h>

#include <random>

using namespace infsimp;

namespace {

SparseMap random_map(std::mt19937_64& rng, const BigradedModule& X, int n, int dn, int dm) {
    SparseMap f(X.basis(), X.basis());
    for (int j : X.indices_n(n))
        for (int i : X.indices(n - dn, X.m_of(j) + dm))
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                f.add_entry(j, i, Scalar(std::uniform_int_distribution<int>(-2, 2)(rng), X.ring()));
    return f;
}

SparseMap get(const WedgeMaps& m, const WedgeTuple& w, const BigradedModule& X) {
    const SparseMap* p = m.find(w);
    return p ? *p : SparseMap(X.basis(), X.basis());
}

// Restricts every map to columns in X_{w.n}, as the families are read that way.
WedgeMaps restrict_to_ambient(const WedgeMaps& m, const BigradedModule& X) {
    WedgeMaps r;
    for (const auto& [w, f] : m.maps) {
        SparseMap g = f.restricted([&](int j) { return X.n_of(j) == w.n; });
        if (!g.is_zero()) r.maps.emplace(w, g);
    }
    return r;
}

bool same_family(const WedgeMaps& a, const WedgeMaps& b, const BigradedModule& X) {
    WedgeMaps ra = restrict_to_ambient(a, X), rb = restrict_to_ambient(b, X);
    if (ra.maps.size() != rb.maps.size()) return false;
    for (const auto& [w, f] : ra.maps) {
        const SparseMap* g = rb.find(w);
        if (!g || *g != f) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("faces of strict and tensor-algebra modules") {
    StrictModule S = standard_simplex(4, 4);
    FaceModule M{S.X, strict_to_infinity(S.X, S.faces)};
    CHECK(check_faces(M).pass());

    for (const AInfAlgebra& A : {example_xy(), example_dga()}) {
        TensorAlgebraModule T = faces_from_ainf(A, 4);
        Report r = check_faces(T.M);
        CHECK(r.pass());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("negating a length-two face is detected") {
    FaceModule M = random_face_module(1);
    REQUIRE(check_faces(M).pass());
    WedgeTuple w{3, {1, 2}};
    REQUIRE(M.faces.find(w));
    REQUIRE(!M.faces.find(w)->is_zero());
    M.faces.maps.at(w) = M.faces.maps.at(w).scaled(Scalar(-1));
    Report r = check_faces(M);
    REQUIRE(!r.pass());
    bool at_w = false;
    for (const auto& v : r.violations) {
        at_w = at_w || v.location.rfind("d[3](1,2) on ", 0) == 0 || v.location.rfind("d[4](1,2,3) on ", 0) == 0;
        CHECK(!v.discrepancy.is_zero());
    }
    CHECK(at_w);
}

TEST_CASE("face shapes are validated") {
    BigradedModule X;
    X.add("a", 2, 0);
    X.add("b", 1, 0);
    FaceFamily F;
    F.at({2, {0}}, X.basis(), X.basis()).add_entry(0, 1, Scalar(1));
    CHECK_NOTHROW(validate_face_shapes(X, F));
    FaceFamily G;
    G.at({2, {0, 1}}, X.basis(), X.basis()).add_entry(0, 1, Scalar(1));
    CHECK_THROWS_AS(validate_face_shapes(X, G), InputError);
    CHECK_THROWS_AS(check_faces(X, G), InputError);
}

TEST_CASE("morphism checks") {
    FaceModule M = random_face_module(2);
    CHECK(check_morphism(identity_morphism(M.X), M, M).pass());

    MorphismFamily bad = identity_morphism(M.X);
    int j = M.X.indices(0, 1).at(0);
    int i = M.X.indices(0, 1).size() > 1 ? M.X.indices(0, 1).at(1) : j;
    bad.base.add_entry(j, i, Scalar(1, M.X.ring()));
    bad.base.add_entry(j, j, Scalar(1, M.X.ring()));
    Report r = check_morphism(bad, M, M);
    REQUIRE(!r.pass());
    bool chain = false;
    for (const auto& v : r.violations) chain = chain || v.location.rfind("f_() on", 0) == 0;
    CHECK(chain);
}

TEST_CASE("gauge transform agrees with the explicit low-length morphism relations") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::mt19937_64 rng(seed);
        FaceModule M = random_face_module(seed, 2, 2);
        WedgeMaps f = random_gauge(M.X, rng, 2, 50);
        FaceModule N = gauge_transform(M, f);
        const BigradedModule& X = M.X;
        const SparseMap& d = X.d();

        WedgeMaps expect;
        for (int n = 1; n <= 2; ++n)
            for (int a = 0; a <= n; ++a) {
                WedgeTuple w{n, {a}};
                SparseMap fw = get(f, w, X);
                expect.maps.emplace(w, get(M.faces, w, X) - compose(d, fw) + compose(fw, d));
            }
        for (int j = 1; j <= 2; ++j)
            for (int i = 0; i < j; ++i) {
                WedgeTuple w{2, {i, j}};
                SparseMap fij = get(f, w, X);
                SparseMap v = get(M.faces, w, X) - compose(d, fij) + compose(fij, d);
                v -= compose(get(expect, {1, {i}}, X), get(f, {2, {j}}, X));
                v += compose(get(expect, {1, {j - 1}}, X), get(f, {2, {i}}, X));
                v += compose(get(f, {1, {i}}, X), get(M.faces, {2, {j}}, X));
                v -= compose(get(f, {1, {j - 1}}, X), get(M.faces, {2, {i}}, X));
                expect.maps.emplace(w, v);
            }
        CHECK(same_family(N.faces, expect, X));
        CHECK(check_faces(N).pass());
        CHECK(check_morphism(MorphismFamily{X.identity(), f}, M, N).pass());
    }
}

TEST_CASE("homotopy checks agree with the explicit low-length relations") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::mt19937_64 rng(seed + 100);
        FaceModule M = tensor_faces(random_face_module(seed, 2, 2), random_face_module(seed + 50, 2, 2), 2);
        const BigradedModule& X = M.X;
        const SparseMap& d = X.d();
        MorphismFamily f = identity_morphism(X);

        HomotopyFamily h{SparseMap(X.basis(), X.basis()), {}};
        for (int n = 0; n <= 2; ++n) h.base += random_map(rng, X, n, 0, 1);
        for (int n = 1; n <= 2; ++n)
            for (int a = 0; a <= n; ++a) h.higher.maps.emplace(WedgeTuple{n, {a}}, random_map(rng, X, n, 1, 2));
        bool some = false;
        for (const auto& [w, m] : h.higher.maps) some = some || !m.is_zero();
        REQUIRE(some);

        // g from d(h_()) = f_() - g_() and the explicit relations for k = 1, 2.
        MorphismFamily g{f.base - compose(d, h.base) - compose(h.base, d), {}};
        for (int n = 1; n <= 2; ++n)
            for (int a = 0; a <= n; ++a) {
                WedgeTuple w{n, {a}};
                SparseMap hw = get(h.higher, w, X);
                SparseMap dw = get(M.faces, w, X);
                g.higher.maps.emplace(w, SparseMap(X.basis(), X.basis()) - compose(dw, h.base) - compose(h.base, dw) -
                                             compose(d, hw) - compose(hw, d));
            }
        for (int j = 1; j <= 2; ++j)
            for (int i = 0; i < j; ++i) {
                WedgeTuple w{2, {i, j}};
                SparseMap dw = get(M.faces, w, X);
                SparseMap v = SparseMap(X.basis(), X.basis()) - compose(dw, h.base) - compose(h.base, dw);
                v -= compose(get(M.faces, {1, {i}}, X), get(h.higher, {2, {j}}, X));
                v += compose(get(M.faces, {1, {j - 1}}, X), get(h.higher, {2, {i}}, X));
                v -= compose(get(h.higher, {1, {i}}, X), get(M.faces, {2, {j}}, X));
                v += compose(get(h.higher, {1, {j - 1}}, X), get(M.faces, {2, {i}}, X));
                g.higher.maps.emplace(w, v);
            }
        CHECK(check_homotopy(h, f, g, M, M).pass());
        CHECK(check_homotopy(HomotopyFamily{SparseMap(X.basis(), X.basis()), {}}, f, f, M, M).pass());

        // Perturbing h_(1) on X_1 breaks the k = 1 relation there.
        HomotopyFamily bad = h;
        int x = X.indices(1, 0).at(0);
        int y = X.indices(0, 2).at(0);
        bad.higher.at({1, {1}}, X.basis(), X.basis()).add_entry(x, y, Scalar(1, X.ring()));
        Report r = check_homotopy(bad, f, g, M, M);
        REQUIRE(!r.pass());
        CHECK(r.violations.front().location.rfind("hd[1](1) on ", 0) == 0);
    }
}

TEST_CASE("composite morphisms") {
    std::mt19937_64 rng(4);
    FaceModule M = random_face_module(4);
    WedgeMaps f = random_gauge(M.X, rng, 4, 30);
    FaceModule N = gauge_transform(M, f);
    WedgeMaps g = random_gauge(N.X, rng, 4, 30);
    FaceModule P = gauge_transform(N, g);
    MorphismFamily F{M.X.identity(), f}, G{N.X.identity(), g};
    REQUIRE(check_morphism(F, M, N).pass());
    REQUIRE(check_morphism(G, N, P).pass());
    CHECK(check_morphism(compose_morphisms(G, F, 4), M, P).pass());
    CHECK(!check_morphism(compose_morphisms(G, F, 4), M, N).pass());
}

TEST_CASE("Lie form and module action") {
    TensorAlgebraModule T = faces_from_ainf(example_xy(), 4);
    LieModule L = lie_from_faces(T.M);
    FaceModule back = faces_from_lie(L);
    CHECK(same_family(back.faces, T.M.faces, T.M.X));

    FinfModule A = lie_to_module(L);
    LieModule L2 = module_to_lie(A);
    CHECK(same_family(L2.psi, L.psi, T.M.X));

    const BigradedModule& X = T.M.X;
    for (int j = 0; j < X.rank(); ++j) {
        Vec e(j, Scalar(1));
        const int n = X.n_of(j);
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                CHECK(A.act({w}).apply(e) == T.M.faces.apply(w, e));
                for (int k2 = 1; k2 <= n - k; ++k2)
                    for (const WedgeTuple& u : wedge_tuples(n - k, k2)) {
                        Vec two = T.M.faces.apply(u, T.M.faces.apply(w, e));
                        CHECK(A.act({u, w}).apply(e) == two);
                        CHECK(act_word(T.M, {u, w}, e) == two);
                    }
            }
    }

    // The action is a chain map: act(d w) is the colored hom differential of act(w).
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                HomElement e = make_hom(X, X, w.s(), w.t(), k - 1, A.act({w}));
                SparseMap lhs(X.basis(), X.basis());
                for (const auto& [v, c] : finf_d(OmegaWord{w})) lhs += A.act(v).scaled(c);
                HomElement de = hom_differential(e, X, X);
                CHECK(make_hom(X, X, w.s(), w.t(), k - 2, lhs).f == de.f);
            }
}

TEST_CASE("tensor product faces") {
    FaceModule X{BigradedModule(Ring::rationals()), {}};
    X.X.add("x0", 0, 0);
    X.X.add("x1", 1, 1);
    X.X.add("x1b", 0, 1);
    X.faces.at({1, {0}}, X.X.basis(), X.X.basis()).add_entry(1, 2, Scalar(1));
    X.faces.at({1, {1}}, X.X.basis(), X.X.basis()).add_entry(1, 2, Scalar(1));
    FaceModule Y{BigradedModule(Ring::rationals()), {}};
    Y.X.add("y1", 1, 0);
    Y.X.add("y0", 0, 0);
    Y.faces.at({1, {1}}, Y.X.basis(), Y.X.basis()).add_entry(0, 1, Scalar(1));
    Y.faces.at({1, {0}}, Y.X.basis(), Y.X.basis()).add_entry(0, 1, Scalar(2));
    REQUIRE(check_faces(X).pass());
    REQUIRE(check_faces(Y).pass());

    TensorModule idx;
    FaceModule T = tensor_faces(X, Y, -1, idx);
    const ModulePtr& B = T.X.basis();
    auto key = [&](const std::string& k) { return Vec(B->index_of(k), Scalar(1)); };
    // Below q: the face acts on x.
    CHECK(T.faces.apply({2, {0}}, key("x1 * y1")) == key("x1b * y1"));
    // Ending at q: zero.
    CHECK(T.faces.apply({2, {1}}, key("x1 * y1")).is_zero());
    // Above q with x in X_{1,1}: (-1)^s x (x) d_(1) y.
    CHECK(T.faces.apply({2, {2}}, key("x1 * y1")) == key("x1 * y0").scaled(Scalar(-1)));
    CHECK(T.faces.apply({1, {1}}, key("x0 * y1")) == key("x0 * y0"));
    CHECK(check_faces(T).pass());

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        FaceModule A = random_face_module(seed, 4, 2), C = random_face_module(seed + 1000, 4, 2);
        CHECK(check_faces(tensor_faces(A, C, 4)).pass());
    }
}

TEST_CASE("D-infinity and total complexes") {
    StrictModule S = standard_simplex(3, 3);
    FaceModule M{S.X, strict_to_infinity(S.X, S.faces)};
    DInfty D = dinfty_from_faces(M);
    for (int j = 0; j < S.X.rank(); ++j) {
        Vec expect;
        int n = S.X.n_of(j);
        for (int i = 0; i <= n && n > 0; ++i)
            expect += S.faces.at({n, i}).apply(Vec(j, Scalar(1))).scaled(sign_of(i));
        CHECK(D.d[1].apply(Vec(j, Scalar(1))) == expect);
    }
    for (std::size_t k = 2; k < D.d.size(); ++k) CHECK(D.d[k].is_zero());
    CHECK(check_dinfty(S.X, D).pass());

    TensorAlgebraModule T = faces_from_ainf(example_xy(), 4);
    DInfty DT = dinfty_from_faces(T.M);
    CHECK(check_dinfty(T.M.X, DT).pass());
    SparseMap k2 = compose(DT.d[0], DT.d[2]) + compose(DT.d[1], DT.d[1]) + compose(DT.d[2], DT.d[0]);
    CHECK(k2.is_zero());
    CHECK(!DT.d[1].is_zero());

    TotalComplex TC = total_complex(T.M);
    CHECK(compose(TC.differential, TC.differential).is_zero());

    FaceModule flat{BigradedModule(Ring::rationals()), {}};
    flat.X.add("a", 0, 2);
    flat.X.add("b", 0, 1);
    flat.X.add_d("a", "b", Scalar(5));
    TotalComplex F = total_complex(flat);
    CHECK(F.differential == flat.X.d());
    CHECK(F.rank_by_degree() == std::map<int, int>{{1, 1}, {2, 1}});
}

TEST_CASE("elements as maps out of free face modules") {
    TensorAlgebraModule T = faces_from_ainf(example_xy(), 3);
    const BigradedModule& X = T.M.X;
    std::vector<FreeFaceModule> F;
    for (int n = 0; n <= 3; ++n) F.push_back(build_F_n(n));
    for (int x = 0; x < X.rank(); ++x) {
        const int n = X.n_of(x);
        const long q = X.m_of(x);
        SparseMap xb = xbar_map(T.M, x, F[n]);
        CHECK(xb.apply(Vec(F[n].index.at({}), Scalar(1))) == Vec(x, sign_of(n * q)));
        if (X.d().column(x).is_zero()) {
            SparseMap lhs = compose(X.d(), xb);
            SparseMap rhs = compose(xb, F[n].module.X.d()).scaled(sign_of(q));
            CHECK(lhs == rhs);
        }
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                for (int a : F[n].module.X.indices_n(n)) {
                    Vec e(a, Scalar(1));
                    CHECK(T.M.faces.apply(w, xb.apply(e)) == xb.apply(F[n].module.faces.apply(w, e)).scaled(sign_of(q)));
                }
            }
    }
    CHECK_THROWS_AS(xbar_map(T.M, 0, F[2]), InputError);
}

TEST_CASE("naive realization") {
    FaceModule flat{BigradedModule(Ring::rationals()), {}};
    flat.X.add("a", 0, 2);
    flat.X.add("b", 0, 1);
    flat.X.add_d("a", "b", Scalar(5));
    RealizationResult r0 = naive_realization_oracle(flat, 2, Ring::rationals());
    CHECK(r0.report.pass());
    CHECK(r0.isomorphic);
    CHECK(r0.quotient_ranks == std::map<int, int>{{1, 1}, {2, 1}});

    TensorAlgebraModule T = faces_from_ainf(example_xy(), 2);
    RealizationResult r = naive_realization_oracle(T.M, 2, Ring::rationals());
    CHECK(r.report.pass());
    CHECK(r.isomorphic);
    std::map<int, int> expect{{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 1}};
    std::map<int, int> got;
    for (const auto& [deg, rank] : r.quotient_ranks)
        if (rank) got[deg] = rank;
    CHECK(got == expect);
    CHECK(r.quotient_ranks == r.total_ranks);
    CHECK_THROWS_AS(naive_realization_oracle(flat, 2, Ring::integers()), UnsupportedCoefficients);
}
