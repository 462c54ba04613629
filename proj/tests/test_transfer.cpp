#include "infsimp/random_models.hpp"

#include <doctest.h>

using namespace infsimp;

namespace {

SparseMap get(const WedgeMaps& m, const WedgeTuple& w, const ModulePtr& src, const ModulePtr& tgt) {
    const SparseMap* p = m.find(w);
    return p ? *p : SparseMap(src, tgt);
}

SparseMap over(const SparseMap& f, const BigradedModule& S, int n) {
    return f.restricted([&](int j) { return S.n_of(j) == n; });
}

bool all_zero(const WedgeMaps& m) {
    for (const auto& [w, f] : m.maps)
        if (!f.is_zero()) return false;
    return true;
}

bool has_relation(const Report& r, const std::string& rel) {
    for (const auto& v : r.violations)
        if (v.relation == rel) return true;
    return false;
}

}  // namespace

TEST_CASE("strong deformation retract validation") {
    FaceModule M = random_face_module(3);
    CHECK(validate_sdr(M.X, M.X, identity_sdr(M.X)).pass());

    ConeExample ex = acyclic_cone_example(example_xy(), 2, 1);
    CHECK(validate_sdr(ex.X.X, ex.Y, ex.sdr).pass());

    SDRData bad = ex.sdr;
    const BigradedModule& X = ex.X.X;
    bad.h.add_entry(X.index_of("a0_0"), X.index_of("a0_1"), Scalar(1, X.ring()));
    Report r = validate_sdr(X, ex.Y, bad);
    CHECK(!r.pass());
    CHECK(has_relation(r, "hh = 0"));

    SDRData shape = ex.sdr;
    shape.h.add_entry(X.index_of("a0_0"), X.index_of("b0_0"), Scalar(1, X.ring()));
    CHECK_THROWS_AS(validate_sdr(X, ex.Y, shape), InputError);
}

TEST_CASE("transfer along the identity retract") {
    FaceModule M = random_face_module(5);
    TransferredSDR t = transferred_sdr(M, M.X, identity_sdr(M.X));
    for (const WedgeTuple& w : all_face_indices(M.X.max_n())) {
        const BigradedModule& X = M.X;
        CHECK(over(get(t.Y.faces, w, X.basis(), X.basis()), X, w.n) == over(get(M.faces, w, X.basis(), X.basis()), X, w.n));
    }
    CHECK(t.xi_bar.base == M.X.identity());
    CHECK(t.eta_bar.base == M.X.identity());
    CHECK(t.h_bar.base.is_zero());
    CHECK(all_zero(t.xi_bar.higher));
    CHECK(all_zero(t.eta_bar.higher));
    CHECK(all_zero(t.h_bar.higher));
}

TEST_CASE("low-length transferred faces") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        FaceModule Ymod = random_face_module(seed, 3, 2);
        ConeExample ex = acyclic_cone_example(Ymod, seed + 50);
        const BigradedModule& X = ex.X.X;
        const SDRData& s = ex.sdr;
        FaceFamily F = transferred_structure(ex.X, ex.Y, s);
        const ModulePtr& XB = X.basis();
        const ModulePtr& YB = ex.Y.basis();
        for (const WedgeTuple& w : all_face_indices(3)) {
            if (w.k() > 2) continue;
            SparseMap expect = compose(s.eta, compose(get(ex.X.faces, w, XB, XB), s.xi));
            for (const Split& sp : enumerate_splits(w)) {
                SparseMap chain = compose(get(ex.X.faces, sp.left, XB, XB),
                                          compose(s.h, compose(get(ex.X.faces, sp.right, XB, XB), s.xi)));
                expect -= compose(s.eta, chain).scaled(Scalar(sp.sign));
            }
            SparseMap got = over(get(F, w, YB, YB), ex.Y, w.n);
            CHECK(got == over(expect, ex.Y, w.n));
        }
    }
}

TEST_CASE("transferred retract data on cone examples") {
    int nonzero_long_faces = 0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        std::vector<ConeExample> cases;
        cases.push_back(acyclic_cone_example(example_xy(), 3, seed));
        cases.push_back(acyclic_cone_example(example_dga(), 3, seed));
        cases.push_back(acyclic_cone_example(random_face_module(seed, 3, 2), seed + 50));
        for (const ConeExample& ex : cases) {
            REQUIRE(check_faces(ex.X).pass());
            REQUIRE(validate_sdr(ex.X.X, ex.Y, ex.sdr).pass());
            TransferredSDR t = transferred_sdr(ex.X, ex.Y, ex.sdr);
            CHECK(check_faces(t.Y).pass());
            CHECK(check_morphism(t.xi_bar, t.Y, ex.X).pass());
            CHECK(check_morphism(t.eta_bar, ex.X, t.Y).pass());
            MorphismFamily round = compose_morphisms(t.xi_bar, t.eta_bar, ex.X.X.max_n());
            CHECK(check_homotopy(t.h_bar, round, identity_morphism(ex.X.X), ex.X, ex.X).pass());
            CHECK(t.eta_bar.base == ex.sdr.eta);
            CHECK(t.xi_bar.base == ex.sdr.xi);
            CHECK(t.h_bar.base == ex.sdr.h);

            MorphismFamily back = compose_morphisms(t.eta_bar, t.xi_bar, ex.Y.max_n());
            CHECK(back.base == ex.Y.identity());
            CHECK(all_zero(back.higher));

            for (const auto& [w, f] : t.Y.faces.maps)
                if (w.k() >= 2 && !f.is_zero()) ++nonzero_long_faces;
            CHECK(t.stats.max_stages >= 1);
            CHECK(t.stats.max_stages <= ex.X.X.max_n());
        }
    }
    CHECK(nonzero_long_faces > 0);
}

TEST_CASE("a sign error in a transferred length-two face is caught") {
    ConeExample ex = acyclic_cone_example(random_face_module(1, 3, 2), 51);
    TransferredSDR t = transferred_sdr(ex.X, ex.Y, ex.sdr);
    REQUIRE(check_morphism(t.xi_bar, t.Y, ex.X).pass());
    bool mutated = false;
    for (auto& [w, f] : t.Y.faces.maps)
        if (w.k() == 2 && !f.is_zero()) {
            f = f.scaled(Scalar(-1));
            mutated = true;
            break;
        }
    REQUIRE(mutated);
    CHECK(!check_morphism(t.xi_bar, t.Y, ex.X).pass());
}

TEST_CASE("gauge transforms are morphisms") {
    std::mt19937_64 rng(77);
    FaceModule M = random_face_module(6);
    WedgeMaps f = random_gauge(M.X, rng, 4, 40);
    FaceModule N = gauge_transform(M, f);
    CHECK(check_faces(N).pass());
    CHECK(check_morphism(MorphismFamily{M.X.identity(), f}, M, N).pass());
    FaceModule same = gauge_transform(M, WedgeMaps{});
    for (const WedgeTuple& w : all_face_indices(4)) {
        const ModulePtr& B = M.X.basis();
        CHECK(over(get(same.faces, w, B, B), M.X, w.n) == over(get(M.faces, w, B, B), M.X, w.n));
    }
}
