#include "infsimp/face_module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace infsimp {

namespace {

Vec unit_vec(int i) { return Vec(i, Scalar(1)); }

std::string at_label(const WedgeTuple& w, const BigradedModule& X, int j) {
    return to_string(w) + " on " + X.key(j);
}

// Every column of each map must sit over X_{w.n} and land in Y_{n-k, m+k-1+shift}.
void validate_family(const BigradedModule& X, const BigradedModule& Y, const WedgeMaps& maps, int shift,
                     const std::string& what) {
    for (const auto& [w, f] : maps.maps) {
        if (w.is_unit() || !w.valid()) throw InputError(what + ": invalid index " + to_string(w));
        for (const auto& [j, col] : f.columns()) {
            if (j < 0 || j >= X.rank()) throw InputError(what + " " + to_string(w) + ": source index out of range");
            if (X.n_of(j) != w.n)
                throw InputError(what + " " + to_string(w) + " has a column on " + X.key(j) + " outside degree " +
                                 std::to_string(w.n));
            for (const auto& [i, c] : col) {
                if (i < 0 || i >= Y.rank()) throw InputError(what + " " + to_string(w) + ": target index out of range");
                if (Y.n_of(i) != w.s() || Y.m_of(i) != X.m_of(j) + w.k() - 1 + shift)
                    throw InputError(what + " " + to_string(w) + " sends " + X.key(j) + " to " + Y.key(i) +
                                     " of the wrong bidegree");
            }
        }
    }
}

void validate_base(const BigradedModule& X, const BigradedModule& Y, const SparseMap& f, int shift,
                   const std::string& what) {
    for (const auto& [j, col] : f.columns())
        for (const auto& [i, c] : col)
            if (j >= X.rank() || i >= Y.rank() || Y.n_of(i) != X.n_of(j) || Y.m_of(i) != X.m_of(j) + shift)
                throw InputError(what + " has an entry of the wrong bidegree");
}

}  // namespace

void validate_face_shapes(const BigradedModule& X, const FaceFamily& F) {
    validate_family(X, X, F, 0, "face");
}

std::vector<WedgeTuple> all_face_indices(int n_max) {
    std::vector<WedgeTuple> out;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& w : wedge_tuples(n, k)) out.push_back(std::move(w));
    return out;
}

Report check_faces(const BigradedModule& X, const FaceFamily& F) {
    validate_face_shapes(X, F);
    Report rep;
    const SparseMap& d = X.d();
    for (const WedgeTuple& w : all_face_indices(X.max_n())) {
        const auto splits = enumerate_splits(w);
        for (int j : X.indices_n(w.n)) {
            ++rep.checked;
            Vec x = unit_vec(j);
            Vec lhs = d.apply(F.apply(w, x)) + F.apply(w, d.apply(x));
            for (const Split& sp : splits) lhs.add(F.apply(sp.left, F.apply(sp.right, x)), Scalar(-sp.sign));
            if (!lhs.is_zero())
                rep.fail(at_label(w, X, j), "d d_w + d_w d = sum sign d_L d_R", X.basis()->to_keys(lhs));
        }
    }
    return rep;
}

Report check_morphism(const MorphismFamily& f, const FaceModule& src, const FaceModule& tgt) {
    const BigradedModule& X = src.X;
    const BigradedModule& Y = tgt.X;
    validate_face_shapes(X, src.faces);
    validate_face_shapes(Y, tgt.faces);
    validate_base(X, Y, f.base, 0, "f_()");
    validate_family(X, Y, f.higher, 1, "f");
    Report rep;
    for (int j = 0; j < X.rank(); ++j) {
        ++rep.checked;
        Vec x = unit_vec(j);
        Vec r = Y.d().apply(f.base.apply(x)) - f.base.apply(X.d().apply(x));
        if (!r.is_zero()) rep.fail("f_() on " + X.key(j), "d f_() = f_() d", Y.basis()->to_keys(r));
    }
    for (const WedgeTuple& w : all_face_indices(X.max_n())) {
        const auto splits = enumerate_splits(w);
        for (int j : X.indices_n(w.n)) {
            ++rep.checked;
            Vec x = unit_vec(j);
            Vec r = Y.d().apply(f.higher.apply(w, x)) - f.higher.apply(w, X.d().apply(x));
            r += tgt.faces.apply(w, f.base.apply(x));
            r -= f.base.apply(src.faces.apply(w, x));
            for (const Split& sp : splits) {
                Scalar s(-sp.sign);
                r.add(tgt.faces.apply(sp.left, f.higher.apply(sp.right, x)), s);
                r.add(f.higher.apply(sp.left, src.faces.apply(sp.right, x)), -s);
            }
            if (!r.is_zero())
                rep.fail("f" + at_label(w, X, j), "d f_w - f_w d = -d_w f_() + f_() d_w + sum sign (d_L f_R - f_L d_R)",
                         Y.basis()->to_keys(r));
        }
    }
    return rep;
}

Report check_homotopy(const HomotopyFamily& h, const MorphismFamily& f, const MorphismFamily& g,
                      const FaceModule& src, const FaceModule& tgt) {
    const BigradedModule& X = src.X;
    const BigradedModule& Y = tgt.X;
    validate_face_shapes(X, src.faces);
    validate_face_shapes(Y, tgt.faces);
    validate_base(X, Y, f.base, 0, "f_()");
    validate_base(X, Y, g.base, 0, "g_()");
    validate_base(X, Y, h.base, 1, "h_()");
    validate_family(X, Y, f.higher, 1, "f");
    validate_family(X, Y, g.higher, 1, "g");
    validate_family(X, Y, h.higher, 2, "h");
    Report rep;
    for (int j = 0; j < X.rank(); ++j) {
        ++rep.checked;
        Vec x = unit_vec(j);
        Vec r = Y.d().apply(h.base.apply(x)) + h.base.apply(X.d().apply(x));
        r -= f.base.apply(x);
        r += g.base.apply(x);
        if (!r.is_zero()) rep.fail("h_() on " + X.key(j), "d h_() + h_() d = f_() - g_()", Y.basis()->to_keys(r));
    }
    for (const WedgeTuple& w : all_face_indices(X.max_n())) {
        const auto splits = enumerate_splits(w);
        for (int j : X.indices_n(w.n)) {
            ++rep.checked;
            Vec x = unit_vec(j);
            Vec r = Y.d().apply(h.higher.apply(w, x)) + h.higher.apply(w, X.d().apply(x));
            r -= f.higher.apply(w, x);
            r += g.higher.apply(w, x);
            r += tgt.faces.apply(w, h.base.apply(x));
            r += h.base.apply(src.faces.apply(w, x));
            for (const Split& sp : splits) {
                Scalar s(-sp.sign);
                r.add(tgt.faces.apply(sp.left, h.higher.apply(sp.right, x)), s);
                r.add(h.higher.apply(sp.left, src.faces.apply(sp.right, x)), s);
            }
            if (!r.is_zero())
                rep.fail("h" + at_label(w, X, j),
                         "d h_w + h_w d = f_w - g_w - d_w h_() - h_() d_w + sum sign (d_L h_R + h_L d_R)",
                         Y.basis()->to_keys(r));
        }
    }
    return rep;
}

FaceFamily strict_to_infinity(const BigradedModule& X, const StrictFaces& faces) {
    FaceFamily F;
    for (const auto& [ni, m] : faces) {
        auto [n, i] = ni;
        SparseMap& t = F.at(WedgeTuple{n, {i}}, X.basis(), X.basis());
        for (const auto& [j, col] : m.columns())
            if (X.n_of(j) == n) t.set_column(j, col);
    }
    return F;
}

MorphismFamily identity_morphism(const BigradedModule& X) {
    return MorphismFamily{X.identity(), {}};
}

MorphismFamily compose_morphisms(const MorphismFamily& g, const MorphismFamily& f, int n_max) {
    MorphismFamily r;
    r.base = compose(g.base, f.base);
    const ModulePtr& src = f.base.source();
    const ModulePtr& tgt = g.base.target();
    for (const WedgeTuple& w : all_face_indices(n_max)) {
        SparseMap m(src, tgt);
        if (const SparseMap* fw = f.higher.find(w)) m += compose(g.base, *fw);
        if (const SparseMap* gw = g.higher.find(w)) m += compose(*gw, f.base);
        for (const Split& sp : enumerate_splits(w)) {
            const SparseMap* gl = g.higher.find(sp.left);
            const SparseMap* fr = f.higher.find(sp.right);
            if (gl && fr) m += compose(*gl, *fr).scaled(Scalar(-sp.sign));
        }
        if (!m.is_zero()) r.higher.maps.emplace(w, std::move(m));
    }
    return r;
}

LieModule lie_from_faces(const FaceModule& M) {
    LieModule L{M.X, {}};
    for (const auto& [w, f] : M.faces.maps) L.psi.maps.emplace(w, f.scaled(Scalar(-1)));
    return L;
}

FaceModule faces_from_lie(const LieModule& L) {
    FaceModule M{L.X, {}};
    for (const auto& [w, f] : L.psi.maps) M.faces.maps.emplace(w, f.scaled(Scalar(-1)));
    return M;
}

FinfModule lie_to_module(const LieModule& L) {
    FinfModule M;
    M.X = L.X;
    M.n_max = L.X.max_n();
    const BigradedModule X = L.X;
    const WedgeMaps psi = L.psi;
    M.act = [X, psi](const OmegaWord& word) {
        if (word.empty()) return X.identity();
        if (!omega_composable(word)) throw InputError("word " + to_string(word) + " is not composable");
        // A d-basis word is (-1)^r times the bracket word, whose action is the
        // composite of the psi maps.
        HomElement acc = hom_identity(X, word.back().t());
        for (std::size_t j = word.size(); j-- > 0;) {
            const WedgeTuple& g = word[j];
            const SparseMap* p = psi.find(g);
            HomElement e = make_hom(X, X, g.s(), g.t(), g.k() - 1, p ? *p : X.zero_to(X));
            acc = hom_compose(e, acc);
        }
        return acc.f.scaled(sign_of(static_cast<long>(word.size())));
    };
    return M;
}

LieModule module_to_lie(const FinfModule& M) {
    LieModule L{M.X, {}};
    for (const WedgeTuple& w : all_face_indices(M.n_max)) {
        SparseMap a = M.act(OmegaWord{w}).scaled(Scalar(-1));
        if (!a.is_zero()) L.psi.maps.emplace(w, std::move(a));
    }
    return L;
}

TensorModule bigraded_tensor(const BigradedModule& X, const BigradedModule& Y, int n_cap) {
    if (!(X.ring() == Y.ring())) throw InputError("tensor product: coefficient rings differ");
    TensorModule T{BigradedModule(X.ring()), {}};
    for (int a = 0; a < X.rank(); ++a)
        for (int b = 0; b < Y.rank(); ++b) {
            int n = X.n_of(a) + Y.n_of(b);
            if (n_cap >= 0 && n > n_cap) continue;
            T.index[{a, b}] = T.X.add(X.key(a) + " * " + Y.key(b), n, X.m_of(a) + Y.m_of(b));
        }
    SparseMap d(T.X.basis(), T.X.basis());
    for (const auto& [ab, i] : T.index) {
        auto [a, b] = ab;
        for (const auto& [a2, c] : X.d().column(a)) d.add_entry(i, T.index.at({a2, b}), c);
        Scalar sg = sign_of(X.n_of(a) + X.m_of(a));
        for (const auto& [b2, c] : Y.d().column(b)) d.add_entry(i, T.index.at({a, b2}), sg * c);
    }
    T.X.set_d(d);
    return T;
}

FaceModule tensor_faces(const FaceModule& X, const FaceModule& Y, int n_cap) {
    TensorModule idx;
    return tensor_faces(X, Y, n_cap, idx);
}

FaceModule tensor_faces(const FaceModule& X, const FaceModule& Y, int n_cap, TensorModule& out) {
    validate_face_shapes(X.X, X.faces);
    validate_face_shapes(Y.X, Y.faces);
    out = bigraded_tensor(X.X, Y.X, n_cap);
    FaceModule T{out.X, {}};
    const ModulePtr& B = T.X.basis();
    for (const auto& [ab, i] : out.index) {
        auto [a, b] = ab;
        const int q = X.X.n_of(a);
        const int s = X.X.m_of(a);
        const int l = Y.X.n_of(b);
        const int n = q + l;
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                if (w.tuple.back() < q) {
                    Vec img = X.faces.apply(WedgeTuple{q, w.tuple}, unit_vec(a));
                    for (const auto& [a2, c] : img) T.faces.at(w, B, B).add_entry(i, out.index.at({a2, b}), c);
                } else if (w.tuple.front() > q) {
                    WedgeTuple wy{l, w.tuple};
                    for (int& t : wy.tuple) t -= q;
                    Vec img = Y.faces.apply(wy, unit_vec(b));
                    Scalar sg = sign_of(static_cast<long>(k - 1) * q + s);
                    for (const auto& [b2, c] : img) T.faces.at(w, B, B).add_entry(i, out.index.at({a, b2}), sg * c);
                }
            }
    }
    return T;
}

DInfty dinfty_from_faces(const FaceModule& M) {
    validate_face_shapes(M.X, M.faces);
    DInfty D;
    const ModulePtr& B = M.X.basis();
    const int top = std::max(0, M.X.max_n());
    D.d.assign(top + 1, SparseMap(B, B));
    D.d[0] = M.X.d();
    for (const auto& [w, f] : M.faces.maps) {
        long e = 0;
        for (int i : w.tuple) e += i;
        D.d[w.k()] += f.scaled(sign_of(e));
    }
    return D;
}

Report check_dinfty(const BigradedModule& X, const DInfty& D) {
    Report rep;
    const int K = static_cast<int>(D.d.size());
    for (int k = 0; k <= 2 * (K - 1); ++k) {
        SparseMap sum(X.basis(), X.basis());
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            if (i >= K || j >= K) continue;
            sum += compose(D.d[i], D.d[j]);
        }
        ++rep.checked;
        for (const auto& [j, col] : sum.columns())
            rep.fail("k=" + std::to_string(k) + " on " + X.key(j), "sum_{i+j=k} d^i d^j = 0", X.basis()->to_keys(col));
    }
    return rep;
}

std::map<int, int> TotalComplex::rank_by_degree() const {
    std::map<int, int> r;
    for (int i = 0; i < basis->rank(); ++i) ++r[basis->grading(i)[0]];
    return r;
}

TotalComplex total_complex(const FaceModule& M) {
    validate_face_shapes(M.X, M.faces);
    const BigradedModule& X = M.X;
    auto mod = std::make_shared<FreeModule>(X.ring());
    for (int i = 0; i < X.rank(); ++i) mod->add(X.key(i), {X.n_of(i) + X.m_of(i)});
    TotalComplex T{mod, SparseMap(mod, mod)};
    for (int j = 0; j < X.rank(); ++j) {
        const long n = X.n_of(j);
        for (const auto& [i, c] : X.d().column(j)) T.differential.add_entry(j, i, sign_of(n) * c);
    }
    for (const auto& [w, f] : M.faces.maps) {
        const long k = w.k();
        long e = 0;
        for (int i : w.tuple) e += i;
        for (const auto& [j, col] : f.columns()) {
            const long n = X.n_of(j);
            const long q = X.m_of(j);
            Scalar sg = sign_of(e + n * (k - 1) + (q - 1) * k);
            for (const auto& [i, c] : col) T.differential.add_entry(j, i, sg * c);
        }
    }
    return T;
}

Vec act_word(const FaceModule& M, const OmegaWord& word, const Vec& v) {
    Vec r = v;
    for (std::size_t j = word.size(); j-- > 0 && !r.is_zero();) r = M.faces.apply(word[j], r);
    return r;
}

SparseMap xbar_map(const FaceModule& M, int x, const FreeFaceModule& Fn) {
    const BigradedModule& F = Fn.module.X;
    if (M.X.n_of(x) != Fn.n) throw InputError("xbar: element " + M.X.key(x) + " is not in degree " + std::to_string(Fn.n));
    const long q = M.X.m_of(x);
    SparseMap r(F.basis(), M.X.basis());
    for (int a = 0; a < F.rank(); ++a) {
        Scalar sg = sign_of((F.m_of(a) + F.n_of(a)) * q);
        r.set_column(a, act_word(M, Fn.words[a], unit_vec(x)).scaled(sg));
    }
    return r;
}

}  // namespace infsimp
