#include "infsimp/face_module.hpp"

#include <functional>
#include <tuple>

namespace infsimp {

namespace {

Vec unit_vec(int i) { return Vec(i, Scalar(1)); }

}  // namespace

RealizationResult naive_realization_oracle(const FaceModule& M, int n_max, Ring ring) {
    if (!ring.is_field()) throw UnsupportedCoefficients("the realization oracle needs field coefficients");
    validate_face_shapes(M.X, M.faces);
    const BigradedModule& X = M.X;
    RealizationResult res;
    const int N = std::min(n_max, X.max_n());

    std::vector<FreeFaceModule> F;
    std::vector<DInfty> DF;
    for (int n = 0; n <= N; ++n) {
        F.push_back(build_F_n(n));
        DF.push_back(dinfty_from_faces(F.back().module));
    }
    std::vector<SparseMap> dbarF;
    for (int n = 0; n <= N; ++n) {
        SparseMap s(F[n].module.X.basis(), F[n].module.X.basis());
        for (const SparseMap& dk : DF[n].d) s += dk;
        dbarF.push_back(s);
    }

    // V = sum_n Fbar[n] (x) X_n, graded by total degree.
    auto V = std::make_shared<FreeModule>(ring);
    std::map<std::tuple<int, int, int>, int> vidx;  // (n, a, x)
    std::vector<std::tuple<int, int, int>> vkey;
    for (int n = 0; n <= N; ++n) {
        const BigradedModule& Fn = F[n].module.X;
        for (int a = 0; a < Fn.rank(); ++a)
            for (int x : X.indices_n(n)) {
                int deg = Fn.n_of(a) + Fn.m_of(a) + X.m_of(x);
                vidx[{n, a, x}] = V->add(Fn.key(a) + " | " + X.key(x), {deg});
                vkey.push_back({n, a, x});
            }
    }
    res.space_rank = V->rank();

    SparseMap dV(V, V);
    for (int v = 0; v < V->rank(); ++v) {
        auto [n, a, x] = vkey[v];
        const BigradedModule& Fn = F[n].module.X;
        for (const auto& [a2, c] : dbarF[n].column(a)) dV.add_entry(v, vidx.at({n, a2, x}), c);
        Scalar sg = sign_of(Fn.n_of(a) + Fn.m_of(a));
        for (const auto& [x2, c] : X.d().column(x)) dV.add_entry(v, vidx.at({n, a, x2}), sg * c);
    }

    std::vector<Vec> relations;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            for (const WedgeTuple& w : wedge_tuples(n, k)) {
                SparseMap delta = coface_delta(w, F[n - k], F[n]);
                const BigradedModule& S = F[n - k].module.X;
                for (int a = 0; a < S.rank(); ++a)
                    for (int x : X.indices_n(n)) {
                        Vec rel;
                        for (const auto& [a2, c] : delta.column(a)) rel.add(vidx.at({n, a2, x}), c);
                        long s = S.n_of(a) + S.m_of(a);
                        long q = X.m_of(x);
                        Scalar sg = sign_of(s * (k - 1) + (n + q) * k);
                        for (const auto& [x2, c] : M.faces.apply(w, unit_vec(x)))
                            rel.add(vidx.at({n - k, a, x2}), -sg * c);
                        if (!rel.is_zero()) relations.push_back(rel);
                    }
            }
    res.relation_count = static_cast<long>(relations.size());

    Echelon span(ring);
    for (const Vec& r : relations) span.insert(r);
    for (std::size_t r = 0; r < relations.size(); ++r) {
        ++res.report.checked;
        Vec dr = dV.apply(relations[r]);
        Vec rem = span.reduce(dr);
        if (!rem.is_zero()) res.report.fail("relation " + std::to_string(r), "d(relation) lies in the relation span", V->to_keys(rem));
    }

    // Comparison map to Xbar, recursive in the last letter of a.
    TotalComplex T = total_complex(M);
    std::function<Vec(int, const OmegaWord&, const Vec&)> phi = [&](int n, const OmegaWord& a, const Vec& xv) -> Vec {
        if (a.empty()) return xv;
        const WedgeTuple& g = a.back();
        OmegaWord rest(a.begin(), a.end() - 1);
        Vec out;
        for (const auto& [x, c] : xv) {
            long q = X.m_of(x);
            long k = g.k();
            Scalar sg = sign_of(n + k + (n + q) * k);
            out.add(phi(n - static_cast<int>(k), rest, M.faces.apply(g, unit_vec(x))), sg * c);
        }
        return out;
    };
    auto Phi = [&](const Vec& v) {
        Vec out;
        for (const auto& [i, c] : v) {
            auto [n, a, x] = vkey[i];
            out.add(phi(n, F[n].words[a], unit_vec(x)), c);
        }
        return out;
    };
    for (std::size_t r = 0; r < relations.size(); ++r) {
        ++res.report.checked;
        Vec img = Phi(relations[r]);
        if (!img.is_zero()) res.report.fail("relation " + std::to_string(r), "comparison map kills relations", X.basis()->to_keys(img));
    }
    for (int v = 0; v < V->rank(); ++v) {
        ++res.report.checked;
        Vec diff = Phi(dV.apply(unit_vec(v))) - T.differential.apply(Phi(unit_vec(v)));
        if (!diff.is_zero()) res.report.fail(V->key(v), "comparison map intertwines differentials", X.basis()->to_keys(diff));
    }

    // Ranks per total degree: V minus the relation span, against Xbar.
    std::map<int, int> vrank;
    for (int v = 0; v < V->rank(); ++v) ++vrank[V->grading(v)[0]];
    std::map<int, int> relrank;
    for (const auto& [piv, row] : span.rows()) ++relrank[V->grading(piv)[0]];
    for (const auto& [deg, r] : vrank) res.quotient_ranks[deg] = r - relrank[deg];
    for (int i = 0; i < X.rank(); ++i)
        if (X.n_of(i) <= N) ++res.total_ranks[X.n_of(i) + X.m_of(i)];
    for (auto it = res.quotient_ranks.begin(); it != res.quotient_ranks.end();)
        it = it->second == 0 ? res.quotient_ranks.erase(it) : std::next(it);
    res.isomorphic = res.report.pass() && res.quotient_ranks == res.total_ranks;
    if (res.quotient_ranks != res.total_ranks) res.report.fail("ranks", "quotient rank per degree equals rank of Xbar");
    return res;
}

}  // namespace infsimp
