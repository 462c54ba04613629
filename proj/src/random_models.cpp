#include "infsimp/random_models.hpp"

#include <algorithm>
#include <functional>

namespace infsimp {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng);
}

Scalar random_unit_coeff(std::mt19937_64& rng, Ring ring) {
    static const long choices[] = {-2, -1, 1, 2};
    return Scalar(choices[uniform(rng, 0, 3)], ring);
}

}  // namespace

FaceModule random_semisimplicial_module(std::mt19937_64& rng, int n_max, int max_rank, Ring ring) {
    // faces[n][s][i] = index at level n-1 of the i-th face of simplex s.
    std::vector<int> count;
    std::vector<std::vector<std::vector<int>>> faces;
    count.push_back(uniform(rng, 1, max_rank));
    faces.emplace_back();
    for (int n = 1; n <= n_max; ++n) {
        const int below = count[n - 1];
        std::vector<std::vector<int>> valid;
        std::vector<int> cur(n + 1, 0);
        while (true) {
            bool ok = true;
            if (n >= 2)
                for (int i = 0; i <= n && ok; ++i)
                    for (int j = i + 1; j <= n && ok; ++j)
                        ok = faces[n - 1][cur[j]][i] == faces[n - 1][cur[i]][j - 1];
            if (ok) valid.push_back(cur);
            int p = n;
            while (p >= 0 && ++cur[p] == below) cur[p--] = 0;
            if (p < 0) break;
        }
        if (valid.empty()) break;
        const int r = uniform(rng, 1, max_rank);
        std::vector<std::vector<int>> level;
        for (int s = 0; s < r; ++s) level.push_back(valid[uniform(rng, 0, static_cast<int>(valid.size()) - 1)]);
        count.push_back(r);
        faces.push_back(std::move(level));
    }

    const Scalar c = random_unit_coeff(rng, ring);
    FaceModule M{BigradedModule(ring), {}};
    std::vector<std::vector<int>> e1(count.size()), e0(count.size());
    for (std::size_t n = 0; n < count.size(); ++n)
        for (int s = 0; s < count[n]; ++s) {
            std::string base = "s" + std::to_string(n) + "_" + std::to_string(s);
            e1[n].push_back(M.X.add(base + "e1", static_cast<int>(n), 1));
            e0[n].push_back(M.X.add(base + "e0", static_cast<int>(n), 0));
        }
    for (std::size_t n = 0; n < count.size(); ++n)
        for (int s = 0; s < count[n]; ++s) M.X.add_d(e1[n][s], e0[n][s], c);
    const ModulePtr& B = M.X.basis();
    for (std::size_t n = 1; n < count.size(); ++n)
        for (int s = 0; s < count[n]; ++s)
            for (int i = 0; i <= static_cast<int>(n); ++i) {
                int t = faces[n][s][i];
                SparseMap& f = M.faces.at(WedgeTuple{static_cast<int>(n), {i}}, B, B);
                f.add_entry(e1[n][s], e1[n - 1][t], Scalar(-1, ring));
                f.add_entry(e0[n][s], e0[n - 1][t], Scalar(1, ring));
            }
    return M;
}

WedgeMaps random_gauge(const BigradedModule& X, std::mt19937_64& rng, int n_max, int percent) {
    WedgeMaps f;
    for (const WedgeTuple& w : all_face_indices(n_max)) {
        for (int j : X.indices_n(w.n))
            for (int i : X.indices(w.s(), X.m_of(j) + w.k()))
                if (uniform(rng, 0, 99) < percent)
                    f.at(w, X.basis(), X.basis()).add_entry(j, i, random_unit_coeff(rng, X.ring()));
    }
    return f;
}

FaceModule random_face_module(std::uint64_t seed, int n_max, int max_rank, Ring ring) {
    std::mt19937_64 rng(seed);
    FaceModule M = random_semisimplicial_module(rng, n_max, max_rank, ring);
    return gauge_transform(M, random_gauge(M.X, rng, n_max, 40));
}

ConeExample acyclic_cone_example(const FaceModule& Ymod, std::uint64_t seed) {
    const BigradedModule& Y = Ymod.X;
    const Ring ring = Y.ring();
    const int max_n = std::max(0, Y.max_n());
    FaceModule X0{BigradedModule(ring), {}};
    for (int i = 0; i < Y.rank(); ++i) X0.X.add(Y.key(i), Y.n_of(i), Y.m_of(i));
    std::vector<std::pair<int, int>> pairs;
    int lo = 0, hi = 0;
    for (int i = 0; i < Y.rank(); ++i) {
        lo = std::min(lo, Y.m_of(i));
        hi = std::max(hi, Y.m_of(i));
    }
    for (int n = 0; n <= max_n; ++n)
        for (int m = lo; m <= hi + 1; ++m) {
            std::string tag = std::to_string(n) + "_" + std::to_string(m);
            int a = X0.X.add("a" + tag, n, m + 1);
            int b = X0.X.add("b" + tag, n, m);
            pairs.push_back({a, b});
        }
    SparseMap d(X0.X.basis(), X0.X.basis());
    for (const auto& [j, col] : Y.d().columns())
        for (const auto& [i, c] : col) d.add_entry(j, i, c);
    for (const auto& [a, b] : pairs) d.add_entry(a, b, Scalar(1, ring));
    X0.X.set_d(d);
    const ModulePtr& B = X0.X.basis();
    for (const auto& [w, f] : Ymod.faces.maps) {
        SparseMap& g = X0.faces.at(w, B, B);
        for (const auto& [j, col] : f.columns())
            for (const auto& [i, c] : col) g.add_entry(j, i, c);
    }

    ConeExample ex{FaceModule{BigradedModule(ring), {}}, Y, {}};
    ex.sdr.eta = SparseMap(B, Y.basis());
    ex.sdr.xi = SparseMap(Y.basis(), B);
    ex.sdr.h = SparseMap(B, B);
    for (int i = 0; i < Y.rank(); ++i) {
        ex.sdr.eta.add_entry(i, i, Scalar(1, ring));
        ex.sdr.xi.add_entry(i, i, Scalar(1, ring));
    }
    for (const auto& [a, b] : pairs) ex.sdr.h.add_entry(b, a, Scalar(-1, ring));

    std::mt19937_64 rng(seed);
    ex.X = gauge_transform(X0, random_gauge(X0.X, rng, max_n, 35));
    return ex;
}

ConeExample acyclic_cone_example(const AInfAlgebra& A, int max_len, std::uint64_t seed) {
    return acyclic_cone_example(faces_from_ainf(A, max_len).M, seed);
}

}  // namespace infsimp
