#include "infsimp/omega.hpp"

#include <functional>

namespace infsimp {

std::string to_string(const OmegaWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "*" : "") + to_string(w[j]);
    return s;
}

OmegaWord parse_omega_word(const std::string& text) {
    OmegaWord w;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t star = text.find('*', start);
        std::string piece = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
        WedgeTuple g = parse_wedge(piece);
        if (g.is_unit()) throw InputError("unit letter inside word '" + text + "'");
        w.push_back(g);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    if (!omega_composable(w)) throw InputError("word '" + text + "' is not color-composable");
    return w;
}

bool omega_composable(const OmegaWord& w) {
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_unit() || !w[j].valid()) return false;
        if (j + 1 < w.size() && w[j].t() != w[j + 1].s()) return false;
    }
    return true;
}

int finf_degree(const OmegaWord& w) {
    int d = 0;
    for (const auto& g : w) d += g.k() - 1;
    return d;
}

LinComb<OmegaWord> finf_d(const OmegaWord& w) {
    LinComb<OmegaWord> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const Split& sp : enumerate_splits(w[i])) {
            OmegaWord v;
            v.reserve(w.size() + 1);
            v.insert(v.end(), w.begin(), w.begin() + i);
            v.push_back(sp.left);
            v.push_back(sp.right);
            v.insert(v.end(), w.begin() + i + 1, w.end());
            out.add(v, Scalar(sp.sign) * sign_of(static_cast<long>(i)));
        }
    }
    return out;
}

LinComb<OmegaWord> finf_d(const LinComb<OmegaWord>& v) {
    LinComb<OmegaWord> out;
    for (const auto& [w, c] : v) out.add(finf_d(w), c);
    return out;
}

LinComb<FaceWord> phi_shriek(const WedgeTuple& w) {
    if (w.k() != 1) return {};
    return LinComb<FaceWord>(FaceWord{{w.tuple[0], w.n}}, Scalar(-1));
}

FaceElement omega_phi_shriek(const OmegaWord& w) {
    std::function<LinComb<FaceWord>(const WedgeTuple&)> phi = phi_shriek;
    std::function<LinComb<FaceWord>(const FaceWord&, const FaceWord&)> prod = [](const FaceWord& a, const FaceWord& b) {
        return face_product(FaceElement(a, Scalar(1)), FaceElement(b, Scalar(1)));
    };
    return omega_of_cochain(w, phi, prod).scaled(sign_of(static_cast<long>(w.size())));
}

std::vector<OmegaWord> finf_words(int m, int n) {
    std::vector<OmegaWord> out;
    if (m < 0 || n <= m) return out;
    OmegaWord cur;
    std::function<void(int)> rec = [&](int at) {
        if (at == n) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; at + k <= n; ++k)
            for (const WedgeTuple& g : wedge_tuples(at + k, k)) {
                cur.push_back(g);
                rec(at + k);
                cur.pop_back();
            }
    };
    rec(m);
    return out;
}

FreeFaceModule build_F_n(int n) {
    if (n < 0) throw InputError("build_F_n needs n >= 0");
    FreeFaceModule F;
    F.n = n;
    BigradedModule& X = F.module.X;
    F.index[{}] = X.add("1_" + std::to_string(n), n, 0);
    F.words.push_back({});
    for (int m = n - 1; m >= 0; --m)
        for (const OmegaWord& w : finf_words(m, n)) {
            F.index[w] = X.add(to_string(w), m, finf_degree(w));
            F.words.push_back(w);
        }
    SparseMap d(X.basis(), X.basis());
    for (int j = 0; j < X.rank(); ++j) {
        const OmegaWord& w = F.words[j];
        if (w.empty()) continue;
        for (const auto& [v, c] : finf_d(w)) d.add_entry(j, F.index.at(v), c);
    }
    X.set_d(d);
    for (int j = 0; j < X.rank(); ++j) {
        int m = X.n_of(j);
        const OmegaWord& a = F.words[j];
        for (int k = 1; k <= m; ++k)
            for (const WedgeTuple& g : wedge_tuples(m, k)) {
                OmegaWord v{g};
                v.insert(v.end(), a.begin(), a.end());
                F.module.faces.at(g, X.basis(), X.basis()).add_entry(j, F.index.at(v), Scalar(1));
            }
    }
    return F;
}

SparseMap coface_delta(const WedgeTuple& w, const FreeFaceModule& source, const FreeFaceModule& target) {
    if (w.is_unit() || !w.valid()) throw InputError("coface needs a nonempty valid tuple");
    if (source.n != w.s() || target.n != w.t()) throw InputError("coface " + to_string(w) + " has mismatched F[n] modules");
    const BigradedModule& S = source.module.X;
    SparseMap delta(S.basis(), target.module.X.basis());
    const int k = w.k();
    for (int j = 0; j < S.rank(); ++j) {
        OmegaWord v = source.words[j];
        v.push_back(w);
        long e = (w.n - k) + static_cast<long>(S.m_of(j) + S.n_of(j)) * (k - 1);
        delta.add_entry(j, target.index.at(v), sign_of(e));
    }
    return delta;
}

}  // namespace infsimp
