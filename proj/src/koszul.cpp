#include "infsimp/koszul.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace infsimp {

bool WedgeTuple::valid() const {
    if (n < 0 || k() > n) return false;
    for (int j = 0; j < k(); ++j) {
        if (tuple[j] < 0 || tuple[j] > n) return false;
        if (j > 0 && tuple[j] <= tuple[j - 1]) return false;
    }
    return true;
}

std::string to_string(const WedgeTuple& w) {
    if (w.is_unit()) return "1_" + std::to_string(w.n);
    std::string s = "d[" + std::to_string(w.n) + "](";
    for (int j = 0; j < w.k(); ++j) s += (j ? "," : "") + std::to_string(w.tuple[j]);
    return s + ")";
}

WedgeTuple parse_wedge(const std::string& text) {
    static const std::regex unit_re(R"(1_(\d+))");
    static const std::regex wedge_re(R"(d\[(\d+)\]\((\d+(?:,\d+)*)\))");
    std::smatch m;
    WedgeTuple w;
    if (std::regex_match(text, m, unit_re)) {
        w.n = std::stoi(m[1]);
        return w;
    }
    if (!std::regex_match(text, m, wedge_re)) throw InputError("malformed wedge '" + text + "'");
    w.n = std::stoi(m[1]);
    std::stringstream ss(m[2]);
    std::string item;
    while (std::getline(ss, item, ',')) w.tuple.push_back(std::stoi(item));
    if (!w.valid()) throw InputError("wedge '" + text + "' is not strictly increasing within 0..n");
    return w;
}

std::vector<WedgeTuple> wedge_tuples(int n, int k) {
    std::vector<WedgeTuple> out;
    if (k < 0 || n < 0 || k > n + 1 || n - k < 0) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back({n, cur});
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int inversions(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv;
}

std::vector<int> hat(const std::vector<int>& permuted) {
    std::vector<int> h(permuted.size());
    for (std::size_t a = 0; a < permuted.size(); ++a) {
        int alpha = 0;
        for (std::size_t b = a + 1; b < permuted.size(); ++b)
            if (permuted[b] < permuted[a]) ++alpha;
        h[a] = permuted[a] - alpha;
    }
    return h;
}

std::vector<int> hat(const std::vector<int>& sigma, const std::vector<int>& tuple) {
    std::vector<int> p(sigma.size());
    for (std::size_t a = 0; a < sigma.size(); ++a) p[a] = tuple.at(sigma[a]);
    return hat(p);
}

namespace {

bool increasing(const std::vector<int>& v, std::size_t from, std::size_t to) {
    for (std::size_t a = from + 1; a < to; ++a)
        if (v[a] <= v[a - 1]) return false;
    return true;
}

}  // namespace

std::vector<Split> enumerate_splits(const WedgeTuple& w) {
    std::vector<Split> out;
    const int k = w.k();
    if (k < 2) return out;
    // Both permuted blocks increasing means sigma is the shuffle that lists a
    // chosen subset of positions first and the complement second.
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> sigma;
        for (int a = 0; a < k; ++a)
            if (mask & (1u << a)) sigma.push_back(a);
        const int m = static_cast<int>(sigma.size());
        for (int a = 0; a < k; ++a)
            if (!(mask & (1u << a))) sigma.push_back(a);
        std::vector<int> h = hat(sigma, w.tuple);
        Split sp;
        sp.m = m;
        sp.sign = (inversions(sigma) % 2 == 0) ? -1 : 1;
        sp.left = {w.n - k + m, std::vector<int>(h.begin(), h.begin() + m)};
        sp.right = {w.n, std::vector<int>(h.begin() + m, h.end())};
        sp.sigma = std::move(sigma);
        if (!sp.left.valid() || !sp.right.valid())
            throw std::logic_error("hat block of " + to_string(w) + " left the ordered range");
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end(), [](const Split& a, const Split& b) {
        return std::tie(a.sigma, a.m) < std::tie(b.sigma, b.m);
    });
    return out;
}

std::vector<Split> enumerate_splits_brute(const WedgeTuple& w) {
    std::vector<Split> out;
    const int k = w.k();
    if (k < 2) return out;
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> p(k);
        for (int a = 0; a < k; ++a) p[a] = w.tuple[sigma[a]];
        std::vector<int> h = hat(p);
        for (int m = 1; m < k; ++m) {
            if (!increasing(p, 0, m) || !increasing(p, m, k)) continue;
            Split sp;
            sp.sigma = sigma;
            sp.m = m;
            sp.sign = (inversions(sigma) % 2 == 0) ? -1 : 1;
            sp.left = {w.n - k + m, std::vector<int>(h.begin(), h.begin() + m)};
            sp.right = {w.n, std::vector<int>(h.begin() + m, h.end())};
            out.push_back(std::move(sp));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool sigma_blocks_ordered(const WedgeTuple& w, const std::vector<int>& sigma, int m) {
    std::vector<int> p(sigma.size());
    for (std::size_t a = 0; a < sigma.size(); ++a) p[a] = w.tuple.at(sigma[a]);
    return increasing(p, 0, m) && increasing(p, m, p.size());
}

bool hat_blocks_ordered(const WedgeTuple& w, const std::vector<int>& sigma, int m) {
    std::vector<int> h = hat(sigma, w.tuple);
    return increasing(h, 0, m) && increasing(h, m, h.size());
}

LinComb<WedgePair> reduced_coproduct(const WedgeTuple& w) {
    LinComb<WedgePair> r;
    for (const Split& sp : enumerate_splits(w)) r.add({sp.left, sp.right}, Scalar(sp.sign));
    return r;
}

LinComb<WedgePair> coproduct(const WedgeTuple& w) {
    if (w.is_unit()) return LinComb<WedgePair>({w, w}, Scalar(1));
    LinComb<WedgePair> r = reduced_coproduct(w);
    r.add({WedgeTuple{w.s(), {}}, w}, Scalar(1));
    r.add({w, WedgeTuple{w.t(), {}}}, Scalar(1));
    return r;
}

LinComb<FaceWord> wedge_vector(const WedgeTuple& w) {
    LinComb<FaceWord> r;
    const int k = w.k();
    if (k == 0) return LinComb<FaceWord>(FaceWord{}, Scalar(1));
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> h = hat(sigma, w.tuple);
        FaceWord word(k);
        for (int a = 0; a < k; ++a) word[a] = {h[a], w.n - k + a + 1};
        r.add(word, Scalar(inversions(sigma) % 2 == 0 ? -1 : 1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

namespace {

std::vector<FaceWord> letter_words(int s, int k) {
    std::vector<FaceWord> out;
    FaceWord cur(k);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        int amb = s + pos + 1;
        for (int i = 0; i <= amb; ++i) {
            cur[pos] = {i, amb};
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

DualComponent koszul_dual_generic(const QuadraticPresentation& P, int k, int s, int t, Ring ring) {
    if (!ring.is_field()) throw UnsupportedCoefficients("Koszul dual intersection needs field coefficients");
    DualComponent D;
    if (k < 0 || s < 0 || t - s != k || t > P.n_max) return D;
    D.ambient = letter_words(s, k);
    const int N = static_cast<int>(D.ambient.size());
    if (k <= 1) {
        for (int j = 0; j < N; ++j) D.basis.push_back(Vec(j, Scalar(1, ring)));
        return D;
    }
    // Projection M(x)M -> (M(x)M)/Q for each pair of ambients (a, a+1).
    struct PairQuotient {
        std::map<FaceWord, int> index;
        SparseMap projection;
    };
    std::map<int, PairQuotient> quotients;
    for (int p = 0; p + 1 < k; ++p) {
        int a = s + p + 1;
        auto mod = std::make_shared<FreeModule>(ring);
        PairQuotient pq;
        for (const FaceWord& w : letter_words(a - 1, 2)) pq.index[w] = mod->add(to_string(w));
        std::vector<Vec> rels;
        auto it = P.Q.find({a - 1, a + 1});
        if (it != P.Q.end())
            for (const auto& q : it->second) {
                Vec v;
                for (const auto& [w, c] : q) v.add(pq.index.at(w), c);
                rels.push_back(v);
            }
        pq.projection = quotient_by_span(mod, rels).projection;
        quotients.emplace(p, std::move(pq));
    }
    std::map<std::tuple<int, FaceWord, int>, int> rows;
    std::vector<Vec> images(N);
    for (int j = 0; j < N; ++j) {
        const FaceWord& w = D.ambient[j];
        for (int p = 0; p + 1 < k; ++p) {
            const PairQuotient& pq = quotients.at(p);
            FaceWord pair{w[p], w[p + 1]};
            FaceWord rest = w;
            rest.erase(rest.begin() + p, rest.begin() + p + 2);
            for (const auto& [qi, c] : pq.projection.column(pq.index.at(pair))) {
                auto key = std::make_tuple(p, rest, qi);
                auto [rit, ins] = rows.try_emplace(key, static_cast<int>(rows.size()));
                images[j].add(rit->second, c);
            }
        }
    }
    D.basis = kernel(images, ring);
    return D;
}

Vec ambient_coordinates(const DualComponent& D, const LinComb<FaceWord>& v) {
    Vec r;
    for (const auto& [w, c] : v) {
        auto it = std::lower_bound(D.ambient.begin(), D.ambient.end(), w);
        if (it == D.ambient.end() || *it != w) throw InputError("word " + to_string(w) + " is outside the component");
        r.add(static_cast<int>(it - D.ambient.begin()), c);
    }
    return r;
}

CoalgebraView<WedgeTuple> fshriek_view() {
    CoalgebraView<WedgeTuple> v;
    v.colors = [](const WedgeTuple& w) { return std::make_pair(w.s(), w.t()); };
    v.degree = [](const WedgeTuple& w) { return w.k(); };
    v.is_unit = [](const WedgeTuple& w) { return w.is_unit(); };
    v.coproduct = [](const WedgeTuple& w) { return coproduct(w); };
    return v;
}

}  // namespace infsimp
