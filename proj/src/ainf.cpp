#include "infsimp/ainf.hpp"

#include <algorithm>
#include <functional>

namespace infsimp {

int AInfAlgebra::add_generator(const std::string& id, int degree) {
    if (id.empty() || id.find_first_of("[]|* ") != std::string::npos)
        throw InputError("generator id '" + id + "' must be nonempty without brackets, bars, stars or spaces");
    for (const auto& g : gens)
        if (g == id) throw InputError("duplicate generator '" + id + "'");
    gens.push_back(id);
    deg.push_back(degree);
    return static_cast<int>(gens.size()) - 1;
}

int AInfAlgebra::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == id) return static_cast<int>(i);
    throw InputError("unknown generator '" + id + "'");
}

namespace {

Vec to_vec(const AInfAlgebra& A, const LinComb<std::string>& v) {
    Vec r;
    for (const auto& [id, c] : v) r.add(A.index_of(id), Scalar(c.value(), A.ring));
    return r;
}

}  // namespace

void AInfAlgebra::set_d(const std::string& from, const LinComb<std::string>& to) {
    d[index_of(from)] = to_vec(*this, to);
}

void AInfAlgebra::set_pi(int n, const std::vector<std::string>& inputs, const LinComb<std::string>& out) {
    if (n < 0) throw InputError("pi_n needs n >= 0");
    if (static_cast<int>(inputs.size()) != n + 2)
        throw InputError("pi_" + std::to_string(n) + " takes " + std::to_string(n + 2) + " inputs");
    AWord w;
    for (const auto& id : inputs) w.push_back(index_of(id));
    pi[n][w] = to_vec(*this, out);
}

int AInfAlgebra::degree(const AWord& w) const {
    int s = 0;
    for (int g : w) s += deg.at(g);
    return s;
}

int AInfAlgebra::max_arity() const {
    int mx = -1;
    for (const auto& [n, table] : pi)
        for (const auto& [in, out] : table)
            if (!out.is_zero()) mx = std::max(mx, n);
    return mx;
}

Vec AInfAlgebra::apply_pi(int n, const AWord& inputs) const {
    auto it = pi.find(n);
    if (it == pi.end()) return {};
    auto jt = it->second.find(inputs);
    return jt == it->second.end() ? Vec{} : jt->second;
}

std::string AInfAlgebra::element_string(const Vec& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [g, c] : v) s += (s.empty() ? "" : " + ") + c.str() + "*" + gens.at(g);
    return s;
}

std::string word_key(const AInfAlgebra& A, const AWord& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + A.gens.at(w[i]);
    return s + "]";
}

void validate_ainf_shapes(const AInfAlgebra& A) {
    const int G = static_cast<int>(A.gens.size());
    if (static_cast<int>(A.deg.size()) != G) throw InputError("generator degree table has the wrong length");
    auto in_range = [&](int g) { return g >= 0 && g < G; };
    for (const auto& [g, v] : A.d) {
        if (!in_range(g)) throw InputError("d on an unknown generator");
        for (const auto& [h, c] : v)
            if (!in_range(h) || A.deg[h] != A.deg[g] - 1)
                throw InputError("d(" + A.gens[g] + ") has a term of the wrong degree");
    }
    for (const auto& [n, table] : A.pi)
        for (const auto& [in, out] : table) {
            if (static_cast<int>(in.size()) != n + 2) throw InputError("pi_" + std::to_string(n) + " entry of wrong arity");
            for (int g : in)
                if (!in_range(g)) throw InputError("pi_" + std::to_string(n) + " entry with an unknown input");
            for (const auto& [h, c] : out)
                if (!in_range(h) || A.deg[h] != A.degree(in) + n)
                    throw InputError("pi_" + std::to_string(n) + " on " + word_key(A, in) + " has an output of the wrong degree");
        }
}

namespace {

Vec d_elem(const AInfAlgebra& A, const Vec& v) {
    Vec r;
    for (const auto& [g, c] : v) {
        auto it = A.d.find(g);
        if (it != A.d.end()) r.add(it->second, c);
    }
    return r;
}

// pi_m on a combination of tensors of length m+2.
Vec pi_on(const AInfAlgebra& A, int m, const LinComb<AWord>& v) {
    Vec r;
    for (const auto& [w, c] : v) r.add(A.apply_pi(m, w), c);
    return r;
}

// (1^{pos} (x) pi_j (x) 1^{rest}) on w with the Koszul sign (-1)^{j * deg(prefix)}.
LinComb<AWord> inner_pi(const AInfAlgebra& A, const AWord& w, int pos, int j) {
    LinComb<AWord> r;
    AWord in(w.begin() + pos, w.begin() + pos + j + 2);
    Vec out = A.apply_pi(j, in);
    if (out.is_zero()) return r;
    int pre = A.degree(AWord(w.begin(), w.begin() + pos));
    Scalar sg = sign_of(static_cast<long>(j) * pre);
    for (const auto& [g, c] : out) {
        AWord nw(w.begin(), w.begin() + pos);
        nw.push_back(g);
        nw.insert(nw.end(), w.begin() + pos + j + 2, w.end());
        r.add(nw, sg * c);
    }
    return r;
}

void all_words_of_length(int G, int L, const std::function<void(const AWord&)>& f) {
    AWord w(L, 0);
    if (G == 0 && L > 0) return;
    while (true) {
        f(w);
        int p = L - 1;
        while (p >= 0 && ++w[p] == G) w[p--] = 0;
        if (p < 0) break;
    }
}

LinComb<std::string> keyed(const AInfAlgebra& A, const LinComb<AWord>& v) {
    LinComb<std::string> r;
    for (const auto& [w, c] : v) r.add(word_key(A, w), c);
    return r;
}

LinComb<std::string> keyed_elem(const AInfAlgebra& A, const Vec& v) {
    LinComb<std::string> r;
    for (const auto& [g, c] : v) r.add(A.gens.at(g), c);
    return r;
}

}  // namespace

LinComb<AWord> tensor_differential(const AInfAlgebra& A, const AWord& w) {
    LinComb<AWord> r;
    int eps = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = A.d.find(w[i]);
        if (it != A.d.end())
            for (const auto& [g, c] : it->second) {
                AWord nw = w;
                nw[i] = g;
                r.add(nw, sign_of(eps) * c);
            }
        eps += A.deg.at(w[i]);
    }
    return r;
}

Report check_ainf(const AInfAlgebra& A, int arity_cap, int degree_cap) {
    validate_ainf_shapes(A);
    Report rep;
    const int G = static_cast<int>(A.gens.size());
    for (int g = 0; g < G; ++g) {
        ++rep.checked;
        Vec dd = d_elem(A, d_elem(A, Vec(g, Scalar(1))));
        if (!dd.is_zero()) rep.fail("d on " + A.gens[g], "d d = 0", keyed_elem(A, dd));
    }
    for (int n = -1; n + 1 <= arity_cap; ++n) {
        all_words_of_length(G, n + 3, [&](const AWord& w) {
            if (A.degree(w) > degree_cap) return;
            ++rep.checked;
            Vec lhs = d_elem(A, A.apply_pi(n + 1, w));
            lhs.add(pi_on(A, n + 1, tensor_differential(A, w)), sign_of(n));
            for (int m = 0; m <= n; ++m)
                for (int t = 1; t <= m + 2; ++t) {
                    Scalar sg = sign_of(static_cast<long>(t) * (n - m + 1) + n + 1);
                    lhs.add(pi_on(A, m, inner_pi(A, w, t - 1, n - m)), -sg);
                }
            if (!lhs.is_zero())
                rep.fail("n=" + std::to_string(n) + " on " + word_key(A, w), "d(pi_{n+1}) = sum pi_m(1..pi_{n-m}..1)",
                         keyed_elem(A, lhs));
        });
    }
    return rep;
}

std::vector<AWord> bar_words(const AInfAlgebra& A, int max_len, int deg_cap) {
    std::vector<AWord> out;
    const int G = static_cast<int>(A.gens.size());
    for (int L = 0; L <= max_len; ++L)
        all_words_of_length(G, L, [&](const AWord& w) {
            if (deg_cap < 0 || A.degree(w) <= deg_cap) out.push_back(w);
        });
    return out;
}

TensorAlgebraModule faces_from_ainf(const AInfAlgebra& A, int max_len, int deg_cap) {
    validate_ainf_shapes(A);
    TensorAlgebraModule T{FaceModule{BigradedModule(A.ring), {}}, bar_words(A, max_len, deg_cap), {}};
    BigradedModule& X = T.M.X;
    for (const AWord& w : T.words) T.index[w] = X.add(word_key(A, w), static_cast<int>(w.size()), A.degree(w));
    SparseMap d(X.basis(), X.basis());
    for (std::size_t j = 0; j < T.words.size(); ++j)
        for (const auto& [v, c] : tensor_differential(A, T.words[j])) d.add_entry(static_cast<int>(j), T.index.at(v), c);
    X.set_d(d);
    const ModulePtr& B = X.basis();
    for (std::size_t idx = 0; idx < T.words.size(); ++idx) {
        const AWord& w = T.words[idx];
        const int n = static_cast<int>(w.size());
        const long q = A.degree(w);
        for (int k = 1; k <= n - 1; ++k)
            for (int j = 1; j <= n - k; ++j) {
                LinComb<AWord> img = inner_pi(A, w, j - 1, k - 1);
                if (img.is_zero()) continue;
                WedgeTuple wt{n, {}};
                for (int a = 0; a < k; ++a) wt.tuple.push_back(j + a);
                Scalar sg = sign_of(static_cast<long>(k) * (q - 1));
                SparseMap& f = T.M.faces.at(wt, B, B);
                for (const auto& [v, c] : img) f.add_entry(static_cast<int>(idx), T.index.at(v), sg * c);
            }
    }
    return T;
}

LinComb<AWord> bar_differential(const AInfAlgebra& A, const AWord& w) {
    const long n = static_cast<long>(w.size());
    LinComb<AWord> r = tensor_differential(A, w).scaled(sign_of(n));
    for (long k = 1; k <= n - 1; ++k)
        for (long i = 1; i <= n - k; ++i) {
            // inner_pi supplies the (-1)^{eps(k-1)} factor.
            Scalar sg = sign_of(k * (k - 1) / 2 + i * k + n * (k - 1));
            r.add(inner_pi(A, w, static_cast<int>(i - 1), static_cast<int>(k - 1)), sg);
        }
    return r;
}

LinComb<AWord> bar_differential(const AInfAlgebra& A, const LinComb<AWord>& v) {
    LinComb<AWord> r;
    for (const auto& [w, c] : v) r.add(bar_differential(A, w), c);
    return r;
}

LinComb<std::pair<AWord, AWord>> bar_coproduct(const AInfAlgebra& A, const AWord& w) {
    LinComb<std::pair<AWord, AWord>> r;
    const long n = static_cast<long>(w.size());
    long eps = 0;
    for (long i = 0; i <= n; ++i) {
        if (i > 0) eps += A.deg.at(w[i - 1]);
        r.add({AWord(w.begin(), w.begin() + i), AWord(w.begin() + i, w.end())}, sign_of((n - i) * eps));
    }
    return r;
}

Report compare_bar_with_total_complex(const AInfAlgebra& A, int max_len, int deg_cap) {
    TensorAlgebraModule T = faces_from_ainf(A, max_len, deg_cap);
    TotalComplex tot = total_complex(T.M);
    Report rep;
    for (std::size_t j = 0; j < T.words.size(); ++j) {
        ++rep.checked;
        LinComb<std::string> lhs = keyed(A, bar_differential(A, T.words[j]));
        LinComb<std::string> rhs = tot.basis->to_keys(tot.differential.column(static_cast<int>(j)));
        if (lhs != rhs) rep.fail(word_key(A, T.words[j]), "bar differential equals total-complex differential", lhs - rhs);
    }
    return rep;
}

Report check_bar_square(const AInfAlgebra& A, int max_len, int deg_cap) {
    Report rep;
    for (const AWord& w : bar_words(A, max_len, deg_cap)) {
        ++rep.checked;
        LinComb<AWord> dd = bar_differential(A, bar_differential(A, w));
        if (!dd.is_zero()) rep.fail(word_key(A, w), "dbar dbar = 0", keyed(A, dd));
    }
    return rep;
}

namespace {

using WPair = std::pair<AWord, AWord>;
using WTriple = std::tuple<AWord, AWord, AWord>;

LinComb<std::string> keyed_pairs(const AInfAlgebra& A, const LinComb<WPair>& v) {
    LinComb<std::string> r;
    for (const auto& [p, c] : v) r.add(word_key(A, p.first) + " (x) " + word_key(A, p.second), c);
    return r;
}

LinComb<std::string> keyed_triples(const AInfAlgebra& A, const LinComb<WTriple>& v) {
    LinComb<std::string> r;
    for (const auto& [t, c] : v)
        r.add(word_key(A, std::get<0>(t)) + " (x) " + word_key(A, std::get<1>(t)) + " (x) " + word_key(A, std::get<2>(t)), c);
    return r;
}

long total_degree(const AInfAlgebra& A, const AWord& w) { return static_cast<long>(w.size()) + A.degree(w); }

Report coalgebra_checks(const AInfAlgebra& A, const std::vector<AWord>& words,
                        const std::function<LinComb<WPair>(const AWord&)>& delta,
                        const std::function<LinComb<AWord>(const AWord&)>& dbar) {
    Report rep;
    for (const AWord& w : words) {
        LinComb<WPair> dw = delta(w);
        ++rep.checked;
        LinComb<WTriple> left, right;
        for (const auto& [p, c] : dw) {
            for (const auto& [q, c2] : delta(p.first)) left.add({q.first, q.second, p.second}, c * c2);
            for (const auto& [q, c2] : delta(p.second)) right.add({p.first, q.first, q.second}, c * c2);
        }
        if (left != right) rep.fail(word_key(A, w), "(Delta (x) 1) Delta = (1 (x) Delta) Delta", keyed_triples(A, left - right));

        ++rep.checked;
        LinComb<AWord> cl, cr;
        for (const auto& [p, c] : dw) {
            if (p.first.empty()) cl.add(p.second, c);
            if (p.second.empty()) cr.add(p.first, c);
        }
        LinComb<AWord> id(w, Scalar(1));
        if (cl != id || cr != id) rep.fail(word_key(A, w), "counit", keyed(A, (cl - id) + (cr - id)));

        ++rep.checked;
        LinComb<WPair> lhs, rhs;
        for (const auto& [v, c] : dbar(w)) lhs.add(delta(v), c);
        for (const auto& [p, c] : dw) {
            for (const auto& [u, c2] : dbar(p.first)) rhs.add({u, p.second}, c * c2);
            Scalar sg = sign_of(total_degree(A, p.first));
            for (const auto& [v, c2] : dbar(p.second)) rhs.add({p.first, v}, sg * c * c2);
        }
        if (lhs != rhs) rep.fail(word_key(A, w), "Delta dbar = (dbar (x) 1 + 1 (x) dbar) Delta", keyed_pairs(A, lhs - rhs));
    }
    return rep;
}

}  // namespace

Report check_bar_coalgebra(const AInfAlgebra& A, int max_len, int deg_cap) {
    validate_ainf_shapes(A);
    return coalgebra_checks(
        A, bar_words(A, max_len, deg_cap), [&](const AWord& w) { return bar_coproduct(A, w); },
        [&](const AWord& w) { return bar_differential(A, w); });
}

FaceModule primed_structure(const FaceModule& T) {
    const BigradedModule& X = T.X;
    FaceModule P{BigradedModule(X.ring()), {}};
    for (int i = 0; i < X.rank(); ++i) P.X.add(X.key(i), X.n_of(i), X.m_of(i));
    SparseMap d(P.X.basis(), P.X.basis());
    for (const auto& [j, col] : X.d().columns())
        for (const auto& [i, c] : col) d.add_entry(j, i, sign_of(X.n_of(j)) * c);
    P.X.set_d(d);
    const ModulePtr& B = P.X.basis();
    for (const auto& [w, f] : T.faces.maps) {
        SparseMap& g = P.faces.at(w, B, B);
        const long k = w.k();
        for (const auto& [j, col] : f.columns()) {
            const long n = X.n_of(j);
            const long q = X.m_of(j);
            Scalar sg = sign_of(n * (k - 1) + k * (q - 1));
            for (const auto& [i, c] : col) g.add_entry(j, i, sg * c);
        }
    }
    return P;
}

Report check_delta_morphism(const AInfAlgebra& A, int max_len) {
    TensorAlgebraModule T = faces_from_ainf(A, max_len);
    FaceModule P = primed_structure(T.M);
    TensorModule idx;
    FaceModule PP = tensor_faces(P, P, max_len, idx);
    MorphismFamily delta;
    delta.base = SparseMap(P.X.basis(), PP.X.basis());
    for (std::size_t j = 0; j < T.words.size(); ++j)
        for (const auto& [pr, c] : bar_coproduct(A, T.words[j]))
            delta.base.add_entry(static_cast<int>(j), idx.index.at({T.index.at(pr.first), T.index.at(pr.second)}), c);
    Report faces = check_faces(P);
    Report rep = check_morphism(delta, P, PP);
    rep.merge(faces);
    return rep;
}

Report classic_bar_compare(const AInfAlgebra& A, int max_len, int deg_cap) {
    validate_ainf_shapes(A);
    if (A.max_arity() > 0) throw InputError("classic bar comparison needs pi_n = 0 for n > 0");
    auto classic_d = [&](const AWord& w) {
        const long n = static_cast<long>(w.size());
        LinComb<AWord> r;
        long eps = 0;
        for (long i = 0; i < n; ++i) {
            auto it = A.d.find(w[i]);
            if (it != A.d.end())
                for (const auto& [g, c] : it->second) {
                    AWord v = w;
                    v[i] = g;
                    r.add(v, sign_of(n + eps) * c);
                }
            eps += A.deg[w[i]];
        }
        for (long i = 1; i < n; ++i) {
            Vec prod = A.apply_pi(0, {w[i - 1], w[i]});
            for (const auto& [g, c] : prod) {
                AWord v(w.begin(), w.begin() + (i - 1));
                v.push_back(g);
                v.insert(v.end(), w.begin() + (i + 1), w.end());
                r.add(v, sign_of(i) * c);
            }
        }
        return r;
    };
    auto deconcat = [&](const AWord& w) {
        LinComb<WPair> r;
        const long n = static_cast<long>(w.size());
        for (long i = 0; i <= n; ++i) {
            AWord a(w.begin(), w.begin() + i), b(w.begin() + i, w.end());
            r.add({a, b}, sign_of((n - i) * A.degree(a)));
        }
        return r;
    };
    Report rep;
    const auto words = bar_words(A, max_len, deg_cap);
    for (const AWord& w : words) {
        ++rep.checked;
        LinComb<AWord> a = bar_differential(A, w), b = classic_d(w);
        if (a != b) rep.fail(word_key(A, w), "bar differential equals the classical two-term differential", keyed(A, a - b));
        ++rep.checked;
        LinComb<WPair> c = bar_coproduct(A, w), e = deconcat(w);
        if (c != e) rep.fail(word_key(A, w), "coproduct equals signed deconcatenation", keyed_pairs(A, c - e));
        ++rep.checked;
        LinComb<AWord> dd;
        for (const auto& [v, x] : b) dd.add(classic_d(v), x);
        if (!dd.is_zero()) rep.fail(word_key(A, w), "classical dbar dbar = 0", keyed(A, dd));
    }
    rep.merge(coalgebra_checks(A, words, deconcat, classic_d));
    return rep;
}

AInfAlgebra example_xy(Ring r) {
    AInfAlgebra A;
    A.ring = r;
    A.add_generator("x", 1);
    A.add_generator("y", 2);
    A.set_pi(0, {"x", "x"}, LinComb<std::string>("y", Scalar(1)));
    return A;
}

AInfAlgebra example_dga(Ring r) {
    AInfAlgebra A;
    A.ring = r;
    A.add_generator("x", 2);
    A.add_generator("x2", 4);
    A.set_pi(0, {"x", "x"}, LinComb<std::string>("x2", Scalar(1)));
    return A;
}

AInfAlgebra example_bad(Ring r) {
    AInfAlgebra A = example_xy(r);
    A.add_generator("z", 3);
    A.set_pi(0, {"y", "x"}, LinComb<std::string>("z", Scalar(1)));
    return A;
}

}  // namespace infsimp
