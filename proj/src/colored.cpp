#include "infsimp/colored.hpp"

#include <set>

namespace infsimp {

ColoredModule::ColoredModule(Ring r)
    : mod_(std::make_shared<FreeModule>(r)), cmod_(mod_), d_(cmod_, cmod_) {}

int ColoredModule::add(const std::string& key, int s, int t, int m) {
    if (s < 0 || t < 0) throw InputError("colors must be nonnegative");
    return mod_->add(key, {s, t, m});
}

void ColoredModule::add_d(const std::string& from, const std::string& to, const Scalar& c) {
    d_.add_entry(mod_->index_of(from), mod_->index_of(to), Scalar(c.value(), ring()));
}

std::vector<int> ColoredModule::component(int s, int t, int m) const {
    std::vector<int> r;
    for (int i = 0; i < rank(); ++i)
        if (s_of(i) == s && t_of(i) == t && m_of(i) == m) r.push_back(i);
    return r;
}

std::vector<std::tuple<int, int, int>> ColoredModule::components() const {
    std::set<std::tuple<int, int, int>> c;
    for (int i = 0; i < rank(); ++i) c.insert({s_of(i), t_of(i), m_of(i)});
    return {c.begin(), c.end()};
}

std::string ColoredModule::validate() const {
    for (const auto& [j, col] : d_.columns())
        for (const auto& [i, c] : col)
            if (s_of(i) != s_of(j) || t_of(i) != t_of(j) || m_of(i) != m_of(j) - 1)
                return "d does not map " + mod_->key(j) + " into the component below it";
    SparseMap dd = compose(d_, d_);
    if (!dd.is_zero()) return "d∘d is nonzero on " + mod_->key(dd.columns().begin()->first);
    return {};
}

ColoredModule unit_colored(const std::vector<int>& colors, Ring r) {
    ColoredModule K(r);
    for (int s : colors) K.add("1_" + std::to_string(s), s, s, 0);
    return K;
}

ColoredModule colored_tensor(const ColoredModule& X, const ColoredModule& Y) {
    Ring r = X.ring();
    if (!(X.ring() == Y.ring())) throw InputError("colored_tensor: coefficient rings differ");
    ColoredModule T(r);
    std::map<std::pair<int, int>, int> idx;
    for (int a = 0; a < X.rank(); ++a)
        for (int b = 0; b < Y.rank(); ++b) {
            if (X.t_of(a) != Y.s_of(b)) continue;
            std::string key = X.basis()->key(a) + " * " + Y.basis()->key(b);
            idx[{a, b}] = T.add(key, X.s_of(a), Y.t_of(b), X.m_of(a) + Y.m_of(b));
        }
    SparseMap d(T.basis(), T.basis());
    for (const auto& [ab, i] : idx) {
        auto [a, b] = ab;
        for (const auto& [a2, c] : X.d().column(a)) d.add_entry(i, idx.at({a2, b}), c);
        Scalar sg = sign_of(X.s_of(a) - X.t_of(a) + X.m_of(a));
        for (const auto& [b2, c] : Y.d().column(b)) d.add_entry(i, idx.at({a, b2}), sg * c);
    }
    T.d() = d;
    return T;
}

BigradedModule::BigradedModule(Ring r)
    : mod_(std::make_shared<FreeModule>(r)), cmod_(mod_), d_(cmod_, cmod_) {}

int BigradedModule::add(const std::string& key, int n, int m) {
    if (n < 0) throw InputError("bigraded module: first degree must be nonnegative for '" + key + "'");
    return mod_->add(key, {n, m});
}

void BigradedModule::add_d(int from, int to, const Scalar& c) {
    if (n_of(from) != n_of(to) || m_of(to) != m_of(from) - 1)
        throw InputError("d entry " + key(from) + " -> " + key(to) + " has the wrong bidegree");
    d_.add_entry(from, to, Scalar(c.value(), ring()));
}

void BigradedModule::add_d(const std::string& from, const std::string& to, const Scalar& c) {
    add_d(index_of(from), index_of(to), c);
}

void BigradedModule::set_d(SparseMap d) {
    SparseMap nd(cmod_, cmod_);
    for (const auto& [j, col] : d.columns())
        for (const auto& [i, c] : col) nd.add_entry(j, i, c);
    d_ = nd;
}

int BigradedModule::max_n() const {
    int mx = -1;
    for (int i = 0; i < rank(); ++i) mx = std::max(mx, n_of(i));
    return mx;
}

std::vector<int> BigradedModule::indices_n(int n) const {
    std::vector<int> r;
    for (int i = 0; i < rank(); ++i)
        if (n_of(i) == n) r.push_back(i);
    return r;
}

std::vector<int> BigradedModule::indices(int n, int m) const {
    std::vector<int> r;
    for (int i = 0; i < rank(); ++i)
        if (n_of(i) == n && m_of(i) == m) r.push_back(i);
    return r;
}

std::vector<std::pair<int, int>> BigradedModule::bidegrees() const {
    std::set<std::pair<int, int>> s;
    for (int i = 0; i < rank(); ++i) s.insert({n_of(i), m_of(i)});
    return {s.begin(), s.end()};
}

std::string BigradedModule::validate() const {
    for (const auto& [j, col] : d_.columns())
        for (const auto& [i, c] : col)
            if (n_of(i) != n_of(j) || m_of(i) != m_of(j) - 1)
                return "d has the wrong bidegree on " + key(j);
    SparseMap dd = compose(d_, d_);
    if (!dd.is_zero()) return "d∘d is nonzero on " + key(dd.columns().begin()->first);
    return {};
}

HomElement make_hom(const BigradedModule& X, const BigradedModule& Y, int s, int t, int m, const SparseMap& f) {
    HomElement h{s, t, m, SparseMap(X.basis(), Y.basis())};
    for (const auto& [j, col] : f.columns()) {
        if (X.n_of(j) != t) continue;
        for (const auto& [i, c] : col) {
            if (Y.n_of(i) != s || Y.m_of(i) != X.m_of(j) + m)
                throw InputError("map entry " + X.key(j) + " -> " + Y.key(i) + " violates bidegree (" +
                                 std::to_string(s - t) + "," + std::to_string(m) + ")");
            h.f.add_entry(j, i, c);
        }
    }
    return h;
}

HomElement hom_differential(const HomElement& f, const BigradedModule& X, const BigradedModule& Y) {
    SparseMap df = compose(Y.d(), f.f);
    SparseMap fd = compose(f.f, X.d());
    HomElement r{f.s, f.t, f.m - 1, df + fd.scaled(sign_of(f.s - f.t + f.m + 1))};
    return r;
}

HomElement hom_compose(const HomElement& g, const HomElement& f) {
    HomElement r{g.s, f.t, g.m + f.m, SparseMap(f.f.source(), g.f.target())};
    if (g.t != f.s) return r;
    r.f = compose(g.f, f.f);
    return r;
}

HomElement hom_identity(const BigradedModule& X, int s) {
    HomElement r{s, s, 0, SparseMap(X.basis(), X.basis())};
    for (int i : X.indices_n(s)) r.f.add_entry(i, i, Scalar(1, X.ring()));
    return r;
}

}  // namespace infsimp
