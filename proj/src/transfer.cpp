#include "infsimp/transfer.hpp"

#include <stdexcept>

namespace infsimp {

namespace {

Vec unit_vec(int i) { return Vec(i, Scalar(1)); }

void check_shape(const SparseMap& f, const BigradedModule& S, const BigradedModule& T, int shift,
                 const std::string& name) {
    for (const auto& [j, col] : f.columns()) {
        if (j < 0 || j >= S.rank()) throw InputError(name + ": source index out of range");
        for (const auto& [i, c] : col)
            if (i < 0 || i >= T.rank() || T.n_of(i) != S.n_of(j) || T.m_of(i) != S.m_of(j) + shift)
                throw InputError(name + " sends " + S.key(j) + " outside bidegree shift (0," + std::to_string(shift) + ")");
    }
}

void expect_equal(Report& rep, const std::string& name, const SparseMap& lhs, const SparseMap& rhs,
                  const BigradedModule& S, const BigradedModule& T) {
    SparseMap diff = lhs - rhs;
    for (int j = 0; j < S.rank(); ++j) {
        ++rep.checked;
        const Vec& c = diff.column(j);
        if (!c.is_zero()) rep.fail(name + " on " + S.key(j), name, T.basis()->to_keys(c));
    }
}

using State = std::map<WedgeTuple, Vec>;

// One pass of (1 (x) t)(nabla (x) 1) restricted to c'' non-unit: the unit-left
// term collects t_c v, and each split L (x) R contributes sign L (x) t_R v.
struct Step {
    Vec unit_part;
    State rest;
};

Step perturb(const FaceFamily& faces, const State& state) {
    Step out;
    for (const auto& [c, v] : state) {
        if (v.is_zero()) continue;
        out.unit_part.add(faces.apply(c, v), Scalar(-1));
        for (const Split& sp : enumerate_splits(c)) {
            Vec tv = faces.apply(sp.right, v);
            if (tv.is_zero()) continue;
            out.rest[sp.left].add(tv, Scalar(-sp.sign));
        }
    }
    for (auto it = out.rest.begin(); it != out.rest.end();)
        it = it->second.is_zero() ? out.rest.erase(it) : std::next(it);
    return out;
}

// Lie-side series (1 (x) t)(nabla (x) 1) alternated with (1 (x) h), summed over
// stages and closed off by `last`. A face component is the negative of the
// corresponding Lie component, so callers negate the result.
Vec run_series(const FaceFamily& faces, const WedgeTuple& w, const Vec& init, const SparseMap& h,
               const SparseMap& last, TransferStats* stats) {
    State state{{w, init}};
    Vec result;
    int stages = 0;
    while (!state.empty()) {
        if (++stages > w.k())
            throw std::logic_error("perturbation series for " + to_string(w) + " did not terminate within its length");
        if (stats) stats->summands += static_cast<long>(state.size());
        Step st = perturb(faces, state);
        result += last.apply(st.unit_part);
        State next;
        for (const auto& [c, v] : st.rest) {
            Vec hv = h.apply(v);
            if (!hv.is_zero()) next.emplace(c, std::move(hv));
        }
        state = std::move(next);
    }
    if (stats) stats->max_stages = std::max(stats->max_stages, stages);
    return result;
}

}  // namespace

Report validate_sdr(const BigradedModule& X, const BigradedModule& Y, const SDRData& s) {
    check_shape(s.eta, X, Y, 0, "eta");
    check_shape(s.xi, Y, X, 0, "xi");
    check_shape(s.h, X, X, 1, "h");
    // Pin sources and targets for the composites below.
    const SparseMap eta = SparseMap(X.basis(), Y.basis()) + s.eta;
    const SparseMap xi = SparseMap(Y.basis(), X.basis()) + s.xi;
    const SparseMap h = SparseMap(X.basis(), X.basis()) + s.h;
    Report rep;
    expect_equal(rep, "d eta = eta d", compose(Y.d(), eta), compose(eta, X.d()), X, Y);
    expect_equal(rep, "d xi = xi d", compose(X.d(), xi), compose(xi, Y.d()), Y, X);
    expect_equal(rep, "eta xi = 1", compose(eta, xi), Y.identity(), Y, Y);
    expect_equal(rep, "dh + hd = xi eta - 1", compose(X.d(), h) + compose(h, X.d()), compose(xi, eta) - X.identity(), X, X);
    expect_equal(rep, "eta h = 0", compose(eta, h), X.zero_to(Y), X, Y);
    expect_equal(rep, "h xi = 0", compose(h, xi), Y.zero_to(X), Y, X);
    expect_equal(rep, "hh = 0", compose(h, h), X.zero_to(X), X, X);
    return rep;
}

SDRData identity_sdr(const BigradedModule& X) {
    return SDRData{X.identity(), X.identity(), X.zero_to(X)};
}

FaceFamily transferred_structure(const FaceModule& X, const BigradedModule& Y, const SDRData& s, TransferStats* stats) {
    validate_face_shapes(X.X, X.faces);
    check_shape(s.eta, X.X, Y, 0, "eta");
    check_shape(s.xi, Y, X.X, 0, "xi");
    check_shape(s.h, X.X, X.X, 1, "h");
    FaceFamily out;
    for (const WedgeTuple& w : all_face_indices(Y.max_n())) {
        SparseMap m(Y.basis(), Y.basis());
        for (int y : Y.indices_n(w.n)) {
            Vec v = run_series(X.faces, w, s.xi.apply(unit_vec(y)), s.h, s.eta, stats);
            m.set_column(y, v.scaled(Scalar(-1)));
        }
        if (!m.is_zero()) out.maps.emplace(w, std::move(m));
    }
    return out;
}

TransferredSDR transferred_sdr(const FaceModule& X, const BigradedModule& Y, const SDRData& s) {
    TransferredSDR r;
    r.Y = FaceModule{Y, transferred_structure(X, Y, s, &r.stats)};
    r.xi_bar.base = SparseMap(Y.basis(), X.X.basis()) + s.xi;
    r.eta_bar.base = SparseMap(X.X.basis(), Y.basis()) + s.eta;
    r.h_bar.base = SparseMap(X.X.basis(), X.X.basis()) + s.h;
    for (const WedgeTuple& w : all_face_indices(Y.max_n())) {
        SparseMap m(Y.basis(), X.X.basis());
        for (int y : Y.indices_n(w.n)) m.set_column(y, run_series(X.faces, w, s.xi.apply(unit_vec(y)), s.h, s.h, &r.stats).scaled(Scalar(-1)));
        if (!m.is_zero()) r.xi_bar.higher.maps.emplace(w, std::move(m));
    }
    for (const WedgeTuple& w : all_face_indices(X.X.max_n())) {
        SparseMap e(X.X.basis(), Y.basis());
        SparseMap hh(X.X.basis(), X.X.basis());
        for (int x : X.X.indices_n(w.n)) {
            Vec hx = s.h.apply(unit_vec(x));
            e.set_column(x, run_series(X.faces, w, hx, s.h, s.eta, &r.stats).scaled(Scalar(-1)));
            hh.set_column(x, run_series(X.faces, w, hx, s.h, s.h, &r.stats).scaled(Scalar(-1)));
        }
        if (!e.is_zero()) r.eta_bar.higher.maps.emplace(w, std::move(e));
        if (!hh.is_zero()) r.h_bar.higher.maps.emplace(w, std::move(hh));
    }
    return r;
}

FaceModule gauge_transform(const FaceModule& M, const WedgeMaps& f) {
    validate_face_shapes(M.X, M.faces);
    const BigradedModule& X = M.X;
    const ModulePtr& B = X.basis();
    for (const auto& [w, m] : f.maps)
        for (const auto& [j, col] : m.columns())
            for (const auto& [i, c] : col)
                if (X.n_of(j) != w.n || X.n_of(i) != w.s() || X.m_of(i) != X.m_of(j) + w.k())
                    throw InputError("gauge component " + to_string(w) + " has the wrong bidegree");
    FaceModule out{X, {}};
    // all_face_indices lists wedges by increasing ambient, and every left block
    // of a split has a smaller ambient, so d'_L is already known.
    for (const WedgeTuple& w : all_face_indices(X.max_n())) {
        SparseMap m(B, B);
        if (const SparseMap* dw = M.faces.find(w)) m += *dw;
        if (const SparseMap* fw = f.find(w)) {
            m -= compose(X.d(), *fw);
            m += compose(*fw, X.d());
        }
        for (const Split& sp : enumerate_splits(w)) {
            const SparseMap* dl = out.faces.find(sp.left);
            const SparseMap* fr = f.find(sp.right);
            if (dl && fr) m += compose(*dl, *fr).scaled(Scalar(sp.sign));
            const SparseMap* fl = f.find(sp.left);
            const SparseMap* dr = M.faces.find(sp.right);
            if (fl && dr) m -= compose(*fl, *dr).scaled(Scalar(sp.sign));
        }
        m = m.restricted([&](int j) { return X.n_of(j) == w.n; });
        if (!m.is_zero()) out.faces.maps.emplace(w, std::move(m));
    }
    return out;
}

}  // namespace infsimp
