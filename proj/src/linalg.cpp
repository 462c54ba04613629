#include "infsimp/linalg.hpp"

#include <algorithm>

namespace infsimp {

int FreeModule::add(const std::string& key, std::vector<int> grading) {
    if (index_.count(key)) throw InputError("duplicate basis key '" + key + "'");
    int i = rank();
    keys_.push_back(key);
    grading_.push_back(std::move(grading));
    index_.emplace(key, i);
    return i;
}

int FreeModule::index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw InputError("unknown basis key '" + key + "'");
    return it->second;
}

Vec FreeModule::from_keys(const LinComb<std::string>& v) const {
    Vec r;
    for (const auto& [k, c] : v) r.add(index_of(k), c);
    return r;
}

LinComb<std::string> FreeModule::to_keys(const Vec& v) const {
    LinComb<std::string> r;
    for (const auto& [i, c] : v) r.add(key(i), c);
    return r;
}

SparseMap SparseMap::identity(const ModulePtr& m) {
    SparseMap r(m, m);
    for (int i = 0; i < m->rank(); ++i) r.add_entry(i, i, Scalar(1, m->ring()));
    return r;
}

void SparseMap::add_entry(int from, int to, const Scalar& c) {
    if (src_ && (from < 0 || from >= src_->rank())) throw InputError("map entry source index out of range");
    if (tgt_ && (to < 0 || to >= tgt_->rank())) throw InputError("map entry target index out of range");
    if (c.is_zero()) return;
    Vec& col = cols_[from];
    col.add(to, c);
    if (col.is_zero()) cols_.erase(from);
}

void SparseMap::set_column(int from, Vec image) {
    if (src_ && (from < 0 || from >= src_->rank())) throw InputError("map column index out of range");
    if (image.is_zero())
        cols_.erase(from);
    else
        cols_[from] = std::move(image);
}

const Vec& SparseMap::column(int from) const {
    static const Vec empty;
    auto it = cols_.find(from);
    return it == cols_.end() ? empty : it->second;
}

Scalar SparseMap::entry(int from, int to) const { return column(from).coeff(to); }

std::size_t SparseMap::nnz() const {
    std::size_t n = 0;
    for (const auto& [j, v] : cols_) n += v.size();
    return n;
}

Vec SparseMap::apply(const Vec& v) const {
    Vec r;
    for (const auto& [j, c] : v) {
        if (src_ && (j < 0 || j >= src_->rank())) throw InputError("vector not supported on the map's source basis");
        auto it = cols_.find(j);
        if (it != cols_.end()) r.add(it->second, c);
    }
    return r;
}

LinComb<std::string> SparseMap::apply_keys(const LinComb<std::string>& v) const {
    if (!src_ || !tgt_) throw InputError("keyed application needs source and target modules");
    return tgt_->to_keys(apply(src_->from_keys(v)));
}

void SparseMap::check_compatible(const SparseMap& o) const {
    if (src_ && o.src_ && src_ != o.src_ && !(*src_ == *o.src_)) throw InputError("map sources differ");
    if (tgt_ && o.tgt_ && tgt_ != o.tgt_ && !(*tgt_ == *o.tgt_)) throw InputError("map targets differ");
}

SparseMap& SparseMap::operator+=(const SparseMap& o) {
    check_compatible(o);
    if (!src_) src_ = o.src_;
    if (!tgt_) tgt_ = o.tgt_;
    for (const auto& [j, v] : o.cols_) {
        Vec& col = cols_[j];
        col += v;
        if (col.is_zero()) cols_.erase(j);
    }
    return *this;
}

SparseMap& SparseMap::operator-=(const SparseMap& o) { return *this += o.scaled(Scalar(-1)); }

SparseMap SparseMap::scaled(const Scalar& c) const {
    SparseMap r(src_, tgt_);
    if (c.is_zero()) return r;
    for (const auto& [j, v] : cols_) r.cols_.emplace(j, v.scaled(c));
    return r;
}

SparseMap compose(const SparseMap& g, const SparseMap& f) {
    if (f.target() && g.source() && f.target() != g.source() && !(*f.target() == *g.source()))
        throw InputError("compose: target of f is not the source of g");
    SparseMap r(f.source(), g.target());
    for (const auto& [j, v] : f.columns()) r.set_column(j, g.apply(v));
    return r;
}

Echelon::Echelon(Ring r) : ring_(r) {
    if (!r.is_field()) throw UnsupportedCoefficients("elimination requires field coefficients (use rat or mod:p)");
}

namespace {
Vec in_ring(const Vec& v, Ring r) {
    Vec out;
    for (const auto& [i, c] : v) out.add(i, Scalar(c.value(), r));
    return out;
}
}  // namespace

Vec Echelon::reduce(const Vec& v) const {
    Vec r = in_ring(v, ring_);
    auto it = r.begin();
    while (it != r.end()) {
        int idx = it->first;
        auto row = rows_.find(idx);
        if (row != rows_.end()) {
            Scalar c = it->second;
            r.add(row->second, -c);
            it = r.terms().upper_bound(idx);
        } else {
            ++it;
        }
    }
    return r;
}

bool Echelon::insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.is_zero()) return false;
    auto lead = r.begin();
    int pivot = lead->first;
    Scalar inv = Scalar(lead->second.value(), ring_).inverse();
    rows_.emplace(pivot, r.scaled(inv));
    return true;
}

void Echelon::make_reduced() {
    for (auto p = rows_.rbegin(); p != rows_.rend(); ++p) {
        int pivot = p->first;
        const Vec& prow = p->second;
        for (auto& [q, row] : rows_) {
            if (q >= pivot) break;
            Scalar c = row.coeff(pivot);
            if (!c.is_zero()) row.add(prow, -c);
        }
    }
}

int rank_of(const std::vector<Vec>& vecs, Ring r) {
    Echelon e(r);
    for (const auto& v : vecs) e.insert(v);
    return e.rank();
}

std::vector<Vec> kernel(const std::vector<Vec>& images, Ring r) {
    if (!r.is_field()) throw UnsupportedCoefficients("kernel requires field coefficients (use rat or mod:p)");
    struct Row {
        Vec image;
        Vec comb;
    };
    std::map<int, Row> rows;
    std::vector<Vec> out;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        Vec img = in_ring(images[j], r);
        Vec comb(j, Scalar(1, r));
        auto it = img.begin();
        while (it != img.end()) {
            int idx = it->first;
            auto row = rows.find(idx);
            if (row != rows.end()) {
                Scalar c = it->second;
                img.add(row->second.image, -c);
                comb.add(row->second.comb, -c);
                it = img.terms().upper_bound(idx);
            } else {
                ++it;
            }
        }
        if (img.is_zero()) {
            out.push_back(comb);
            continue;
        }
        int pivot = img.begin()->first;
        Scalar inv = Scalar(img.begin()->second.value(), r).inverse();
        rows.emplace(pivot, Row{img.scaled(inv), comb.scaled(inv)});
    }
    return out;
}

Quotient quotient_by_span(const ModulePtr& V, const std::vector<Vec>& relations) {
    Ring r = V->ring();
    if (!r.is_field()) throw UnsupportedCoefficients("quotient_by_span requires field coefficients (use rat or mod:p)");
    Echelon e(r);
    for (const auto& v : relations) {
        for (const auto& [i, c] : v)
            if (i < 0 || i >= V->rank()) throw InputError("relation not supported on the module basis");
        e.insert(v);
    }
    e.make_reduced();
    auto Q = std::make_shared<FreeModule>(r);
    std::vector<int> pos(V->rank(), -1);
    std::vector<int> kept;
    for (int i = 0; i < V->rank(); ++i) {
        if (e.rows().count(i)) continue;
        pos[i] = Q->add(V->key(i), V->grading(i));
        kept.push_back(i);
    }
    SparseMap proj(V, Q);
    for (int i = 0; i < V->rank(); ++i) {
        if (pos[i] >= 0) {
            proj.add_entry(i, pos[i], Scalar(1, r));
            continue;
        }
        const Vec& row = e.rows().at(i);
        for (const auto& [c, val] : row)
            if (c != i) proj.add_entry(i, pos.at(c), -val);
    }
    return {Q, proj, kept};
}

}  // namespace infsimp
