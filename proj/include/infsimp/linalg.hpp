#ifndef INFSIMP_LINALG_HPP
#define INFSIMP_LINALG_HPP

#include "infsimp/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace infsimp {

/// Finite formal sum over an ordered key type. Zero coefficients are never stored.
template <class K>
class LinComb {
public:
    using Map = std::map<K, Scalar>;

    LinComb() = default;
    LinComb(const K& k, const Scalar& c) { add(k, c); }

    void add(const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Scalar(-1)); return *this; }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb scaled(const Scalar& c) const {
        LinComb r;
        r.add(*this, c);
        return r;
    }
    LinComb operator-() const { return scaled(Scalar(-1)); }

    Scalar coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (!(a->first == b->first) || a->second != b->second) return false;
        return true;
    }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    Map terms_;
};

/// Sparse vector over integer basis positions.
using Vec = LinComb<int>;

/// Free module with an ordered list of unique string keys and an integer
/// grading tuple per key (meaning chosen by the owner).
class FreeModule {
public:
    FreeModule() = default;
    explicit FreeModule(Ring r) : ring_(r) {}

    int add(const std::string& key, std::vector<int> grading = {});
    int index_of(const std::string& key) const;  // throws InputError
    bool contains(const std::string& key) const { return index_.count(key) != 0; }
    const std::string& key(int i) const { return keys_.at(i); }
    const std::vector<int>& grading(int i) const { return grading_.at(i); }
    int rank() const { return static_cast<int>(keys_.size()); }
    const Ring& ring() const { return ring_; }
    void set_ring(Ring r) { ring_ = r; }
    bool operator==(const FreeModule& o) const { return keys_ == o.keys_ && grading_ == o.grading_; }

    Vec from_keys(const LinComb<std::string>& v) const;
    LinComb<std::string> to_keys(const Vec& v) const;

private:
    Ring ring_{};
    std::vector<std::string> keys_;
    std::vector<std::vector<int>> grading_;
    std::unordered_map<std::string, int> index_;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

/// Linear map between free modules stored column-wise: source index -> image vector.
class SparseMap {
public:
    SparseMap() = default;
    SparseMap(ModulePtr src, ModulePtr tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    static SparseMap identity(const ModulePtr& m);
    static SparseMap zero(ModulePtr src, ModulePtr tgt) { return SparseMap(std::move(src), std::move(tgt)); }

    const ModulePtr& source() const { return src_; }
    const ModulePtr& target() const { return tgt_; }

    void add_entry(int from, int to, const Scalar& c);
    void set_column(int from, Vec image);
    const Vec& column(int from) const;
    const std::map<int, Vec>& columns() const { return cols_; }
    Scalar entry(int from, int to) const;
    bool is_zero() const { return cols_.empty(); }
    std::size_t nnz() const;

    /// Linear extension of the column table; throws InputError on out-of-range indices.
    Vec apply(const Vec& v) const;
    LinComb<std::string> apply_keys(const LinComb<std::string>& v) const;

    SparseMap& operator+=(const SparseMap& o);
    SparseMap& operator-=(const SparseMap& o);
    friend SparseMap operator+(SparseMap a, const SparseMap& b) { return a += b; }
    friend SparseMap operator-(SparseMap a, const SparseMap& b) { return a -= b; }
    SparseMap scaled(const Scalar& c) const;
    /// Keeps only columns whose source index satisfies pred.
    template <class Pred>
    SparseMap restricted(Pred pred) const {
        SparseMap r(src_, tgt_);
        for (const auto& [j, v] : cols_)
            if (pred(j)) r.cols_.emplace(j, v);
        return r;
    }

    bool operator==(const SparseMap& o) const { return cols_ == o.cols_; }
    bool operator!=(const SparseMap& o) const { return !(*this == o); }

private:
    void check_compatible(const SparseMap& o) const;
    ModulePtr src_, tgt_;
    std::map<int, Vec> cols_;
};

/// g after f. Throws InputError when f's target differs from g's source.
SparseMap compose(const SparseMap& g, const SparseMap& f);

/// Incremental row echelon form over a field. Pivot of a row is its smallest
/// index, so the first nonzero basis position always wins.
class Echelon {
public:
    explicit Echelon(Ring r);

    /// Reduces v against the stored rows; returns the remainder.
    Vec reduce(const Vec& v) const;
    /// Inserts v; returns true when it enlarged the span.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const { return reduce(v).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    /// Back-substitutes so every row vanishes on all other pivots.
    void make_reduced();
    const std::map<int, Vec>& rows() const { return rows_; }

private:
    Ring ring_;
    std::map<int, Vec> rows_;  // pivot -> row with pivot coefficient 1
};

/// Rank of the span of the given vectors (field coefficients).
int rank_of(const std::vector<Vec>& vecs, Ring r);

/// Basis of the kernel of the map sending e_j to images[j], as vectors in
/// the coordinates j = 0..images.size()-1.
std::vector<Vec> kernel(const std::vector<Vec>& images, Ring r);

struct Quotient {
    ModulePtr module;      // basis of V / span(relations)
    SparseMap projection;  // V -> quotient
    std::vector<int> kept; // V-indices that survive as quotient basis elements
};

/// Quotient of V by the span of the relations. Requires field coefficients.
Quotient quotient_by_span(const ModulePtr& V, const std::vector<Vec>& relations);

}  // namespace infsimp

#endif
