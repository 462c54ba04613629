#ifndef INFSIMP_COLORED_HPP
#define INFSIMP_COLORED_HPP

#include "infsimp/linalg.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace infsimp {

struct ColorPair {
    int s = 0;
    int t = 0;
    auto operator<=>(const ColorPair&) const = default;
};

/// Colored differential module: basis elements sit in components (s,t,m) and
/// d maps X(s,t)_m to X(s,t)_{m-1}.
class ColoredModule {
public:
    explicit ColoredModule(Ring r = Ring::integers());

    int add(const std::string& key, int s, int t, int m);
    void add_d(const std::string& from, const std::string& to, const Scalar& c);

    const ModulePtr& basis() const { return cmod_; }
    const SparseMap& d() const { return d_; }
    SparseMap& d() { return d_; }
    const Ring& ring() const { return mod_->ring(); }
    int rank() const { return mod_->rank(); }
    int s_of(int i) const { return mod_->grading(i)[0]; }
    int t_of(int i) const { return mod_->grading(i)[1]; }
    int m_of(int i) const { return mod_->grading(i)[2]; }
    std::vector<int> component(int s, int t, int m) const;
    std::vector<std::tuple<int, int, int>> components() const;

    /// Empty string when valid; otherwise a description of the first defect.
    std::string validate() const;

private:
    std::shared_ptr<FreeModule> mod_;
    ModulePtr cmod_;
    SparseMap d_;
};

/// The unit colored algebra K_I on the given colors.
ColoredModule unit_colored(const std::vector<int>& colors, Ring r = Ring::integers());

/// (X (x) Y)(s,t)_m = sum over k of X(s,k)_p (x) Y(k,t)_q, with
/// d(x (x) y) = dx (x) y + (-1)^{s-l+p} x (x) dy for x in X(s,l)_p.
/// Basis keys are "kx (x) ky" joined by the separator " * ".
ColoredModule colored_tensor(const ColoredModule& X, const ColoredModule& Y);

/// Differential bigraded module X_{n,m} with n >= 0 and d of bidegree (0,-1).
class BigradedModule {
public:
    explicit BigradedModule(Ring r = Ring::integers());

    int add(const std::string& key, int n, int m);
    void add_d(int from, int to, const Scalar& c);
    void add_d(const std::string& from, const std::string& to, const Scalar& c);
    void set_d(SparseMap d);

    const ModulePtr& basis() const { return cmod_; }
    const SparseMap& d() const { return d_; }
    const Ring& ring() const { return mod_->ring(); }
    int rank() const { return mod_->rank(); }
    int n_of(int i) const { return mod_->grading(i)[0]; }
    int m_of(int i) const { return mod_->grading(i)[1]; }
    const std::string& key(int i) const { return mod_->key(i); }
    int index_of(const std::string& k) const { return mod_->index_of(k); }
    bool contains(const std::string& k) const { return mod_->contains(k); }
    int max_n() const;
    std::vector<int> indices_n(int n) const;
    std::vector<int> indices(int n, int m) const;
    /// Distinct (n,m) bidegrees that carry basis elements, sorted.
    std::vector<std::pair<int, int>> bidegrees() const;

    std::string validate() const;

    /// Zero map X -> Y (targets in another module).
    SparseMap zero_to(const BigradedModule& Y) const { return SparseMap(cmod_, Y.cmod_); }
    SparseMap identity() const { return SparseMap::identity(cmod_); }

private:
    std::shared_ptr<FreeModule> mod_;
    ModulePtr cmod_;
    SparseMap d_;
};

/// Element of hom(X;Y)(s,t)_m: a map X_{t,*} -> Y_{s,*+m}. The underlying
/// SparseMap is defined on all of X but only columns from X_{t,*} matter.
struct HomElement {
    int s = 0;
    int t = 0;
    int m = 0;
    SparseMap f;
};

/// Restricts f to columns in X_{t,*} and checks the target bidegrees.
HomElement make_hom(const BigradedModule& X, const BigradedModule& Y, int s, int t, int m, const SparseMap& f);

/// d(f) = d f + (-1)^{s-t+m+1} f d.
HomElement hom_differential(const HomElement& f, const BigradedModule& X, const BigradedModule& Y);

/// g f when the inner colors agree, the zero element otherwise.
HomElement hom_compose(const HomElement& g, const HomElement& f);

HomElement hom_identity(const BigradedModule& X, int s);

}  // namespace infsimp

#endif
