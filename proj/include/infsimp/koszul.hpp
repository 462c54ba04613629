#ifndef INFSIMP_KOSZUL_HPP
#define INFSIMP_KOSZUL_HPP

#include "infsimp/face_algebra.hpp"
#include "infsimp/report.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace infsimp {

/// Basis element of F^!: the hat-wedge of k letters with ambient n, or the
/// coaugmentation unit 1_n when the tuple is empty. Colors (n-k, n), degree k.
struct WedgeTuple {
    int n = 0;
    std::vector<int> tuple;

    int k() const { return static_cast<int>(tuple.size()); }
    int s() const { return n - k(); }
    int t() const { return n; }
    bool is_unit() const { return tuple.empty(); }
    bool valid() const;
    auto operator<=>(const WedgeTuple&) const = default;
};

/// "d[n](i1,...,ik)", or "1_n" for a unit.
std::string to_string(const WedgeTuple& w);
/// Inverse of to_string; throws InputError.
WedgeTuple parse_wedge(const std::string& text);

/// All wedge tuples of length k with ambient n (k = 0 gives the unit).
std::vector<WedgeTuple> wedge_tuples(int n, int k);

/// Number of inversions of a sequence.
int inversions(const std::vector<int>& seq);

/// Hat correction of an already permuted sequence: each entry minus the
/// number of smaller entries to its right.
std::vector<int> hat(const std::vector<int>& permuted);
/// hat applied to (tuple[sigma[0]], ..., tuple[sigma[k-1]]).
std::vector<int> hat(const std::vector<int>& sigma, const std::vector<int>& tuple);

struct Split {
    std::vector<int> sigma;  // positions into the tuple
    int m = 0;
    int sign = 1;
    WedgeTuple left;   // ambient n-k+m
    WedgeTuple right;  // ambient n
};

/// All (sigma, m) whose permuted blocks are both increasing, in the order
/// sigma lexicographic then m increasing.
std::vector<Split> enumerate_splits(const WedgeTuple& w);
/// Same list, found by running over all of Sigma_k and testing the blocks.
std::vector<Split> enumerate_splits_brute(const WedgeTuple& w);
bool sigma_blocks_ordered(const WedgeTuple& w, const std::vector<int>& sigma, int m);
bool hat_blocks_ordered(const WedgeTuple& w, const std::vector<int>& sigma, int m);

using WedgePair = std::pair<WedgeTuple, WedgeTuple>;
/// Full coproduct including the two unit terms.
LinComb<WedgePair> coproduct(const WedgeTuple& w);
/// Coproduct without the unit terms.
LinComb<WedgePair> reduced_coproduct(const WedgeTuple& w);

/// The wedge as a vector in (SM)^{(x)k}: sum over all sigma of
/// (-1)^{inv(sigma)+1} [d_{hat_1}, ..., d_{hat_k}] with unnormalized letters.
LinComb<FaceWord> wedge_vector(const WedgeTuple& w);

/// Basis of the intersection of (SM)^i (x) S^2 Q (x) (SM)^j over i+2+j=k inside
/// (SM)^{(x)k}(s,t), written as combinations of letter words. Throws
/// UnsupportedCoefficients for a non-field ring.
struct DualComponent {
    std::vector<FaceWord> ambient;   // basis of (SM)^{(x)k}(s,t)
    std::vector<Vec> basis;          // intersection basis in ambient coordinates
};
DualComponent koszul_dual_generic(const QuadraticPresentation& P, int k, int s, int t, Ring ring);

/// Coordinates of a letter-word combination in the ambient basis of a component.
Vec ambient_coordinates(const DualComponent& D, const LinComb<FaceWord>& v);

/// A colored graded coalgebra with counit and coaugmentation, accessed
/// through its structure functions. Elements are keyed by C.
template <class C>
struct CoalgebraView {
    std::function<std::pair<int, int>(const C&)> colors;
    std::function<int(const C&)> degree;
    std::function<bool(const C&)> is_unit;
    std::function<LinComb<std::pair<C, C>>(const C&)> coproduct;
};

/// F^! as a CoalgebraView.
CoalgebraView<WedgeTuple> fshriek_view();

/// Checks d(phi) + pi(phi (x) phi) nabla = 0 on every listed basis element.
/// The tensor (phi (x) phi) carries the colored Koszul sign (-1)^{s-t+q} of the
/// left factor c' in C(s,t)_q, since phi has odd weight. The target algebra
/// is given by its differential and product on keys A.
template <class C, class A>
Report check_twisting_cochain(const std::vector<C>& basis, const CoalgebraView<C>& coalg,
                              const std::function<LinComb<A>(const C&)>& phi,
                              const std::function<LinComb<A>(const A&)>& d_target,
                              const std::function<LinComb<A>(const A&, const A&)>& product,
                              const std::function<std::string(const C&)>& name,
                              const std::function<std::string(const A&)>& name_target) {
    Report rep;
    for (const C& c : basis) {
        ++rep.checked;
        LinComb<A> total;
        for (const auto& [a, coef] : phi(c)) total.add(d_target(a), coef);
        for (const auto& [pr, coef] : coalg.coproduct(c)) {
            auto [s, t] = coalg.colors(pr.first);
            Scalar sg = coef * sign_of(s - t + coalg.degree(pr.first));
            LinComb<A> left = phi(pr.first);
            if (left.is_zero()) continue;
            LinComb<A> right = phi(pr.second);
            for (const auto& [a, ca] : left)
                for (const auto& [b, cb] : right) total.add(product(a, b), sg * ca * cb);
        }
        if (!total.is_zero()) {
            LinComb<std::string> disc;
            for (const auto& [a, v] : total) disc.add(name_target(a), v);
            rep.fail(name(c), "d(phi) + phi U phi = 0", disc);
        }
    }
    return rep;
}

}  // namespace infsimp

#endif
