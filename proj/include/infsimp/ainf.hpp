#ifndef INFSIMP_AINF_HPP
#define INFSIMP_AINF_HPP

#include "infsimp/face_module.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace infsimp {

/// A word of generator indices; also a basis tensor of A^{(x)n}.
using AWord = std::vector<int>;

/// A-infinity algebra on a free graded module with named generators.
/// pi[n] sends basis tensors of length n+2 to A, raising degree by n.
struct AInfAlgebra {
    Ring ring = Ring::integers();
    std::vector<std::string> gens;
    std::vector<int> deg;
    std::map<int, Vec> d;
    std::map<int, std::map<AWord, Vec>> pi;

    int add_generator(const std::string& id, int degree);
    int index_of(const std::string& id) const;  // throws InputError
    void set_d(const std::string& from, const LinComb<std::string>& to);
    void set_pi(int n, const std::vector<std::string>& inputs, const LinComb<std::string>& out);

    int degree(const AWord& w) const;
    int max_arity() const;  // largest n with a nonzero pi_n, or -1
    Vec apply_pi(int n, const AWord& inputs) const;
    std::string element_string(const Vec& v) const;
};

/// "[x|y]" for a word, "[]" for the empty word.
std::string word_key(const AInfAlgebra& A, const AWord& w);

/// Shape checks on the tables (arity, degrees, generator names); throws InputError.
void validate_ainf_shapes(const AInfAlgebra& A);

/// d^2 = 0 on generators and, for -1 <= n <= arity_cap - 1,
///   d pi_{n+1} + (-1)^n pi_{n+1} d
///     = sum_{m=0}^n sum_{t=1}^{m+2} (-1)^{t(n-m+1)+n+1} pi_m(1^{t-1} (x) pi_{n-m} (x) 1^{m-t+2})
/// on every basis tensor of internal degree at most degree_cap.
Report check_ainf(const AInfAlgebra& A, int arity_cap = 4, int degree_cap = 8);

/// Words of length <= max_len and internal degree <= deg_cap (no bound when
/// deg_cap < 0), in length-then-lexicographic order.
std::vector<AWord> bar_words(const AInfAlgebra& A, int max_len, int deg_cap = -1);

/// T(A) truncated to bar_words, with the tensor differential and the faces
///   d_(j..j+k-1) = (-1)^{k(q-1)} 1^{j-1} (x) pi_{k-1} (x) 1^{n-k-j},  1 <= j <= n-k,
/// evaluated with the Koszul rule; every other face is zero.
struct TensorAlgebraModule {
    FaceModule M;
    std::vector<AWord> words;
    std::map<AWord, int> index;
};
TensorAlgebraModule faces_from_ainf(const AInfAlgebra& A, int max_len, int deg_cap = -1);

/// Sum_i (-1)^{eps_i} [.. d a_i ..], eps_i the degree of the letters before a_i.
LinComb<AWord> tensor_differential(const AInfAlgebra& A, const AWord& w);

/// The bar differential
///   (-1)^n sum (-1)^eps [.. d a_i ..]
///   + sum_{k=1}^{n-1} sum_{i=1}^{n-k} (-1)^{k(k-1)/2 + ik + n(k-1) + eps(k-1)} [.. pi_{k-1}(a_i..a_{i+k}) ..].
LinComb<AWord> bar_differential(const AInfAlgebra& A, const AWord& w);
LinComb<AWord> bar_differential(const AInfAlgebra& A, const LinComb<AWord>& v);

/// Delta[a1..an] = sum_i (-1)^{(n-i) eps_i} [a1..ai] (x) [a_{i+1}..an], eps_i = deg a1 + ... + deg ai.
LinComb<std::pair<AWord, AWord>> bar_coproduct(const AInfAlgebra& A, const AWord& w);

/// bar_differential equals the total-complex differential of faces_from_ainf
/// on every listed word, and squares to zero.
Report compare_bar_with_total_complex(const AInfAlgebra& A, int max_len, int deg_cap = -1);
Report check_bar_square(const AInfAlgebra& A, int max_len, int deg_cap = -1);

/// Coassociativity, counit, and Delta dbar = (dbar (x) 1 + 1 (x) dbar) Delta with
/// (1 (x) dbar)(u (x) v) = (-1)^{|u|} u (x) dbar v.
Report check_bar_coalgebra(const AInfAlgebra& A, int max_len, int deg_cap = -1);

/// d' = (-1)^n d and d'_w = (-1)^{n(k-1)+k(q-1)} d_w on X_{n,q}.
FaceModule primed_structure(const FaceModule& T);

/// The split family with base component the coproduct and zero higher
/// components, checked as a morphism from the primed structure to the
/// tensor square of the primed structure.
Report check_delta_morphism(const AInfAlgebra& A, int max_len);

/// For a DGA (pi_n = 0 for n > 0): the bar differential equals the classical
/// two-term formula, the coproduct equals signed deconcatenation, and the
/// square-zero and chain-map properties hold. Throws InputError otherwise.
Report classic_bar_compare(const AInfAlgebra& A, int max_len, int deg_cap = -1);

/// x in degree 1, y in degree 2, d = 0, pi_0(x (x) x) = y.
AInfAlgebra example_xy(Ring r = Ring::rationals());
/// K[x]/(x^3) with x in degree 2: generators x, x2; pi_0(x,x) = x2.
AInfAlgebra example_dga(Ring r = Ring::rationals());
/// example_xy with an extra z in degree 3 and pi_0(y (x) x) = z; fails the
/// n = 0 relation on x (x) x (x) x.
AInfAlgebra example_bad(Ring r = Ring::rationals());

}  // namespace infsimp

#endif
