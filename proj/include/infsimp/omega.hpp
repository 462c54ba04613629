#ifndef INFSIMP_OMEGA_HPP
#define INFSIMP_OMEGA_HPP

#include "infsimp/face_family.hpp"
#include "infsimp/koszul.hpp"

#include <map>
#include <string>
#include <vector>

namespace infsimp {

/// Word of reduced coalgebra letters. For F-infinity the letters are the
/// generators d^n_(i1..ik), written in the d-basis; ambient colors increase
/// from left to right.
using OmegaWord = std::vector<WedgeTuple>;

std::string to_string(const OmegaWord& w);
/// Parses "d[n](..)*d[n'](..)"; throws InputError.
OmegaWord parse_omega_word(const std::string& text);

bool omega_composable(const OmegaWord& w);
/// Degree sum (k_j - 1) of the generators.
int finf_degree(const OmegaWord& w);

/// Generic co-B differential
///   d[c1..ck] = sum_i (-1)^{i + mu_i} [c1 .. nabla-bar(c_i) .. ck],
///   mu_i = s_1 - t_i' + q_1 + ... + q_{i-1} + q_i'
/// with c_i' in C(s_i, t_i')_{q_i'} the left factor, evaluated on bracket words.
template <class C>
LinComb<std::vector<C>> omega_differential(const std::vector<C>& word, const CoalgebraView<C>& coalg) {
    LinComb<std::vector<C>> out;
    if (word.empty()) return out;
    const int s1 = coalg.colors(word.front()).first;
    int prefix = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (const auto& [pr, c] : coalg.coproduct(word[i])) {
            if (coalg.is_unit(pr.first) || coalg.is_unit(pr.second)) continue;
            int t_left = coalg.colors(pr.first).second;
            int mu = s1 - t_left + prefix + coalg.degree(pr.first);
            std::vector<C> w;
            w.reserve(word.size() + 1);
            w.insert(w.end(), word.begin(), word.begin() + i);
            w.push_back(pr.first);
            w.push_back(pr.second);
            w.insert(w.end(), word.begin() + i + 1, word.end());
            out.add(w, c * sign_of(static_cast<long>(i) + 1 + mu));
        }
        prefix += coalg.degree(word[i]);
    }
    return out;
}

template <class C>
LinComb<std::vector<C>> omega_differential(const LinComb<std::vector<C>>& v, const CoalgebraView<C>& coalg) {
    LinComb<std::vector<C>> out;
    for (const auto& [w, c] : v) out.add(omega_differential(w, coalg), c);
    return out;
}

/// The generator differential d(d_w) = sum over splits sign * d_L d_R,
/// extended to words as a derivation with sign (-1)^{i-1} on the i-th letter.
/// In bracket coordinates this is the negative of the co-B differential,
/// because d_w corresponds to -[w].
LinComb<OmegaWord> finf_d(const OmegaWord& w);
LinComb<OmegaWord> finf_d(const LinComb<OmegaWord>& v);

/// Omega(phi)[c1..ck] = phi(c1) phi(c2) ... phi(ck) (right-nested product).
template <class C, class A>
LinComb<A> omega_of_cochain(const std::vector<C>& word, const std::function<LinComb<A>(const C&)>& phi,
                            const std::function<LinComb<A>(const A&, const A&)>& product) {
    if (word.empty()) throw InputError("omega_of_cochain needs a nonempty word");
    LinComb<A> acc = phi(word.back());
    for (std::size_t j = word.size() - 1; j-- > 0;) {
        LinComb<A> left = phi(word[j]);
        LinComb<A> next;
        for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : acc) next.add(product(a, b), ca * cb);
        acc = next;
        if (acc.is_zero()) break;
    }
    return acc;
}

/// phi^!: [d_i] maps to d_i, so the length-one hat-wedge (which is -[d_i])
/// maps to -d_i; longer wedges and units map to zero.
LinComb<FaceWord> phi_shriek(const WedgeTuple& w);
/// Omega(phi^!) on a d-basis word of F-infinity: product of the face letters
/// when every generator has length one, zero otherwise.
FaceElement omega_phi_shriek(const OmegaWord& w);

/// All composable d-basis words with colors (m, n) and total generator
/// length n-m (letter-count r, degree n-m-r). The empty word is excluded.
std::vector<OmegaWord> finf_words(int m, int n);

/// F[n]: basis "1_n" at (n,0) and every d-basis word with colors (m,n) at
/// bidegree (m, degree); d = finf_d; faces act by left multiplication.
struct FreeFaceModule {
    FaceModule module;
    int n = 0;
    std::map<OmegaWord, int> index;  // the unit has the empty word as key
    /// Word of a basis index (empty for 1_n).
    std::vector<OmegaWord> words;
};
FreeFaceModule build_F_n(int n);

/// Coface delta^{tuple}: F[n-k] -> F[n],
///   a in F[n-k]_{m,p}  |->  (-1)^{n-k + (p+m)(k-1)} a * d^n_(tuple).
SparseMap coface_delta(const WedgeTuple& w, const FreeFaceModule& source, const FreeFaceModule& target);

}  // namespace infsimp

#endif
