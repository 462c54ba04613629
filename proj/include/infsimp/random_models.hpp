#ifndef INFSIMP_RANDOM_MODELS_HPP
#define INFSIMP_RANDOM_MODELS_HPP

#include "infsimp/ainf.hpp"
#include "infsimp/transfer.hpp"

#include <cstdint>
#include <random>

namespace infsimp {

/// Random semi-simplicial set with at most max_rank simplices per level,
/// tensored with the two-cell complex e1 -> c e0. Face assignments are drawn
/// among those that satisfy the simplicial identities; levels stop early when
/// no valid assignment exists.
FaceModule random_semisimplicial_module(std::mt19937_64& rng, int n_max, int max_rank, Ring ring);

/// Random gauge components f_w of bidegree (-k, k) for every wedge with
/// ambient <= n_max, each entry present with probability percent/100.
WedgeMaps random_gauge(const BigradedModule& X, std::mt19937_64& rng, int n_max, int percent);

/// A random semi-simplicial module moved by a random gauge transformation, so
/// that longer faces are generally nonzero.
FaceModule random_face_module(std::uint64_t seed, int n_max = 4, int max_rank = 2, Ring ring = Ring::rationals());

/// X = Y plus an acyclic pair a -> b with b in every bidegree (n, m) from the
/// lowest degree of Y to one above its top degree. The faces of Y are moved by
/// a random gauge that mixes Y and the pairs. eta and xi are the projection
/// and inclusion, and h(b) = -a.
struct ConeExample {
    FaceModule X;
    BigradedModule Y;
    SDRData sdr;
};
ConeExample acyclic_cone_example(const FaceModule& Y, std::uint64_t seed);
/// The same over Y = T(A) truncated at word length max_len.
ConeExample acyclic_cone_example(const AInfAlgebra& A, int max_len, std::uint64_t seed);

}  // namespace infsimp

#endif
