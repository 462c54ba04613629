#ifndef INFSIMP_FACE_MODULE_HPP
#define INFSIMP_FACE_MODULE_HPP

#include "infsimp/face_family.hpp"
#include "infsimp/omega.hpp"
#include "infsimp/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace infsimp {

/// Throws InputError unless every face d_w has columns only in X_{w.n} and
/// lands in X_{n-k, m+k-1}.
void validate_face_shapes(const BigradedModule& X, const FaceFamily& F);

/// Every wedge tuple (n, tuple) with 1 <= k <= n and n <= n_max.
std::vector<WedgeTuple> all_face_indices(int n_max);

/// d d_w + d_w d = sum over splits sign * d_L d_R on every basis element.
Report check_faces(const BigradedModule& X, const FaceFamily& F);
inline Report check_faces(const FaceModule& M) { return check_faces(M.X, M.faces); }

/// d f_() = f_() d and, for each w,
///   d f_w - f_w d = -d_w f_() + f_() d_w + sum sign (d_L f_R - f_L d_R).
Report check_morphism(const MorphismFamily& f, const FaceModule& src, const FaceModule& tgt);

/// d h_() + h_() d = f_() - g_() and, for each w,
///   d h_w + h_w d = f_w - g_w - d_w h_() - h_() d_w + sum sign (d_L h_R + h_L d_R).
Report check_homotopy(const HomotopyFamily& h, const MorphismFamily& f, const MorphismFamily& g,
                      const FaceModule& src, const FaceModule& tgt);

/// Strict faces d_i become d_(i); every longer face is zero.
FaceFamily strict_to_infinity(const BigradedModule& X, const StrictFaces& faces);

MorphismFamily identity_morphism(const BigradedModule& X);
/// Composite family: (gf)_() = g_() f_() and
///   (gf)_w = g_() f_w + g_w f_() - sum sign g_L f_R.
MorphismFamily compose_morphisms(const MorphismFamily& g, const MorphismFamily& f, int n_max);

/// A differential Lie module over F^!: psi_c : X_{c.t} -> X_{c.s} for each
/// non-unit c, with psi on units equal to d.
struct LieModule {
    BigradedModule X;
    WedgeMaps psi;
};

/// psi_w = -d_w, which is the composite of the action with phi^Omega(w) = [w] = -d_w.
LieModule lie_from_faces(const FaceModule& M);
FaceModule faces_from_lie(const LieModule& L);

/// A left F-infinity module, given by the action of d-basis words.
struct FinfModule {
    BigradedModule X;
    std::function<SparseMap(const OmegaWord&)> act;
    int n_max = 0;
};

/// The action of Omega(psi-check): a d-basis word acts by composing the face
/// maps with hom_compose.
FinfModule lie_to_module(const LieModule& L);
/// Recovers psi from the action on one-letter bracket words.
LieModule module_to_lie(const FinfModule& M);

/// (X (x) Y)_{n,m} = sum over q+l=n, s+t=m of X_{q,s} (x) Y_{l,t}, with
/// d(x (x) y) = dx (x) y + (-1)^{q+s} x (x) dy. Keys "kx * ky". Pairs with
/// q+l > n_cap are dropped when n_cap >= 0.
struct TensorModule {
    BigradedModule X;
    std::map<std::pair<int, int>, int> index;  // (x index, y index) -> basis index
};
TensorModule bigraded_tensor(const BigradedModule& X, const BigradedModule& Y, int n_cap = -1);

/// Faces of the tensor product by the four-branch rule: a tuple below q acts on
/// x, a tuple ending at q gives zero, a tuple above q acts on y shifted by -q
/// with sign (-1)^{(k-1)q+s}, and straddling tuples give zero.
FaceModule tensor_faces(const FaceModule& X, const FaceModule& Y, int n_cap = -1);
/// Same construction, also returning the pair index.
FaceModule tensor_faces(const FaceModule& X, const FaceModule& Y, int n_cap, TensorModule& out_index);

/// d^0 = d, d^k = sum over tuples (-1)^{i1+...+ik} d_(i1..ik) (zero for k > n).
struct DInfty {
    std::vector<SparseMap> d;  // d[k]
};
DInfty dinfty_from_faces(const FaceModule& M);
/// sum over i+j=k of d^i d^j = 0 for every k.
Report check_dinfty(const BigradedModule& X, const DInfty& D);

/// Total complex: basis of X graded by n+m, differential
///   dbar(x) = (-1)^n dx + sum (-1)^{i1+..+ik + n(k-1) + (q-1)k} d_(i1..ik)(x).
struct TotalComplex {
    ModulePtr basis;  // same keys and order as X; grading {n+m}
    SparseMap differential;
    std::map<int, int> rank_by_degree() const;
};
TotalComplex total_complex(const FaceModule& M);

/// The composite d_{w1} ... d_{wr} applied to v (rightmost letter first).
Vec act_word(const FaceModule& M, const OmegaWord& word, const Vec& v);

/// xbar for x in X_{n,q}: a in F[n]_{m,p} maps to (-1)^{(p+m)q} a.x.
SparseMap xbar_map(const FaceModule& M, int x, const FreeFaceModule& Fn);

struct RealizationResult {
    Report report;
    std::map<int, int> quotient_ranks;  // by total degree
    std::map<int, int> total_ranks;     // ranks of Xbar by total degree
    long space_rank = 0;
    long relation_count = 0;
    bool isomorphic = false;
};
/// Builds sum_n Fbar[n] (x) X_n, the relations delta(a) (x) x ~ sign a (x) d_w x,
/// checks that the span is d-stable, that the comparison map to Xbar kills the
/// relations and intertwines the differentials, and compares ranks per degree.
/// Needs field coefficients.
RealizationResult naive_realization_oracle(const FaceModule& M, int n_max, Ring ring);

}  // namespace infsimp

#endif
