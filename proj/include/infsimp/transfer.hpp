#ifndef INFSIMP_TRANSFER_HPP
#define INFSIMP_TRANSFER_HPP

#include "infsimp/face_module.hpp"

namespace infsimp {

/// Strong deformation retract data between bigraded modules: eta : X -> Y and
/// xi : Y -> X chain maps of bidegree (0,0), h : X_{*,m} -> X_{*,m+1}.
struct SDRData {
    SparseMap eta;
    SparseMap xi;
    SparseMap h;
};

/// Checks eta and xi are chain maps, eta xi = 1, dh + hd = xi eta - 1,
/// eta h = 0, h xi = 0 and hh = 0. Throws InputError on shape mismatch.
Report validate_sdr(const BigradedModule& X, const BigradedModule& Y, const SDRData& s);

/// The identity SDR of X onto itself.
SDRData identity_sdr(const BigradedModule& X);

struct TransferStats {
    int max_stages = 0;     // largest number of perturbation stages used for one wedge
    long summands = 0;      // number of (wedge, vector) pairs pushed through the series
};

/// Transferred faces on Y. The Lie structure t_c = -d_c is perturbed along h;
/// every stage strictly shortens the wedge, so a wedge of length k needs at
/// most k stages and the evaluation throws std::logic_error otherwise.
FaceFamily transferred_structure(const FaceModule& X, const BigradedModule& Y, const SDRData& s,
                                 TransferStats* stats = nullptr);

struct TransferredSDR {
    FaceModule Y;              // Y with the transferred faces
    MorphismFamily xi_bar;     // Y -> X
    MorphismFamily eta_bar;    // X -> Y
    HomotopyFamily h_bar;      // X -> X, between xi_bar eta_bar and the identity
    TransferStats stats;
};
TransferredSDR transferred_sdr(const FaceModule& X, const BigradedModule& Y, const SDRData& s);

/// Transports faces along f with f_() = id: returns (X, d') with
///   d'_w = d_w - (d f_w - f_w d) + sum sign (d'_L f_R - f_L d_R),
/// so that f is a morphism (X, d) -> (X, d').
FaceModule gauge_transform(const FaceModule& M, const WedgeMaps& f_higher);

}  // namespace infsimp

#endif
