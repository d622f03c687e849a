#pragma once

#include "eprsim/pair_state.hpp"

namespace eprsim::bohm {

struct PairVelocity {
    double v1, v2;
};

/// Guidance velocities (hbar/m) Im(d_y_i psi / psi).  The x-dependent factors
/// are y-independent scalars on any fixed (x1, x2) and cancel in the ratio,
/// so the velocities come from the reduced y amplitude; they are invariant
/// under any nonzero rescaling of psi.  Throws NodeError when |S|^2 falls
/// under node_fraction times the packet peak scale.
PairVelocity bohm_velocities(const ExperimentConfig& config, const PairCoordinates& coords,
                             double node_fraction = 1e-10);

/// Residual of the total-momentum eigenfunction identity
///   (-i hbar)(d_y1 + d_y2) psi = i hbar ((y1+y2)/(2 sigma0 sigma_t)) psi,
/// computed with central finite differences of the full pair amplitude and
/// normalized by |psi|.  Two-double-slit layout only.
double momentum_eigen_check(const ExperimentConfig& config, const PairCoordinates& coords,
                            double fd_step = 1e-5);

} // namespace eprsim::bohm
