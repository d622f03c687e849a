#pragma once

#include "eprsim/errors.hpp"

namespace eprsim::bohm {

/// Single-slit diffraction factor g(theta, theta_i) = sinc(k sigma0 (sin
/// theta - sin theta_i)); sinc(0) = 1.
double slit_diffraction_factor(double theta, double theta_i, double k_sigma0);

/// Two-photon coincidence rate
///   C = g(t1,tA)^2 g(t2,tB)^2 + g(t2,tA)^2 g(t1,tB)^2
///     + 2 g(t1,tA) g(t2,tB) g(t2,tA) g(t1,tB) cos[2 kY (sin t1 - sin t2)].
/// kY and k_sigma0 are the dimensionless products k*Y and k*sigma0.
double coincidence_pattern(double theta1, double theta2, double kY, double k_sigma0,
                           double theta_iA, double theta_iB);

} // namespace eprsim::bohm
