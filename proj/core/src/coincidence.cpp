#include "eprsim/coincidence.hpp"

#include <cmath>

namespace eprsim::bohm {

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

void check_angle(double theta) {
    if (!(std::abs(theta) < M_PI / 2)) throw SizeError("angles must satisfy |theta| < pi/2");
}

} // namespace

double slit_diffraction_factor(double theta, double theta_i, double k_sigma0) {
    check_angle(theta);
    check_angle(theta_i);
    return sinc(k_sigma0 * (std::sin(theta) - std::sin(theta_i)));
}

double coincidence_pattern(double theta1, double theta2, double kY, double k_sigma0,
                           double theta_iA, double theta_iB) {
    const double g1a = slit_diffraction_factor(theta1, theta_iA, k_sigma0);
    const double g2b = slit_diffraction_factor(theta2, theta_iB, k_sigma0);
    const double g2a = slit_diffraction_factor(theta2, theta_iA, k_sigma0);
    const double g1b = slit_diffraction_factor(theta1, theta_iB, k_sigma0);
    return g1a * g1a * g2b * g2b + g2a * g2a * g1b * g1b +
           2.0 * g1a * g2b * g2a * g1b *
               std::cos(2.0 * kY * (std::sin(theta1) - std::sin(theta2)));
}

} // namespace eprsim::bohm
