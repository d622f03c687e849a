#include "eprsim/slit_wave.hpp"

#include <cmath>

namespace eprsim::bohm {

namespace detail {

Complex packet_y(const PhysParams& p, double c0, double ky, double y, double t) {
    const Complex st = p.sigma_t(t);
    const double u = p.hbar * ky / p.mass; // y drift speed
    const Complex prefactor =
        std::pow(2.0 * M_PI * st * st, -0.25); // principal branch; arg(st^2) in [0, pi)
    const double yc = y - c0 - u * t;
    const Complex envelope = std::exp(-yc * yc / (4.0 * p.sigma0 * st));
    const double phase = ky * (y - c0) - p.hbar * ky * ky * t / (2.0 * p.mass);
    return prefactor * envelope * std::exp(Complex(0.0, phase));
}

Complex packet_y_dlog(const PhysParams& p, double c0, double ky, double y, double t) {
    const Complex st = p.sigma_t(t);
    const double u = p.hbar * ky / p.mass;
    return -(y - c0 - u * t) / (2.0 * p.sigma0 * st) + Complex(0.0, ky);
}

// (c0, ky) of each slit packet.  The primed packets must mirror-pair with
// the unprimed ones (A with B', B with A') so the pair state stays an exact
// eigenfunction of the total y momentum; the uncorrected variant flips the
// primed centers instead, reproducing the printed sign slip.
void packet_params(Slit slit, const PhysParams& p, bool uncorrected, double& c0, double& ky) {
    switch (slit) {
    case Slit::A: c0 = p.slit_y; ky = p.k_y; return;
    case Slit::B: c0 = -p.slit_y; ky = -p.k_y; return;
    case Slit::APrime:
        c0 = uncorrected ? -p.slit_y : p.slit_y;
        ky = uncorrected ? -p.k_y : p.k_y;
        return;
    case Slit::BPrime:
        c0 = uncorrected ? p.slit_y : -p.slit_y;
        ky = uncorrected ? p.k_y : -p.k_y;
        return;
    }
    throw SizeError("unknown slit");
}

} // namespace detail

static Complex x_part(Slit slit, const PhysParams& p, double x, double t) {
    const bool primed = (slit == Slit::APrime || slit == Slit::BPrime);
    const double phase_x = primed ? -p.k_x * (x + p.slit_x) : p.k_x * (x - p.slit_x);
    const double phase_e = -p.hbar * p.k_x * p.k_x * t / (2.0 * p.mass);
    return std::exp(Complex(0.0, phase_x + phase_e));
}

Complex slit_wave(Slit slit, const PhysParams& params, double x, double y, double t) {
    if (t < 0) throw SizeError("slit_wave requires t >= 0");
    double c0, ky;
    detail::packet_params(slit, params, false, c0, ky);
    return detail::packet_y(params, c0, ky, y, t) * x_part(slit, params, x, t);
}

Complex slit_wave_dlog_dy(Slit slit, const PhysParams& params, double y, double t) {
    double c0, ky;
    detail::packet_params(slit, params, false, c0, ky);
    return detail::packet_y_dlog(params, c0, ky, y, t);
}

Complex slit_wave_y_part(Slit slit, const PhysParams& params, double y, double t) {
    double c0, ky;
    detail::packet_params(slit, params, false, c0, ky);
    return detail::packet_y(params, c0, ky, y, t);
}

} // namespace eprsim::bohm
