#include "eprsim/velocity.hpp"

#include <cmath>

namespace eprsim::bohm {

PairVelocity bohm_velocities(const ExperimentConfig& config, const PairCoordinates& coords,
                             double node_fraction) {
    const PhysParams& p = config.params;
    const auto terms = pair_terms(config);

    Complex s = 0.0, ds1 = 0.0, ds2 = 0.0;
    for (const auto& term : terms) {
        const Complex u = detail::packet_y(p, term.c0_1, term.ky_1, coords.y1, coords.t);
        const Complex w = detail::packet_y(p, term.c0_2, term.ky_2, coords.y2, coords.t);
        const Complex uw = term.coeff * u * w;
        s += uw;
        ds1 += uw * detail::packet_y_dlog(p, term.c0_1, term.ky_1, coords.y1, coords.t);
        ds2 += uw * detail::packet_y_dlog(p, term.c0_2, term.ky_2, coords.y2, coords.t);
    }
    if (std::norm(s) < node_fraction * packet_peak_scale(p, coords.t)) {
        throw NodeError("guidance velocity requested at a wavefunction node", coords.y1,
                        coords.y2, coords.t);
    }
    const double scale = p.hbar / p.mass;
    return {scale * std::imag(ds1 / s), scale * std::imag(ds2 / s)};
}

double momentum_eigen_check(const ExperimentConfig& config, const PairCoordinates& coords,
                            double fd_step) {
    if (config.layout != Layout::TwoDoubleSlit) {
        throw SizeError("momentum eigenfunction check applies to the two-double-slit layout");
    }
    const PhysParams& p = config.params;
    const double h = fd_step * p.sigma0;

    auto psi = [&](double y1, double y2) {
        PairCoordinates c = coords;
        c.y1 = y1;
        c.y2 = y2;
        return pair_wavefunction(config, c);
    };

    const Complex center = psi(coords.y1, coords.y2);
    if (std::norm(center) < 1e-12 * packet_peak_scale(p, coords.t)) {
        throw NodeError("eigenfunction residual requested at a node", coords.y1, coords.y2,
                        coords.t);
    }
    const Complex d1 = (psi(coords.y1 + h, coords.y2) - psi(coords.y1 - h, coords.y2)) / (2 * h);
    const Complex d2 = (psi(coords.y1, coords.y2 + h) - psi(coords.y1, coords.y2 - h)) / (2 * h);

    const Complex i_hbar(0.0, p.hbar);
    const Complex lhs = -i_hbar * (d1 + d2);
    const Complex rhs = i_hbar * (coords.y1 + coords.y2) /
                        (2.0 * p.sigma0 * p.sigma_t(coords.t)) * center;
    return std::abs(lhs - rhs) / std::abs(center);
}

} // namespace eprsim::bohm
