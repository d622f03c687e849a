#pragma once

#include "eprsim/phys_params.hpp"

namespace eprsim::bohm {

enum class Slit { A, B, APrime, BPrime };

/// Soft-edged slit packet at time t: a Gaussian of half-width sigma0 in y
/// riding on a plane wave in x.  A peaks at +Y moving with +k_y, B is its
/// mirror; the primed packets share the y profiles but run in -x from the
/// plane at -d.  The t = 0 forms follow the initial Gaussians, and the time
/// evolution is exact free-Schroedinger propagation.
Complex slit_wave(Slit slit, const PhysParams& params, double x, double y, double t);

/// d/dy of log(slit_wave); analytic, used by the guidance velocities.
Complex slit_wave_dlog_dy(Slit slit, const PhysParams& params, double y, double t);

/// y-only factor of the packet (the x plane wave and its energy phase
/// removed); used where the x parts cancel exactly.
Complex slit_wave_y_part(Slit slit, const PhysParams& params, double y, double t);

namespace detail {
/// Gaussian packet with t=0 center c0 and wavenumber ky (both signed).
Complex packet_y(const PhysParams& p, double c0, double ky, double y, double t);
Complex packet_y_dlog(const PhysParams& p, double c0, double ky, double y, double t);
/// (c0, ky) assignment per slit; `uncorrected` flips the primed packets.
void packet_params(Slit slit, const PhysParams& p, bool uncorrected, double& c0, double& ky);
} // namespace detail

} // namespace eprsim::bohm
