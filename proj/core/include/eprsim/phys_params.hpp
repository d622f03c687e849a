#pragma once

#include <complex>
#include <vector>

#include "eprsim/errors.hpp"

namespace eprsim::bohm {

using Complex = std::complex<double>;

/// Physical constants and slit geometry.  Default values give the
/// dimensionless system hbar = m = sigma0 = 1 in which the spreading
/// parameter is a = hbar t / (2 m sigma0^2) = t/2.
struct PhysParams {
    double hbar = 1.0;
    double mass = 1.0;
    double sigma0 = 1.0;   // slit half-width
    double slit_y = 1.0;   // Y, slit-center offset from the axis
    double slit_x = 0.0;   // d, slit-plane offset (two-double-slit only)
    double k_x = 5.0;
    double k_y = 0.0;
    double screen_x = 10.0; // D

    void validate() const {
        if (hbar <= 0 || mass <= 0 || sigma0 <= 0 || slit_y <= 0 || k_x <= 0 ||
            k_y < 0 || slit_x < 0 || screen_x <= 0) {
            throw SizeError("invalid physical parameters");
        }
    }

    /// Arrival time of the plane-wave x motion at the screen, t = D m / (hbar k_x).
    double screen_time() const { return screen_x * mass / (hbar * k_x); }

    /// a(t) = hbar t / (2 m sigma0^2); every inequality in the analysis is
    /// phrased through this ratio.
    double spread_ratio(double t) const { return hbar * t / (2.0 * mass * sigma0 * sigma0); }

    /// sigma_t = sigma0 (1 + i a(t)).
    Complex sigma_t(double t) const { return sigma0 * Complex(1.0, spread_ratio(t)); }

    /// |sigma_t| = sigma0 sqrt(1 + a^2), the envelope width at time t.
    double envelope_width(double t) const {
        const double a = spread_ratio(t);
        return sigma0 * std::sqrt(1.0 + a * a);
    }
};

enum class Layout {
    TwoDoubleSlit,              // EPR pair through two facing double slits
    SingleDoubleSlitEntangled,  // one double slit, entangled pair
    SingleDoubleSlitDisentangled // one double slit, independent pair
};

enum class Exchange { Bosonic, Fermionic };

struct ExperimentConfig {
    PhysParams params;
    Layout layout = Layout::TwoDoubleSlit;
    Exchange exchange = Exchange::Bosonic; // ignored for the disentangled layout
    double com_y0 = 0.0;    // center-of-mass offset y(0)
    double com_spread = 0.0; // Delta y(0)
    // Reproduces the sign slip in the printed time-evolved primed packets:
    // flips the A'/B' Gaussian centers (and matching k_y phases).
    bool uncorrected_prime_packets = false;

    void validate() const {
        params.validate();
        if (com_spread < 0) throw SizeError("com_spread must be >= 0");
    }
};

/// Transverse coordinates of the pair; x positions are deterministic
/// (x = ±d + (hbar k_x/m) t as the layout dictates).
struct PairCoordinates {
    double y1 = 0, y2 = 0;
    double t = 0;
    double x1 = 0, x2 = 0;
};

/// x positions of the two particles at time t, per layout.
inline void on_track_x(const ExperimentConfig& config, double t, double& x1, double& x2) {
    const double vx = config.params.hbar * config.params.k_x / config.params.mass;
    if (config.layout == Layout::TwoDoubleSlit) {
        x1 = config.params.slit_x + vx * t;
        x2 = -config.params.slit_x - vx * t;
    } else {
        x1 = x2 = vx * t;
    }
}

enum class SampleFlag : int { Normal = 0, NearNode = 1, Truncated = 2 };

struct TrajectorySample {
    double t, y1, y2, x1, x2;
    SampleFlag flag;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool truncated = false;
    int halvings_used = 0;
};

struct DetectionSpec {
    double detector_size = 0.1; // Delta
    int bins = 64;
    double y_lo = -10.0, y_hi = 10.0;

    void validate() const {
        if (detector_size <= 0 || bins <= 0 || y_hi <= y_lo) {
            throw SizeError("invalid detection spec");
        }
    }
};

} // namespace eprsim::bohm
