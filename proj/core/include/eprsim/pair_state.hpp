#pragma once

#include <vector>

#include "eprsim/slit_wave.hpp"

namespace eprsim::bohm {

/// The full two-particle amplitude of the configured experiment at the given
/// coordinates (x phases and exchange signs included, unnormalized).
Complex pair_wavefunction(const ExperimentConfig& config, const PairCoordinates& coords);

/// One product term u_k(y1) w_k(y2) of the separated y-amplitude.
struct PairTerm {
    double c0_1, ky_1; // packet guiding particle 1
    double c0_2, ky_2; // packet guiding particle 2
    double coeff;      // +-1
};

/// y-only amplitude S(y1,y2,t) = sum_k coeff_k u_k(y1) w_k(y2).  For every
/// layout the dropped x factors are y-independent scalars on any fixed
/// (x1, x2), so S carries all guidance velocities and detection statistics.
/// (For the two-double-slit layout the exchange sign also lives entirely in
/// that scalar, which is why the terms below do not depend on it.)
std::vector<PairTerm> pair_terms(const ExperimentConfig& config);

Complex reduced_amplitude(const ExperimentConfig& config, double y1, double y2, double t);

/// Modulus^2 scale of a packet product at time t; node thresholds are taken
/// relative to it (or to the running maximum along a trajectory).
double packet_peak_scale(const PhysParams& params, double t);

/// Normalization constant for probability use at a fixed time.
struct Normalization {
    double constant = 0; // c with  integral |c S|^2 dy1 dy2 = 1
    double t = 0;
};

struct GridSpec {
    double extent_sigmas = 8.0; // half-range beyond packet centers, in |sigma_t|
};

/// Computes c such that the quadrature of |c S|^2 over the covered grid is 1.
/// Throws CoverageError when extent_sigmas < 6.
Normalization normalize_config(const ExperimentConfig& config, double t,
                               const GridSpec& grid = {});

/// Integral of |S|^2 over all space at time t (the quantity normalize_config
/// inverts); exposed for the unitarity checks.
double total_probability(const ExperimentConfig& config, double t, const GridSpec& grid = {});

/// Single-particle probability density q(y) = integral |cS(y, y2)|^2 dy2 at
/// the normalization's time.  Precomputes the partner-side cross integrals
/// once so it can be evaluated on dense grids.
class MarginalDensity {
  public:
    MarginalDensity(const ExperimentConfig& config, const Normalization& norm,
                    const GridSpec& grid = {});
    double operator()(double y) const;

  private:
    ExperimentConfig config_;
    double t_;
    double scale_; // c^2
    std::vector<PairTerm> terms_;
    std::vector<Complex> cross_; // integral w_k conj(w_l) dy2, row-major
};

double marginal_density(const ExperimentConfig& config, const Normalization& norm, double y);

} // namespace eprsim::bohm
