#pragma once

#include <cstdint>
#include <vector>

#include "eprsim/sampling.hpp"
#include "eprsim/trajectory.hpp"

namespace eprsim::bohm {

/// P12(yM, yN) = integral over [yM, yM+D] x [yN, yN+D] of the normalized
/// joint density, by adaptive Simpson quadrature (absolute error <= 1e-8).
/// Throws StateError when the normalization was established at another time.
double joint_detection_probability(const ExperimentConfig& config, const Normalization& norm,
                                   double t, double yM, double yN, const DetectionSpec& spec);

struct PatternBin {
    double lo, hi;
    long count_full = 0;     // endpoints of all pairs, both particles pooled
    long count_selected = 0; // endpoints of opposite-side pairs only
    double sqm_density = 0;  // single-particle |psi|^2 marginal at the bin center
};

struct SelectiveReport {
    int pairs = 0;
    int truncated = 0;
    int selected = 0;        // sign(y1) != sign(y2) at the screen
    int removed = 0;         // pairs the selective filter dropped
    int axis_crossings = 0;  // particles whose y changed sign in flight
    double com_mean_t = 0;   // mean (y1+y2)/2 at the screen
    double empty_interval_measured = 0; // longest sub-threshold run, selected histogram
    double empty_interval_formula = 0;  // L = (hbar t / m sigma0^2) <y(0)>
    double empty_threshold_fraction = 0.05;
};

struct Pattern {
    std::vector<PatternBin> bins;
    SelectiveReport report;
};

struct EnsembleOptions {
    StepControl step;
    int threads = 0; // 0 = hardware/EPRLAB_THREADS
    double empty_threshold_fraction = 0.05; // of the selected histogram peak
};

/// Runs `count` seeded pair trajectories to t_final and bins the endpoints;
/// the filtered histogram keeps only pairs detected on opposite sides of the
/// symmetry axis.  Deterministic for fixed (config, seed): one RNG stream
/// per trajectory index.
Pattern ensemble_pattern(const ExperimentConfig& config, int count, std::uint64_t seed,
                         double t_final, const DetectionSpec& spec,
                         const EnsembleOptions& options = {});

/// y1-only endpoint counts from the same ensemble (independent samples for
/// the chi-square comparison against the SQM marginal).
std::vector<long> ensemble_endpoint_histogram(const ExperimentConfig& config, int count,
                                              std::uint64_t seed, double t_final,
                                              const DetectionSpec& spec,
                                              const EnsembleOptions& options = {});

} // namespace eprsim::bohm
