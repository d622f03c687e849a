#pragma once

#include <cstdint>
#include <vector>

#include "eprsim/pair_state.hpp"

namespace eprsim::bohm {

/// Quantum-equilibrium samples of the pair at t = 0, deterministic per seed.
/// With com_spread = 0 every pair satisfies (y1+y2)/2 = com_y0 exactly:
/// y1 is drawn from the single-particle marginal and y2 set to the mirror
/// point.  Otherwise the center of mass is drawn from a normal distribution
/// of width com_spread around com_y0 and the relative coordinate from the
/// conditional density |S(c + r/2, c - r/2)|^2.
std::vector<PairCoordinates> sample_initial_positions(const ExperimentConfig& config, int count,
                                                      std::uint64_t seed);

/// Inverse-CDF sampler over a tabulated 1D density.  Exposed for tests.
class GridSampler {
  public:
    GridSampler(std::vector<double> grid, std::vector<double> density);
    double sample(double u01) const; // u01 in [0,1)

  private:
    std::vector<double> grid_;
    std::vector<double> cdf_;
};

} // namespace eprsim::bohm
