#include "eprsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace eprsim::bohm {

GridSampler::GridSampler(std::vector<double> grid, std::vector<double> density)
    : grid_(std::move(grid)) {
    if (grid_.size() < 2 || grid_.size() != density.size()) {
        throw SizeError("sampler needs matching grid and density tables");
    }
    cdf_.resize(grid_.size());
    cdf_[0] = 0.0;
    for (size_t i = 1; i < grid_.size(); ++i) {
        const double dx = grid_[i] - grid_[i - 1];
        cdf_[i] = cdf_[i - 1] + 0.5 * (std::max(density[i], 0.0) + std::max(density[i - 1], 0.0)) * dx;
    }
    const double total = cdf_.back();
    if (!(total > 0.0)) throw StateError("density table integrates to zero");
    for (double& c : cdf_) c /= total;
}

double GridSampler::sample(double u01) const {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u01);
    const size_t hi = std::min<size_t>(std::max<size_t>(it - cdf_.begin(), 1), cdf_.size() - 1);
    const size_t lo = hi - 1;
    const double span = cdf_[hi] - cdf_[lo];
    const double f = span > 0 ? (u01 - cdf_[lo]) / span : 0.5;
    return grid_[lo] + f * (grid_[hi] - grid_[lo]);
}

namespace {

constexpr int kGridPoints = 16384;

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

// Range of y covered by the particle-1 packets at t = 0.
void y_range(const ExperimentConfig& config, double pad_sigmas, double& lo, double& hi) {
    const auto terms = pair_terms(config);
    lo = 1e300;
    hi = -1e300;
    for (const auto& t : terms) {
        lo = std::min({lo, t.c0_1, t.c0_2});
        hi = std::max({hi, t.c0_1, t.c0_2});
    }
    lo -= pad_sigmas * config.params.sigma0;
    hi += pad_sigmas * config.params.sigma0;
}

} // namespace

std::vector<PairCoordinates> sample_initial_positions(const ExperimentConfig& config, int count,
                                                      std::uint64_t seed) {
    config.validate();
    if (count < 1) throw SizeError("count must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<PairCoordinates> out;
    out.reserve(count);

    double x1, x2;
    on_track_x(config, 0.0, x1, x2);

    double lo, hi;
    y_range(config, 10.0, lo, hi);

    if (config.com_spread == 0.0) {
        // Exact mirror pairs about com_y0; y1 follows the single-particle
        // marginal of |S|^2.
        const Normalization norm = normalize_config(config, 0.0);
        const MarginalDensity marginal(config, norm);
        const auto grid = linspace(lo, hi, kGridPoints);
        std::vector<double> density(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) density[i] = marginal(grid[i]);
        const GridSampler sampler(grid, density);
        for (int i = 0; i < count; ++i) {
            const double y1 = sampler.sample(uniform(rng));
            out.push_back({y1, 2.0 * config.com_y0 - y1, 0.0, x1, x2});
        }
        return out;
    }

    std::normal_distribution<double> com_dist(config.com_y0, config.com_spread);

    // The conditional relative density is independent of the center of mass
    // for the entangled layouts, so one table serves every draw there.  The
    // disentangled layout needs a per-draw table (coarser grid; the density
    // is a smooth Gaussian product there).
    const bool shared_conditional = config.layout != Layout::SingleDoubleSlitDisentangled &&
                                    !config.uncorrected_prime_packets;
    const double r_half_range = hi - lo;

    auto conditional = [&](double c, int points) {
        const auto r_grid = linspace(-r_half_range, r_half_range, points);
        std::vector<double> density(r_grid.size());
        for (size_t i = 0; i < r_grid.size(); ++i) {
            density[i] =
                std::norm(reduced_amplitude(config, c + 0.5 * r_grid[i], c - 0.5 * r_grid[i], 0.0));
        }
        return GridSampler(r_grid, density);
    };

    if (shared_conditional) {
        const GridSampler rel_sampler = conditional(config.com_y0, kGridPoints);
        for (int i = 0; i < count; ++i) {
            const double c = com_dist(rng);
            const double r = rel_sampler.sample(uniform(rng));
            out.push_back({c + 0.5 * r, c - 0.5 * r, 0.0, x1, x2});
        }
    } else {
        for (int i = 0; i < count; ++i) {
            const double c = com_dist(rng);
            const double r = conditional(c, 2048).sample(uniform(rng));
            out.push_back({c + 0.5 * r, c - 0.5 * r, 0.0, x1, x2});
        }
    }
    return out;
}

} // namespace eprsim::bohm
