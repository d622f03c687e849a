#include "eprsim/detection.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace eprsim::bohm {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 28);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EPRLAB_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct Endpoint {
    double y1 = 0, y2 = 0;
    double y1_start = 0, y2_start = 0;
    bool truncated = false;
};

std::vector<Endpoint> run_endpoints(const ExperimentConfig& config, int count,
                                    std::uint64_t seed, double t_final,
                                    const EnsembleOptions& options) {
    const auto initials = sample_initial_positions(config, count, seed);
    std::vector<Endpoint> endpoints(count);

    StepControl control = options.step;
    control.record_dt = t_final; // endpoints only

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            Endpoint& e = endpoints[i];
            e.y1_start = initials[i].y1;
            e.y2_start = initials[i].y2;
            try {
                const Trajectory traj = integrate_trajectory(config, initials[i], t_final, control);
                const auto& last = traj.samples.back();
                e.y1 = last.y1;
                e.y2 = last.y2;
                e.truncated = traj.truncated;
            } catch (const NodeError&) {
                e.truncated = true;
            }
        }
    };

    const int n_threads = std::min(resolve_threads(options.threads), count);
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return endpoints;
}

} // namespace

double joint_detection_probability(const ExperimentConfig& config, const Normalization& norm,
                                   double t, double yM, double yN, const DetectionSpec& spec) {
    spec.validate();
    if (norm.constant <= 0 || norm.t != t) {
        throw StateError("config must be normalized for the requested time");
    }
    const double c2 = norm.constant * norm.constant;
    auto inner = [&](double y1) {
        return integrate_adaptive(
            [&](double y2) { return c2 * std::norm(reduced_amplitude(config, y1, y2, t)); }, yN,
            yN + spec.detector_size, 1e-10 / spec.detector_size);
    };
    return integrate_adaptive(inner, yM, yM + spec.detector_size, 1e-9);
}

Pattern ensemble_pattern(const ExperimentConfig& config, int count, std::uint64_t seed,
                         double t_final, const DetectionSpec& spec,
                         const EnsembleOptions& options) {
    spec.validate();
    const auto endpoints = run_endpoints(config, count, seed, t_final, options);

    Pattern pattern;
    pattern.bins.resize(spec.bins);
    const double width = (spec.y_hi - spec.y_lo) / spec.bins;
    for (int b = 0; b < spec.bins; ++b) {
        pattern.bins[b].lo = spec.y_lo + b * width;
        pattern.bins[b].hi = spec.y_lo + (b + 1) * width;
    }
    auto bin_of = [&](double y) {
        const int b = static_cast<int>(std::floor((y - spec.y_lo) / width));
        return (b >= 0 && b < spec.bins) ? b : -1;
    };

    SelectiveReport& rep = pattern.report;
    rep.pairs = count;
    rep.empty_threshold_fraction = options.empty_threshold_fraction;
    double com_sum = 0.0;
    int kept = 0;
    for (const auto& e : endpoints) {
        if (e.truncated) {
            ++rep.truncated;
            continue;
        }
        ++kept;
        com_sum += 0.5 * (e.y1 + e.y2);
        if (e.y1 * e.y1_start < 0) ++rep.axis_crossings;
        if (e.y2 * e.y2_start < 0) ++rep.axis_crossings;
        const bool selected = std::signbit(e.y1) != std::signbit(e.y2);
        for (double y : {e.y1, e.y2}) {
            const int b = bin_of(y);
            if (b < 0) continue;
            ++pattern.bins[b].count_full;
            if (selected) ++pattern.bins[b].count_selected;
        }
        if (selected) ++rep.selected;
        else ++rep.removed;
    }
    rep.com_mean_t = kept > 0 ? com_sum / kept : 0.0;
    rep.empty_interval_formula = config.params.hbar * t_final /
                                 (config.params.mass * config.params.sigma0 *
                                  config.params.sigma0) *
                                 config.com_y0;

    const Normalization norm = normalize_config(config, t_final);
    const MarginalDensity marginal(config, norm);
    for (auto& bin : pattern.bins) {
        bin.sqm_density = marginal(0.5 * (bin.lo + bin.hi));
    }

    // Longest sub-threshold run of the selected histogram around 2<y(t)>.
    long peak = 0;
    for (const auto& bin : pattern.bins) peak = std::max(peak, bin.count_selected);
    if (peak > 0) {
        const double threshold = rep.empty_threshold_fraction * peak;
        const double anchor = rep.com_mean_t; // midpoint of the expected gap
        double best_anchored = 0.0;
        int run_start = -1;
        for (int b = 0; b <= spec.bins; ++b) {
            const bool low = b < spec.bins && pattern.bins[b].count_selected < threshold;
            if (low && run_start < 0) run_start = b;
            if (!low && run_start >= 0) {
                const double lo = pattern.bins[run_start].lo;
                const double hi = pattern.bins[b - 1].hi;
                if (lo <= anchor && anchor <= hi) {
                    best_anchored = std::max(best_anchored, hi - lo);
                }
                run_start = -1;
            }
        }
        rep.empty_interval_measured = best_anchored;
    }
    return pattern;
}

std::vector<long> ensemble_endpoint_histogram(const ExperimentConfig& config, int count,
                                              std::uint64_t seed, double t_final,
                                              const DetectionSpec& spec,
                                              const EnsembleOptions& options) {
    spec.validate();
    const auto endpoints = run_endpoints(config, count, seed, t_final, options);
    std::vector<long> hist(spec.bins, 0);
    const double width = (spec.y_hi - spec.y_lo) / spec.bins;
    for (const auto& e : endpoints) {
        if (e.truncated) continue;
        const int b = static_cast<int>(std::floor((e.y1 - spec.y_lo) / width));
        if (b >= 0 && b < spec.bins) ++hist[b];
    }
    return hist;
}

} // namespace eprsim::bohm
