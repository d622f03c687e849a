#include <CLI11.hpp>

#include <cmath>

#include "cli_util.hpp"
#include "commands.hpp"
#include "eprsim/coincidence.hpp"
#include "eprsim/detection.hpp"

namespace eprlab {

using namespace eprsim::bohm;

namespace {

struct TrajectoryArgs {
    std::string config_path, out;
    int count = 1;
    std::uint64_t seed = 0;
    double t_final = -1.0;
    double record_dt = 0.01;
};

void run_trajectories(const TrajectoryArgs& a) {
    const ExperimentConfig cfg = load_experiment_config(a.config_path);
    const double t_final = a.t_final > 0 ? a.t_final : cfg.params.screen_time();

    const auto initials = sample_initial_positions(cfg, a.count, a.seed);
    StepControl control;
    control.record_dt = a.record_dt;

    std::string csv = "t,y1,y2,x1,x2,flag\n";
    int truncated = 0;
    for (int i = 0; i < a.count; ++i) {
        const Trajectory traj = integrate_trajectory(cfg, initials[i], t_final, control);
        if (traj.truncated) ++truncated;
        for (const auto& s : traj.samples) {
            csv += fmt17(s.t);
            csv += ',';
            csv += fmt17(s.y1);
            csv += ',';
            csv += fmt17(s.y2);
            csv += ',';
            csv += fmt17(s.x1);
            csv += ',';
            csv += fmt17(s.x2);
            csv += ',';
            csv += std::to_string(static_cast<int>(s.flag));
            csv += '\n';
        }
        csv += '\n'; // block separator
    }
    if (truncated == a.count) {
        throw eprsim::NodeError("every requested trajectory aborted at a node", 0, 0, 0);
    }
    atomic_write(a.out, csv);
}

struct PatternArgs {
    std::string config_path, out, report_out;
    int count = 1000;
    std::uint64_t seed = 0;
    double t_final = -1.0;
    int bins = 64;
    double y_lo = -10.0, y_hi = 10.0;
    double empty_threshold = 0.05;
};

void run_pattern(const PatternArgs& a) {
    const ExperimentConfig cfg = load_experiment_config(a.config_path);
    const double t_final = a.t_final > 0 ? a.t_final : cfg.params.screen_time();
    DetectionSpec spec;
    spec.bins = a.bins;
    spec.y_lo = a.y_lo;
    spec.y_hi = a.y_hi;

    EnsembleOptions options;
    options.empty_threshold_fraction = a.empty_threshold;
    const Pattern pattern = ensemble_pattern(cfg, a.count, a.seed, t_final, spec, options);

    std::string csv = "bin_lo,bin_hi,count_full,count_selected,sqm_density\n";
    for (const auto& b : pattern.bins) {
        csv += fmt17(b.lo);
        csv += ',';
        csv += fmt17(b.hi);
        csv += ',';
        csv += std::to_string(b.count_full);
        csv += ',';
        csv += std::to_string(b.count_selected);
        csv += ',';
        csv += fmt17(b.sqm_density);
        csv += '\n';
    }
    atomic_write(a.out, csv);

    const auto& r = pattern.report;
    json rep;
    rep["pairs"] = r.pairs;
    rep["truncated"] = r.truncated;
    rep["selected"] = r.selected;
    rep["removed"] = r.removed;
    rep["axis_crossings"] = r.axis_crossings;
    rep["com_mean_t"] = json_number(r.com_mean_t);
    rep["empty_interval_measured"] = json_number(r.empty_interval_measured);
    rep["empty_interval_formula"] = json_number(r.empty_interval_formula);
    rep["empty_threshold_fraction"] = json_number(r.empty_threshold_fraction);
    const std::string text = rep.dump(2) + "\n";
    if (a.report_out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        atomic_write(a.report_out, text);
    }
}

struct ProbabilityArgs {
    std::string config_path, out;
    double t = -1.0, ym = 0.0, yn = 0.0, delta = 0.1;
};

void run_probability(const ProbabilityArgs& a) {
    const ExperimentConfig cfg = load_experiment_config(a.config_path);
    const double t = a.t > 0 ? a.t : cfg.params.screen_time();
    const Normalization norm = normalize_config(cfg, t);
    DetectionSpec spec;
    spec.detector_size = a.delta;
    const double p = joint_detection_probability(cfg, norm, t, a.ym, a.yn, spec);
    json doc;
    doc["t"] = json_number(t);
    doc["ym"] = json_number(a.ym);
    doc["yn"] = json_number(a.yn);
    doc["delta"] = json_number(a.delta);
    doc["p12"] = json_number(p);
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
}

struct CoincidenceArgs {
    std::string out;
    double kY = 60.0, ksigma0 = 1.0;
    double theta2 = 0.0, theta_ia = 0.0, theta_ib = 0.0;
    double s_min = -0.3, s_max = 0.3;
    int steps = 2000;
};

void run_coincidence(const CoincidenceArgs& a) {
    std::string csv = "sin_theta1,coincidence\n";
    for (int i = 0; i <= a.steps; ++i) {
        const double s = a.s_min + (a.s_max - a.s_min) * i / a.steps;
        const double c = coincidence_pattern(std::asin(s), a.theta2, a.kY, a.ksigma0,
                                             a.theta_ia, a.theta_ib);
        csv += fmt17(s);
        csv += ',';
        csv += fmt17(c);
        csv += '\n';
    }
    atomic_write(a.out, csv);
}

} // namespace

void register_bohm(CLI::App& app) {
    auto* bohm = app.add_subcommand("bohm", "two-particle double-slit simulations");
    bohm->require_subcommand(1);

    {
        auto args = std::make_shared<TrajectoryArgs>();
        auto* cmd = bohm->add_subcommand("trajectories", "integrate seeded pair trajectories");
        cmd->add_option("--config", args->config_path, "experiment JSON")->required();
        cmd->add_option("--count", args->count, "number of pairs")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", args->seed, "master seed");
        cmd->add_option("--t-final", args->t_final, "end time (default: screen time)");
        cmd->add_option("--record-dt", args->record_dt, "output sample spacing");
        cmd->add_option("--out", args->out, "trajectory CSV")->required();
        cmd->callback([args] { run_trajectories(*args); });
    }
    {
        auto args = std::make_shared<PatternArgs>();
        auto* cmd = bohm->add_subcommand("pattern", "endpoint histograms and the "
                                                    "selective-detection report");
        cmd->add_option("--config", args->config_path, "experiment JSON")->required();
        cmd->add_option("--count", args->count, "number of pairs")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", args->seed, "master seed");
        cmd->add_option("--t-final", args->t_final, "end time (default: screen time)");
        cmd->add_option("--bins", args->bins, "histogram bins");
        cmd->add_option("--y-lo", args->y_lo, "histogram lower edge");
        cmd->add_option("--y-hi", args->y_hi, "histogram upper edge");
        cmd->add_option("--empty-threshold", args->empty_threshold,
                        "sub-threshold fraction for the low-intensity interval");
        cmd->add_option("--out", args->out, "pattern CSV")->required();
        cmd->add_option("--report", args->report_out, "report JSON (default: stdout)");
        cmd->callback([args] { run_pattern(*args); });
    }
    {
        auto args = std::make_shared<ProbabilityArgs>();
        auto* cmd = bohm->add_subcommand("probability", "joint detection probability P12");
        cmd->add_option("--config", args->config_path, "experiment JSON")->required();
        cmd->add_option("--t", args->t, "detection time (default: screen time)");
        cmd->add_option("--ym", args->ym, "detector 1 lower edge")->required();
        cmd->add_option("--yn", args->yn, "detector 2 lower edge")->required();
        cmd->add_option("--delta", args->delta, "detector size");
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_probability(*args); });
    }
    {
        auto args = std::make_shared<CoincidenceArgs>();
        auto* cmd = bohm->add_subcommand("coincidence", "two-photon coincidence curve");
        cmd->add_option("--ky", args->kY, "k*Y (dimensionless)");
        cmd->add_option("--ksigma0", args->ksigma0, "k*sigma0 (dimensionless)");
        cmd->add_option("--theta2", args->theta2, "fixed detector angle");
        cmd->add_option("--theta-ia", args->theta_ia, "incidence angle on slit A");
        cmd->add_option("--theta-ib", args->theta_ib, "incidence angle on slit B");
        cmd->add_option("--s-min", args->s_min, "scan start in sin(theta1)");
        cmd->add_option("--s-max", args->s_max, "scan end in sin(theta1)");
        cmd->add_option("--steps", args->steps, "scan steps");
        cmd->add_option("--out", args->out, "curve CSV")->required();
        cmd->callback([args] { run_coincidence(*args); });
    }
}

} // namespace eprlab
