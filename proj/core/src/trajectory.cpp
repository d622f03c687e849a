#include "eprsim/trajectory.hpp"

#include <cmath>

namespace eprsim::bohm {

namespace {

struct Derivative {
    double v1, v2;
};

// Per-trajectory evaluator.  Works with the prefactor-free amplitude: the
// (2 pi sigma_t^2)^(-1/2) pair prefactor and the shared energy phase are
// y-independent scalars that cancel in the guidance ratio; |S|^2 gets the
// modulus of the prefactor reinstated for the node bookkeeping.
class GuidanceField {
  public:
    explicit GuidanceField(const ExperimentConfig& config)
        : p_(config.params), terms_(pair_terms(config)) {}

    // Returns false (leaving `out` untouched) when |S|^2 < threshold.
    bool velocity(double y1, double y2, double t, double threshold, Derivative& out,
                  double* density = nullptr) const {
        const Complex sigma_t = p_.sigma_t(t);
        const Complex inv_denom = 1.0 / (2.0 * p_.sigma0 * sigma_t);
        Complex s = 0.0, ds1 = 0.0, ds2 = 0.0;
        for (const auto& term : terms_) {
            const double u1 = p_.hbar * term.ky_1 / p_.mass;
            const double u2 = p_.hbar * term.ky_2 / p_.mass;
            const double yc1 = y1 - term.c0_1 - u1 * t;
            const double yc2 = y2 - term.c0_2 - u2 * t;
            const Complex dlog1 = -yc1 * inv_denom + Complex(0.0, term.ky_1);
            const Complex dlog2 = -yc2 * inv_denom + Complex(0.0, term.ky_2);
            const Complex z = -(yc1 * yc1 + yc2 * yc2) * 0.5 * inv_denom +
                              Complex(0.0, term.ky_1 * (y1 - term.c0_1) +
                                               term.ky_2 * (y2 - term.c0_2));
            const Complex e = term.coeff * std::exp(z);
            s += e;
            ds1 += e * dlog1;
            ds2 += e * dlog2;
        }
        const double norm_true = std::norm(s) / (2.0 * M_PI * std::norm(sigma_t));
        if (density) *density = norm_true;
        if (norm_true < threshold) return false;
        const double scale = p_.hbar / p_.mass;
        out = {scale * std::imag(ds1 / s), scale * std::imag(ds2 / s)};
        return true;
    }

    double density(double y1, double y2, double t) const {
        Derivative unused;
        double d = 0.0;
        velocity(y1, y2, t, -1.0, unused, &d);
        return d;
    }

  private:
    PhysParams p_;
    std::vector<PairTerm> terms_;
};

} // namespace

Trajectory integrate_trajectory(const ExperimentConfig& config, const PairCoordinates& initial,
                                double t_final, const StepControl& control) {
    config.validate();
    if (t_final <= initial.t) throw SizeError("t_final must exceed the initial time");

    Trajectory traj;
    double t = initial.t;
    double y1 = initial.y1, y2 = initial.y2;

    const GuidanceField field(config);
    double running_max = field.density(y1, y2, t);
    if (running_max <= 0.0) {
        throw NodeError("initial position sits on a node", y1, y2, t);
    }

    auto record = [&](SampleFlag flag) {
        double x1, x2;
        on_track_x(config, t, x1, x2);
        traj.samples.push_back({t, y1, y2, x1, x2, flag});
    };

    record(SampleFlag::Normal);
    double next_record = control.record_dt > 0 ? t + control.record_dt : t;

    while (t < t_final) {
        double dt = std::min(control.base_dt, t_final - t);
        int halvings = 0;
        bool stepped = false;
        while (!stepped) {
            const double threshold = control.node_fraction * running_max;
            Derivative k1, k2, k3, k4;
            const bool ok =
                field.velocity(y1, y2, t, threshold, k1) &&
                field.velocity(y1 + 0.5 * dt * k1.v1, y2 + 0.5 * dt * k1.v2, t + 0.5 * dt,
                               threshold, k2) &&
                field.velocity(y1 + 0.5 * dt * k2.v1, y2 + 0.5 * dt * k2.v2, t + 0.5 * dt,
                               threshold, k3) &&
                field.velocity(y1 + dt * k3.v1, y2 + dt * k3.v2, t + dt, threshold, k4);
            if (ok) {
                y1 += dt / 6.0 * (k1.v1 + 2 * k2.v1 + 2 * k3.v1 + k4.v1);
                y2 += dt / 6.0 * (k1.v2 + 2 * k2.v2 + 2 * k3.v2 + k4.v2);
                t += dt;
                stepped = true;
            } else if (halvings < control.max_halvings) {
                dt *= 0.5;
                ++halvings;
            } else {
                traj.truncated = true;
                traj.halvings_used = halvings;
                record(SampleFlag::Truncated);
                return traj;
            }
        }
        traj.halvings_used = std::max(traj.halvings_used, halvings);
        running_max = std::max(running_max, field.density(y1, y2, t));
        if (control.record_dt <= 0 || t + 1e-15 >= next_record || t >= t_final) {
            record(halvings > 0 ? SampleFlag::NearNode : SampleFlag::Normal);
            if (control.record_dt > 0) {
                while (next_record <= t) next_record += control.record_dt;
            }
        }
    }
    return traj;
}

double com_closed_form(double y0, const PhysParams& params, double t) {
    if (t < 0) throw SizeError("t must be >= 0");
    const double a = params.spread_ratio(t);
    return y0 * std::sqrt(1.0 + a * a);
}

double quantum_potential_com(double y0, const PhysParams& params, double t) {
    if (t < 0) throw SizeError("t must be >= 0");
    const double alpha = params.hbar / (2.0 * params.mass * params.sigma0 * params.sigma0);
    const double a = params.spread_ratio(t);
    return 0.5 * params.mass * y0 * y0 * alpha * alpha / (1.0 + a * a);
}

} // namespace eprsim::bohm
