#pragma once

#include "eprsim/velocity.hpp"

namespace eprsim::bohm {

struct StepControl {
    double base_dt = 1e-3;       // in the natural time unit
    double node_fraction = 1e-10; // of the running |S|^2 maximum
    int max_halvings = 20;
    double record_dt = 0.0; // sample spacing in the output; 0 = every step
};

/// Classical RK4 on the coupled guidance equations with local step halving
/// near nodes; aborts (flagging the trajectory truncated) when max_halvings
/// is exhausted.  The x coordinates ride along deterministically.
Trajectory integrate_trajectory(const ExperimentConfig& config, const PairCoordinates& initial,
                                double t_final, const StepControl& control = {});

/// Closed-form center-of-mass path y(t) = y(0) sqrt(1 + (hbar t / 2 m sigma0^2)^2).
double com_closed_form(double y0, const PhysParams& params, double t);

/// Quantum potential driving the center-of-mass motion,
/// (1/2) m y0^2 (hbar/2m sigma0^2)^2 / (1 + (hbar t/2m sigma0^2)^2).
double quantum_potential_com(double y0, const PhysParams& params, double t);

} // namespace eprsim::bohm
