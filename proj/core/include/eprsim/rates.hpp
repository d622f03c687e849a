#pragma once

#include "eprsim/bell.hpp"

namespace eprsim::dense {

struct GateTimes {
    double t_c = 1.0; // CNOT
    double t_h = 1.0; // Hadamard
    double t_p = 1.0; // PCS
    double t_u = 1.0; // U_(N)
};

/// Classical-information rates (bits per unit time per sent particle) for
/// the spatial scheme at channel count N against the pairwise and maximally
/// entangled multi-qubit schemes at qubit count NN.
struct InfoRates {
    double bits_per_particle = 0;  // 2 log2(2N)
    double r_x = 0;                // 2 log2(2N) / (t_p + t_h + t_u)
    double r_p = 0;                // 2 NN / (NN^2 (t_c + t_h))
    double r_m = 0;                // NN / ((NN-1) ((NN-1) t_c + t_h))
    double r_p_corrected = 0;      // 2N / (N (t_h + t_c))
    double r_m_corrected = 0;      // (N+1) / (t_h + N t_c)
    double r_p_per_particle = 0;   // 2 / (N (t_h + t_c))
    double r_m_per_particle = 0;   // (N+1) / (N (t_h + N t_c))
    double ratio_x_over_p = 0;     // r_x / r_p
    double asymptotic_ratio = 0;   // 2 log2(2N), the large-N limit of the above
};

InfoRates info_rates(int n, int nn, const GateTimes& times);

struct SpinExtension {
    int dimension = 0;       // 2N(2S+1) channels per particle
    double capacity_bits = 0; // 2 log2(2N(2S+1))
};

/// twice_s is 2S (so spin 1/2 passes twice_s = 1).
SpinExtension spin_extended_dim(int n, int twice_s);

/// (1/sqrt(2S+1)) sum_s phase^s |S-s, -(S-s)>; phase +1 for the bosonic sum.
Vec spin_singlet_sum(int twice_s, int phase = +1);

/// |psi_1>_x tensor spin_singlet_sum, expressed over the extended channel
/// pair basis with magnitude (n-1)(2S+1) + s + 1.  Equals the extended-N
/// initial pair state up to the index map.
Vec spin_extended_initial_state(int n, int twice_s, int phase = +1);

} // namespace eprsim::dense
