#pragma once

#include <vector>

#include "eprsim/teleport.hpp"

namespace eprsim::tele {

/// Momentum channels |±p_1>..|±p_M>.  The magnitudes are labels only; the
/// protocol machinery is the position machinery under the relabeling
/// |±n> <-> |±p_n>, P_m <-> N_n, R_m <-> P_n, D+ <-> L+, V_(M) <-> U_(M),
/// MCR <-> PCS, T <-> O'.
struct MomentumConfig {
    int m = 1;
    std::vector<double> magnitudes; // p_1 < p_2 < ... < p_M, all positive

    void validate() const;
};

enum class MomentumGateKind { PNormalized, RReversal, DPlus };

Mat momentum_gate(MomentumGateKind kind, int m, int m_channels);
Mat momentum_hadamard(int m, int m_channels);
Mat mcr_gate(int m_channels);
Mat v_gate(int m_channels);

/// Momentum Bell basis member |phi_(q±,r)>.
Vec momentum_bell_state(int m, const HadamardMatrix& h, const BellLabel& label);

/// T_(q±,r), Bob's momentum-side reconstruction operator.
Mat t_operator(int m, const HadamardMatrix& h, const BellLabel& label);

} // namespace eprsim::tele
