#include "eprsim/momentum.hpp"

#include "eprsim/bell.hpp"
#include "eprsim/gates.hpp"

namespace eprsim::tele {

void MomentumConfig::validate() const {
    if (m < 1) throw SizeError("momentum channel count must be positive");
    if (static_cast<int>(magnitudes.size()) != m) {
        throw SizeError("need one momentum magnitude per channel");
    }
    double prev = 0.0;
    for (double p : magnitudes) {
        if (p <= prev) throw SizeError("momentum magnitudes must be positive increasing");
        prev = p;
    }
}

Mat momentum_gate(MomentumGateKind kind, int m, int m_channels) {
    switch (kind) {
    case MomentumGateKind::PNormalized:
        return dense::basic_gate(dense::GateKind::NGate, m, m_channels);
    case MomentumGateKind::RReversal:
        return dense::basic_gate(dense::GateKind::PGate, m, m_channels);
    case MomentumGateKind::DPlus:
        return dense::basic_gate(dense::GateKind::LPlus, m, m_channels);
    }
    throw SizeError("unknown momentum gate kind");
}

Mat momentum_hadamard(int m, int m_channels) { return dense::position_hadamard(m, m_channels); }

Mat mcr_gate(int m_channels) { return dense::pcs_gate(m_channels); }

Mat v_gate(int m_channels) { return dense::u_gate(m_channels); }

Vec momentum_bell_state(int m, const HadamardMatrix& h, const BellLabel& label) {
    return dense::bell_state(m, h, label);
}

Mat t_operator(int m, const HadamardMatrix& h, const BellLabel& label) {
    return reconstruction_operator(m, h, label);
}

} // namespace eprsim::tele
