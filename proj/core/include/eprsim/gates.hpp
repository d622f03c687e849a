#pragma once

#include <string>
#include <vector>

#include "eprsim/channel.hpp"
#include "eprsim/linalg.hpp"

namespace eprsim::dense {

enum class GateKind { NGate, PGate, LPlus };

/// Basic single-particle gates on the 2N signed channels:
///   N_n negates |-n> only, P_n swaps |n> <-> |-n>, L_plus shifts |±n> to
///   |±(n+1)> cyclically on each half.  n is ignored for LPlus.
Mat basic_gate(GateKind kind, int n, int n_channels);

/// H_{x_n} = (P_n + N_n)/sqrt(2); acts on the ±n channel pair only.
Mat position_hadamard(int n, int n_channels);

/// Product of H_{x_1}..H_{x_N} (they commute).
Mat hadamard_all(int n_channels);

/// Product P_1 P_2 .. P_N: the global upper/lower mirror.
Mat mirror_all(int n_channels);

/// Position controlled swap on the pair space: |l,m> is untouched for l > 0
/// and gets (I x P_|m|) for l < 0.
Mat pcs_gate(int n_channels);

/// Final BSM unitary U_(N).  Assembled as (1/sqrt(N)) sum_d L+^d x (A_{d+1} L+^d)
/// from the per-shift diagonal gate sets of the catalogued explicit
/// composites; catalogued for N in {1, 2, 4, 8, 12}.  Unitary and involutive.
Mat u_gate(int n_channels);

/// True when u_gate(n) is available.
bool u_gate_available(int n_channels);

/// Parse a gate word like "N1N2L+" or "P2N2P2N2L+^3" into a matrix product
/// (leftmost factor applied last).  Used by the golden-table tests.
Mat parse_gate_word(const std::string& word, int n_channels);

} // namespace eprsim::dense
