#pragma once

#include "eprsim/channel.hpp"
#include "eprsim/hadamard.hpp"
#include "eprsim/linalg.hpp"

namespace eprsim::dense {

/// Pair-basis index of |a,b> with a on Alice's side and b on Bob's;
/// dimension is (2N)^2.
inline int pair_index(ChannelIndex a, ChannelIndex b, int n) {
    return a.basis_position(n) * 2 * n + b.basis_position(n);
}

/// |psi_(k±,j)> = (1/sqrt(2N)) sum_n [ h_{j,2n-1} |n, f_{k±}(n)>
///                                    + h_{j,2n}  |-n,-f_{k±}(n)> ].
Vec bell_state(int n, const HadamardMatrix& h, const BellLabel& label);

/// The EPR pair the source distributes: |psi_1> = bell_state(k=1-, j=1),
/// i.e. (1/sqrt(2N)) sum_n [ |n,-n> + |-n,n> ].
Vec initial_pair_state(int n);

/// Default order-2N matrix used when the caller does not supply one.  For
/// 2N = 8 this is the Sylvester matrix with its rows re-ordered to the member
/// ordering of the N = 4 state tables (still symmetric and normalized); other
/// power-of-two orders are plain Sylvester.
HadamardMatrix default_hadamard(int order);

/// Partial trace of a pair density matrix over Bob (side = 1) or Alice
/// (side = 0); rho is (2N)^2 x (2N)^2.
Mat partial_trace(const Mat& rho, int n, int side);

/// (op x I) |pair> for a 2N x 2N single-particle operator.
Vec apply_alice(const Mat& op, const Vec& pair, int n);

} // namespace eprsim::dense
