#pragma once

#include <string>

#include "eprsim/bell.hpp"
#include "eprsim/gates.hpp"

namespace eprsim::dense {

/// Alice-side encoder for message (k±,j):
///   O_(k±,j) = sum_n [ h_{j,2n-1} |n><-f_{k±}(n)| + h_{j,2n} |f... ]
/// chosen so that (O x I)|psi_1> = bell_state(k±,j), matching the
/// preparation tables row by row.
Mat encode_operator(int n, const HadamardMatrix& h, const BellLabel& label);

struct ComposedEncoder {
    Mat matrix;
    std::string gate_word; // e.g. "N1N2L+^3"
};

/// Same encoder as a product of basic gates: the member part
/// prod_i (P_i N_i P_i)^{(h_{a,2i-1}-h_{j,2i-1})/2} N_i^{(h_{a,2i}-h_{j,2i})/2}
/// followed by the family part (mirror for k+) L+^{N-k+1}.  With a = 1 the
/// product equals encode_operator exactly; other rows a differ by a diagonal
/// of row-a signs.
ComposedEncoder compose_encoder(int n, const HadamardMatrix& h, const BellLabel& label,
                                int a = 1);

} // namespace eprsim::dense
