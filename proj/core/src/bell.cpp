#include "eprsim/bell.hpp"

#include <cmath>

namespace eprsim::dense {

Vec bell_state(int n, const HadamardMatrix& h, const BellLabel& label) {
    if (h.order() != 2 * n) throw SizeError("Hadamard order must be 2N");
    check_label(label, n);
    Vec state = Vec::Zero(4 * n * n);
    const double norm = 1.0 / std::sqrt(2.0 * n);
    for (int m = 1; m <= n; ++m) {
        const ChannelIndex f = mod_shift(m, label.k, label.sign, n);
        state(pair_index({m}, f, n)) += norm * h.at(label.j, 2 * m - 1);
        state(pair_index({-m}, {-f.value}, n)) += norm * h.at(label.j, 2 * m);
    }
    return state;
}

Vec initial_pair_state(int n) {
    return bell_state(n, default_hadamard(2 * n), BellLabel{1, -1, 1});
}

namespace {

// Member ordering of the reference N = 4 state tables: Sylvester rows
// taken in the sequence (1, 2, 7, 8, 3, 4, 5, 6).  The permuted matrix is
// still symmetric with an all-ones first row/column.
HadamardMatrix table_ordered_order8() {
    const HadamardMatrix s = sylvester_hadamard(3);
    const int perm[8] = {0, 1, 6, 7, 2, 3, 4, 5};
    Eigen::MatrixXi m(8, 8);
    for (int i = 0; i < 8; ++i) m.row(i) = s.entries().row(perm[i]);
    return HadamardMatrix(std::move(m));
}

} // namespace

HadamardMatrix default_hadamard(int order) {
    if (order == 8) {
        static const HadamardMatrix h8 = table_ordered_order8();
        return h8;
    }
    if (order >= 1 && (order & (order - 1)) == 0) {
        int exponent = 0;
        while ((1 << exponent) < order) ++exponent;
        return sylvester_hadamard(exponent);
    }
    throw CapabilityError("no built-in Hadamard of order " + std::to_string(order) +
                          "; supply one via file");
}

Vec apply_alice(const Mat& op, const Vec& pair, int n) {
    const int d = 2 * n;
    if (op.rows() != d || op.cols() != d || pair.size() != d * d) {
        throw SizeError("operator/state dimensions do not match");
    }
    Vec out = Vec::Zero(d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (op(a, b) == Complex{0, 0}) continue;
            for (int c = 0; c < d; ++c) out(a * d + c) += op(a, b) * pair(b * d + c);
        }
    }
    return out;
}

Mat partial_trace(const Mat& rho, int n, int side) {
    const int d = 2 * n;
    Mat out = Mat::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            Complex sum = 0.0;
            for (int c = 0; c < d; ++c) {
                if (side == 1) {
                    sum += rho(a * d + c, b * d + c); // trace out Bob
                } else {
                    sum += rho(c * d + a, c * d + b); // trace out Alice
                }
            }
            out(a, b) = sum;
        }
    }
    return out;
}

} // namespace eprsim::dense
