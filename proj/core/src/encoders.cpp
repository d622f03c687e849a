#include "eprsim/encoders.hpp"

#include <sstream>

namespace eprsim::dense {

Mat encode_operator(int n, const HadamardMatrix& h, const BellLabel& label) {
    if (h.order() != 2 * n) throw SizeError("Hadamard order must be 2N");
    check_label(label, n);
    const int d = 2 * n;
    Mat op = Mat::Zero(d, d);
    for (int m = 1; m <= n; ++m) {
        const ChannelIndex f = mod_shift(m, label.k, label.sign, n);
        op(ChannelIndex{m}.basis_position(n), ChannelIndex{-f.value}.basis_position(n)) +=
            h.at(label.j, 2 * m - 1);
        op(ChannelIndex{-m}.basis_position(n), f.basis_position(n)) += h.at(label.j, 2 * m);
    }
    return op;
}

ComposedEncoder compose_encoder(int n, const HadamardMatrix& h, const BellLabel& label, int a) {
    if (h.order() != 2 * n) throw SizeError("Hadamard order must be 2N");
    check_label(label, n);
    if (a < 1 || a > 2 * n) throw SizeError("reference row a out of range");

    std::ostringstream word;
    const int d = 2 * n;
    Mat member = Mat::Identity(d, d);
    for (int i = 1; i <= n; ++i) {
        // exponents taken mod 2; P_i N_i P_i flips |+i>, bare N_i flips |-i>
        if (h.at(a, 2 * i - 1) != h.at(label.j, 2 * i - 1)) {
            word << "P" << i << "N" << i << "P" << i;
            member = basic_gate(GateKind::PGate, i, n) * basic_gate(GateKind::NGate, i, n) *
                     basic_gate(GateKind::PGate, i, n) * member;
        }
        if (h.at(a, 2 * i) != h.at(label.j, 2 * i)) {
            word << "N" << i;
            member = basic_gate(GateKind::NGate, i, n) * member;
        }
    }

    Mat family = Mat::Identity(d, d);
    if (label.sign > 0) {
        for (int i = 1; i <= n; ++i) word << "P" << i;
        family = mirror_all(n);
    }
    const int power = (n - label.k + 1) % n;
    if (power > 0) {
        word << "L+";
        if (power > 1) word << "^" << power;
        const Mat lp = basic_gate(GateKind::LPlus, 0, n);
        for (int p = 0; p < power; ++p) family = family * lp;
    }
    if (word.str().empty()) word << "I";

    return {member * family, word.str()};
}

} // namespace eprsim::dense
