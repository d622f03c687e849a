#include "eprsim/gates.hpp"

#include <cctype>
#include <cmath>

namespace eprsim::dense {

Mat basic_gate(GateKind kind, int n, int n_channels) {
    const int d = 2 * n_channels;
    Mat m = Mat::Identity(d, d);
    switch (kind) {
    case GateKind::NGate: {
        check_channel(n, n_channels);
        const int neg = ChannelIndex{-n}.basis_position(n_channels);
        m(neg, neg) = -1.0;
        break;
    }
    case GateKind::PGate: {
        check_channel(n, n_channels);
        const int pos = ChannelIndex{n}.basis_position(n_channels);
        const int neg = ChannelIndex{-n}.basis_position(n_channels);
        m(pos, pos) = m(neg, neg) = 0.0;
        m(pos, neg) = m(neg, pos) = 1.0;
        break;
    }
    case GateKind::LPlus: {
        m.setZero();
        for (int c = 1; c <= n_channels; ++c) {
            const int to = wrap_channel(c + 1, n_channels);
            m(ChannelIndex{to}.basis_position(n_channels),
              ChannelIndex{c}.basis_position(n_channels)) = 1.0;
            m(ChannelIndex{-to}.basis_position(n_channels),
              ChannelIndex{-c}.basis_position(n_channels)) = 1.0;
        }
        break;
    }
    }
    return m;
}

Mat position_hadamard(int n, int n_channels) {
    check_channel(n, n_channels);
    const int d = 2 * n_channels;
    // (P_n + N_n)/sqrt(2) restricted to the ±n channel pair
    Mat m = Mat::Identity(d, d);
    const int pos = ChannelIndex{n}.basis_position(n_channels);
    const int neg = ChannelIndex{-n}.basis_position(n_channels);
    const double s = 1.0 / std::sqrt(2.0);
    m(pos, pos) = s;
    m(pos, neg) = s;
    m(neg, pos) = s;
    m(neg, neg) = -s;
    return m;
}

Mat hadamard_all(int n_channels) {
    const int d = 2 * n_channels;
    Mat m = Mat::Identity(d, d);
    for (int n = 1; n <= n_channels; ++n) m = position_hadamard(n, n_channels) * m;
    return m;
}

Mat mirror_all(int n_channels) {
    const int d = 2 * n_channels;
    Mat m = Mat::Identity(d, d);
    for (int n = 1; n <= n_channels; ++n) m = basic_gate(GateKind::PGate, n, n_channels) * m;
    return m;
}

Mat pcs_gate(int n_channels) {
    const int d = 2 * n_channels;
    Mat m = Mat::Zero(d * d, d * d);
    for (int lp = 0; lp < d; ++lp) {
        const ChannelIndex l = ChannelIndex::from_basis_position(lp, n_channels);
        for (int mp = 0; mp < d; ++mp) {
            const ChannelIndex c = ChannelIndex::from_basis_position(mp, n_channels);
            const ChannelIndex target = l.value > 0 ? c : ChannelIndex{-c.value};
            m(lp * d + target.basis_position(n_channels), lp * d + mp) = 1.0;
        }
    }
    return m;
}

namespace {

// Per-shift diagonal gate data of the explicit U_(N) composites.  For an
// even shift the set lists channels conjugated as P_i N_i P_i (sign on |+i>;
// every other channel carries a bare N_i, sign on |-i>).  For an odd shift
// the set lists channels with P_i N_i P_i N_i (sign on both |±i>).
struct UShift {
    std::vector<int> set;
};

const std::vector<UShift>* u_catalog(int n_channels) {
    static const std::vector<UShift> u1 = {};
    static const std::vector<UShift> u2 = {{{1}}, {{}}};
    static const std::vector<UShift> u4 = {{{1, 4}}, {{4}}, {{1, 3}}, {{3}}};
    static const std::vector<UShift> u8 = {{{1, 3, 6, 8}}, {{5, 6, 8}},    {{1, 3, 6, 7}},
                                           {{3, 6, 7}},    {{1, 4, 5, 8}}, {{3, 4, 8}},
                                           {{1, 4, 5, 7}}, {{4, 5, 7}}};
    static const std::vector<UShift> u12 = {
        {{1, 6, 7, 8, 11, 12}},    {{6, 7, 9, 11, 12}}, {{1, 3, 5, 9, 10}},
        {{6, 7, 8, 10, 12}},       {{1, 3, 4, 5, 8, 9, 10}}, {{3, 4, 5, 8, 9}},
        {{1, 4, 6, 7, 10, 12}},    {{3, 4, 10, 11, 12}},
        {{1, 4, 5, 6, 9, 11, 12}}, {{3, 4, 5, 7, 9}},   {{1, 3, 7, 8, 11}},
        {{5, 6, 8, 10, 11}}};
    switch (n_channels) {
    case 1: return &u1;
    case 2: return &u2;
    case 4: return &u4;
    case 8: return &u8;
    case 12: return &u12;
    default: return nullptr;
    }
}

Eigen::VectorXd u_shift_diagonal(const UShift& shift, bool even, int n_channels) {
    const int d = 2 * n_channels;
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(d);
    std::vector<bool> in_set(n_channels + 1, false);
    for (int c : shift.set) in_set[c] = true;
    for (int c = 1; c <= n_channels; ++c) {
        const int pos = ChannelIndex{c}.basis_position(n_channels);
        const int neg = ChannelIndex{-c}.basis_position(n_channels);
        if (even) {
            if (in_set[c]) diag(pos) = -1.0; // P_c N_c P_c
            else diag(neg) = -1.0;           // N_c
        } else if (in_set[c]) {
            diag(pos) = diag(neg) = -1.0; // P_c N_c P_c N_c
        }
    }
    return diag;
}

} // namespace

bool u_gate_available(int n_channels) {
    return u_catalog(n_channels) != nullptr;
}

Mat u_gate(int n_channels) {
    if (n_channels == 1) {
        return Mat::Identity(4, 4);
    }
    const auto* catalog = u_catalog(n_channels);
    if (!catalog) {
        throw CapabilityError("no BSM composite catalogued for N = " +
                              std::to_string(n_channels) + " (have 1, 2, 4, 8, 12)");
    }
    const int d = 2 * n_channels;
    const Mat lplus = basic_gate(GateKind::LPlus, 0, n_channels);
    Mat u = Mat::Zero(d * d, d * d);
    Mat shift = Mat::Identity(d, d); // L+^d
    for (int s = 0; s < n_channels; ++s) {
        const Eigen::VectorXd diag = u_shift_diagonal((*catalog)[s], s % 2 == 0, n_channels);
        const Mat second = diag.asDiagonal() * shift;
        // kron(shift, second)
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                if (shift(a, b) == 0.0) continue;
                u.block(a * d, b * d, d, d) += shift(a, b) * second;
            }
        }
        shift = lplus * shift;
    }
    return u / std::sqrt(static_cast<double>(n_channels));
}

Mat parse_gate_word(const std::string& word, int n_channels) {
    const int d = 2 * n_channels;
    std::vector<Mat> factors;
    size_t i = 0;
    while (i < word.size()) {
        const char c = word[i];
        if (c == ' ' || c == '.') {
            ++i;
            continue;
        }
        if (c == 'I') {
            ++i;
            factors.push_back(Mat::Identity(d, d));
            continue;
        }
        if (c == 'L') {
            if (i + 1 >= word.size() || word[i + 1] != '+') {
                throw FormatError("bad gate word near 'L': " + word);
            }
            i += 2;
            int power = 1;
            if (i < word.size() && word[i] == '^') {
                ++i;
                size_t j = i;
                while (j < word.size() && std::isdigit(word[j])) ++j;
                if (j == i) throw FormatError("missing L+ power: " + word);
                power = std::stoi(word.substr(i, j - i));
                i = j;
            }
            Mat l = Mat::Identity(d, d);
            const Mat lp = basic_gate(GateKind::LPlus, 0, n_channels);
            for (int p = 0; p < power; ++p) l = lp * l;
            factors.push_back(l);
            continue;
        }
        if (c == 'N' || c == 'P') {
            size_t j = i + 1;
            while (j < word.size() && std::isdigit(word[j])) ++j;
            if (j == i + 1) throw FormatError("missing channel index: " + word);
            const int n = std::stoi(word.substr(i + 1, j - i - 1));
            factors.push_back(
                basic_gate(c == 'N' ? GateKind::NGate : GateKind::PGate, n, n_channels));
            i = j;
            continue;
        }
        throw FormatError("bad gate word: " + word);
    }
    Mat result = Mat::Identity(d, d);
    for (const Mat& f : factors) result = result * f; // leftmost applied last
    return result;
}

} // namespace eprsim::dense
