#pragma once

#include <cstdlib>

#include "eprsim/errors.hpp"

namespace eprsim::dense {

/// Signed receiver label: +n sits above the symmetry axis, -n below.
/// Canonical basis ordering is |+1>..|+N>,|-1>..|-N>.
struct ChannelIndex {
    int value = 1; // nonzero, |value| <= N

    int basis_position(int n_channels) const {
        return value > 0 ? value - 1 : n_channels + (-value) - 1;
    }
    static ChannelIndex from_basis_position(int pos, int n_channels) {
        return {pos < n_channels ? pos + 1 : -(pos - n_channels + 1)};
    }
};

inline void check_channel(int value, int n_channels) {
    if (value == 0 || std::abs(value) > n_channels) {
        throw SizeError("channel label out of range");
    }
}

/// (k, sign, j): family index k in 1..N with a sign, member index j in 1..2N.
struct BellLabel {
    int k = 1;
    int sign = +1; // +1 for k+, -1 for k-
    int j = 1;

    // k+ == 2k, k- == 2k-1 in the flat (k±,j) -> 2N(k±-1)+j convention.
    int flat_code(int n) const {
        const int kpm = sign > 0 ? 2 * k : 2 * k - 1;
        return 2 * n * (kpm - 1) + j;
    }
    static BellLabel from_flat(int code, int n) {
        if (code < 1 || code > 4 * n * n) throw SizeError("flat Bell code out of range");
        const int kpm = (code - 1) / (2 * n) + 1;
        const int j = (code - 1) % (2 * n) + 1;
        if (kpm % 2 == 0) return {kpm / 2, +1, j};
        return {(kpm + 1) / 2, -1, j};
    }
    bool operator==(const BellLabel&) const = default;
};

inline void check_label(const BellLabel& label, int n) {
    if (label.k < 1 || label.k > n || label.j < 1 || label.j > 2 * n ||
        (label.sign != 1 && label.sign != -1)) {
        throw SizeError("Bell label out of range");
    }
}

/// Wrap an integer into 1..n (the mod(N) convention of the channel labels).
inline int wrap_channel(int v, int n) {
    int r = (v - 1) % n;
    if (r < 0) r += n;
    return r + 1;
}

/// f_{k±}(n) = ±(n+k-1) wrapped into 1..N.
inline ChannelIndex mod_shift(int n, int k, int sign, int n_channels) {
    check_channel(n, n_channels);
    if (k < 1 || k > n_channels) throw SizeError("family shift out of range");
    const int mag = wrap_channel(n + k - 1, n_channels);
    return {sign > 0 ? mag : -mag};
}

} // namespace eprsim::dense
