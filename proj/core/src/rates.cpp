#include "eprsim/rates.hpp"

#include <cmath>

namespace eprsim::dense {

InfoRates info_rates(int n, int nn, const GateTimes& times) {
    if (n < 1 || nn < 2) throw SizeError("need N >= 1 and NN >= 2");
    if (times.t_c <= 0 || times.t_h <= 0 || times.t_p <= 0 || times.t_u <= 0) {
        throw SizeError("gate times must be positive");
    }
    InfoRates r;
    r.bits_per_particle = 2.0 * std::log2(2.0 * n);
    r.r_x = r.bits_per_particle / (times.t_p + times.t_h + times.t_u);
    r.r_p = 2.0 * nn / (static_cast<double>(nn) * nn * (times.t_c + times.t_h));
    r.r_m = nn / ((nn - 1.0) * ((nn - 1.0) * times.t_c + times.t_h));
    r.r_p_corrected = 2.0 / (times.t_h + times.t_c);
    r.r_m_corrected = (n + 1.0) / (times.t_h + n * times.t_c);
    r.r_p_per_particle = 2.0 / (n * (times.t_h + times.t_c));
    r.r_m_per_particle = (n + 1.0) / (n * (times.t_h + n * times.t_c));
    r.ratio_x_over_p = r.r_x / r.r_p;
    r.asymptotic_ratio = 2.0 * std::log2(2.0 * n);
    return r;
}

SpinExtension spin_extended_dim(int n, int twice_s) {
    if (n < 1 || twice_s < 0) throw SizeError("need N >= 1 and 2S >= 0");
    SpinExtension ext;
    ext.dimension = 2 * n * (twice_s + 1);
    ext.capacity_bits = 2.0 * std::log2(static_cast<double>(2 * n * (twice_s + 1)));
    return ext;
}

Vec spin_singlet_sum(int twice_s, int phase) {
    const int levels = twice_s + 1;
    Vec v = Vec::Zero(levels * levels);
    const double norm = 1.0 / std::sqrt(static_cast<double>(levels));
    for (int s = 0; s < levels; ++s) {
        // |S-s> on Alice pairs with |-(S-s)> = |S - (2S - s)> on Bob
        const int bob = twice_s - s;
        v(s * levels + bob) = norm * (phase < 0 && s % 2 == 1 ? -1.0 : 1.0);
    }
    return v;
}

Vec spin_extended_initial_state(int n, int twice_s, int phase) {
    const int levels = twice_s + 1;
    const int n_ext = n * levels;
    const int d = 2 * n_ext;
    const Vec pos = initial_pair_state(n);
    const Vec spin = spin_singlet_sum(twice_s, phase);
    Vec out = Vec::Zero(d * d);
    for (int m = 1; m <= n; ++m) {
        for (int mb = 1; mb <= n; ++mb) {
            for (int sa = 0; sa < levels; ++sa) {
                for (int sb = 0; sb < levels; ++sb) {
                    for (int sgn_a : {+1, -1}) {
                        for (int sgn_b : {+1, -1}) {
                            const Complex amp =
                                pos(ChannelIndex{sgn_a * m}.basis_position(n) * 2 * n +
                                    ChannelIndex{sgn_b * mb}.basis_position(n)) *
                                spin(sa * levels + sb);
                            if (amp == Complex{0, 0}) continue;
                            const int ma = (m - 1) * levels + sa + 1;
                            const int mbb = (mb - 1) * levels + sb + 1;
                            out(ChannelIndex{sgn_a * ma}.basis_position(n_ext) * d +
                                ChannelIndex{sgn_b * mbb}.basis_position(n_ext)) += amp;
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace eprsim::dense
