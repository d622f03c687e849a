#include "eprsim/teleport.hpp"

#include <cmath>
#include <random>

#include "eprsim/bell.hpp"

namespace eprsim::tele {

using dense::bell_state;
using dense::BellLabel;
using dense::ChannelIndex;
using dense::check_label;
using dense::mod_shift;

Mat reconstruction_operator(int n, const HadamardMatrix& h, const BellLabel& label) {
    // Same matrix family as the dense-coding encoder: both are fixed by
    // producing bell_state(label) from the shared pair |psi_1>.
    return dense::encode_operator(n, h, label);
}

std::vector<ExpansionEntry> bell_expand(const Vec& phi, int n, const HadamardMatrix& h) {
    if (phi.size() != 2 * n) throw SizeError("unknown state has wrong dimension");
    if (!is_unit_norm(phi)) throw StateError("unknown state must be unit norm");
    std::vector<ExpansionEntry> table;
    table.reserve(4 * n * n);
    for (int flat = 1; flat <= 4 * n * n; ++flat) {
        ExpansionEntry e;
        e.label = BellLabel::from_flat(flat, n);
        e.residual = reconstruction_operator(n, h, e.label).adjoint() * phi;
        e.probability = 1.0 / (4.0 * n * n);
        table.push_back(std::move(e));
    }
    return table;
}

Vec reassemble_expansion(const std::vector<ExpansionEntry>& table, int n,
                         const HadamardMatrix& h) {
    const int d = 2 * n;
    Vec out = Vec::Zero(d * d * d);
    for (const auto& e : table) {
        const Vec bell = bell_state(n, h, e.label);
        for (int ab = 0; ab < d * d; ++ab) {
            if (bell(ab) == Complex{0, 0}) continue;
            for (int c = 0; c < d; ++c) {
                out(ab * d + c) += bell(ab) * e.residual(c) / (2.0 * n);
            }
        }
    }
    return out;
}

TeleportReport simulate_teleport(const Vec& phi, int n, const HadamardMatrix& h,
                                 std::uint64_t seed, const std::optional<BellLabel>& forced) {
    if (phi.size() != 2 * n) throw SizeError("unknown state has wrong dimension");
    if (!is_unit_norm(phi)) throw StateError("unknown state must be unit norm");

    TeleportReport report;
    report.seed = seed;
    if (forced) {
        check_label(*forced, n);
        report.outcome = *forced;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dist(1, 4 * n * n);
        report.outcome = BellLabel::from_flat(dist(rng), n);
    }
    const Mat op = reconstruction_operator(n, h, report.outcome);
    report.pre_correction = op.adjoint() * phi;
    report.post_correction = op * report.pre_correction;
    report.fidelity = std::norm(phi.dot(report.post_correction));
    return report;
}

int flatten_2d(int vx, int vy, int ny) {
    // overall sign follows vx; vy contributes |vy| with its own sign folded
    // into the pairing (vy and -vy belong to mirrored channels)
    const int mag = (std::abs(vx) - 1) * ny + std::abs(vy);
    return vx > 0 ? mag : -mag;
}

void unflatten_2d(int v, int ny, int& vx, int& vy) {
    const int mag = std::abs(v) - 1;
    vx = mag / ny + 1;
    vy = mag % ny + 1;
    if (v < 0) vx = -vx;
}

TeleportReport teleport_2d(const Vec& phi_xy, int nx, int ny, const HadamardMatrix& h,
                           std::uint64_t seed, const std::optional<BellLabel>& forced) {
    const int n = nx * ny;
    if (phi_xy.size() != 2 * n) throw SizeError("planar state has wrong dimension");
    return simulate_teleport(phi_xy, n, h, seed, forced);
}

Teleport3dReport teleport_3d(const Vec& phi_xz, int n, int m, const HadamardMatrix& h_x,
                             const HadamardMatrix& h_p, std::uint64_t seed,
                             const std::optional<BellLabel>& forced_pos,
                             const std::optional<BellLabel>& forced_mom) {
    const int dx = 2 * n, dz = 2 * m;
    if (phi_xz.size() != dx * dz) throw SizeError("3D state has wrong dimension");
    if (!is_unit_norm(phi_xz)) throw StateError("unknown state must be unit norm");

    Teleport3dReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist_x(1, 4 * n * n);
    std::uniform_int_distribution<int> dist_z(1, 4 * m * m);
    report.outcome_position =
        forced_pos ? *forced_pos : BellLabel::from_flat(dist_x(rng), n);
    report.outcome_momentum =
        forced_mom ? *forced_mom : BellLabel::from_flat(dist_z(rng), m);
    check_label(report.outcome_position, n);
    check_label(report.outcome_momentum, m);

    const Mat op_x = reconstruction_operator(n, h_x, report.outcome_position);
    const Mat op_z = reconstruction_operator(m, h_p, report.outcome_momentum);

    // (O'^dag x T^dag) phi, then (O' x T)
    Eigen::Map<const Mat> phi_mat(phi_xz.data(), dz, dx); // column-major: (z, x)
    Mat collapsed = op_z.adjoint() * phi_mat * op_x.conjugate();
    Mat post = op_z * collapsed * op_x.transpose();
    report.post_correction = Eigen::Map<const Vec>(post.data(), dx * dz);
    report.fidelity = std::norm(phi_xz.dot(report.post_correction));
    return report;
}

TeleportReport teleport_with_spin(const Vec& phi_xs, int n, int twice_s,
                                  const HadamardMatrix& h_ext, std::uint64_t seed,
                                  const std::optional<BellLabel>& forced) {
    const int n_ext = n * (twice_s + 1);
    if (phi_xs.size() != 2 * n_ext) throw SizeError("position-spin state has wrong dimension");
    return simulate_teleport(phi_xs, n_ext, h_ext, seed, forced);
}

} // namespace eprsim::tele
