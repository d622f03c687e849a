#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eprsim/encoders.hpp"

namespace eprsim::tele {

using dense::BellLabel;
using eprsim::HadamardMatrix;

/// Bob-side reconstruction operator
///   O'_(k±,j) = sum_n [ h_{j,2n-1} |n><-f_{k±}(n)| + h_{j,2n} |-n><f_{k±}(n)| ];
/// unitary for every label, and O'_(k±,j)|psi_1> = bell_state(k±,j).
Mat reconstruction_operator(int n, const HadamardMatrix& h, const BellLabel& label);

struct ExpansionEntry {
    BellLabel label;
    Vec residual;       // O'^dagger |phi>, unit norm
    double probability; // 1/(4N^2), exactly
};

/// The Bell decomposition |phi>|psi_1> = (1/2N) sum |psi_(k±,j)> O'^dag |phi>.
std::vector<ExpansionEntry> bell_expand(const Vec& phi, int n, const HadamardMatrix& h);

/// Reassemble the right-hand side of the decomposition; equals
/// |phi> x |psi_1> up to numerical error.
Vec reassemble_expansion(const std::vector<ExpansionEntry>& table, int n,
                         const HadamardMatrix& h);

struct TeleportReport {
    BellLabel outcome;
    std::optional<BellLabel> outcome_momentum;
    Vec pre_correction;  // Bob's collapsed state
    Vec post_correction; // after applying O'
    double fidelity = 0; // |<phi|post>|^2
    std::uint64_t seed = 0;
};

/// One teleportation run: samples the BSM outcome (uniform over the 4N^2
/// labels), collapses Bob's particle, applies the reconstruction operator.
/// `forced` replaces the sampled outcome when set.
TeleportReport simulate_teleport(const Vec& phi, int n, const HadamardMatrix& h,
                                 std::uint64_t seed,
                                 const std::optional<BellLabel>& forced = std::nullopt);

/// Planar arrays: (n_x, n_y) -> (n_x - 1) N_y + n_y flattens the magnitudes,
/// the overall channel sign is carried through, and the 1D machinery runs at
/// N = N_x N_y.
int flatten_2d(int vx, int vy, int ny);
void unflatten_2d(int v, int ny, int& vx, int& vy);
TeleportReport teleport_2d(const Vec& phi_xy, int nx, int ny, const HadamardMatrix& h,
                           std::uint64_t seed,
                           const std::optional<BellLabel>& forced = std::nullopt);

/// Position x momentum: two independent BSMs; phi_xz is row-major over
/// (2N position channels) x (2M momentum channels).
struct Teleport3dReport {
    BellLabel outcome_position;
    BellLabel outcome_momentum;
    Vec post_correction;
    double fidelity = 0;
    std::uint64_t seed = 0;
};
Teleport3dReport teleport_3d(const Vec& phi_xz, int n, int m, const HadamardMatrix& h_x,
                             const HadamardMatrix& h_p, std::uint64_t seed,
                             const std::optional<BellLabel>& forced_pos = std::nullopt,
                             const std::optional<BellLabel>& forced_mom = std::nullopt);

/// Spin extension: channels (n, s) -> (n-1)(2S+1) + s + 1, signs carried
/// through; delegates to the 1D machinery at N(2S+1).
TeleportReport teleport_with_spin(const Vec& phi_xs, int n, int twice_s,
                                  const HadamardMatrix& h_ext, std::uint64_t seed,
                                  const std::optional<BellLabel>& forced = std::nullopt);

} // namespace eprsim::tele
