#include <CLI11.hpp>

#include <random>

#include "cli_util.hpp"
#include "commands.hpp"
#include "eprsim/teleport.hpp"

namespace eprlab {

using namespace eprsim;
using namespace eprsim::tele;

namespace {

HadamardMatrix hadamard_for(int n, const std::string& path) {
    if (path.empty()) return dense::default_hadamard(2 * n);
    const HadamardMatrix h = load_hadamard(path);
    if (h.order() != 2 * n) throw CliError("Hadamard file must have order 2N");
    return h;
}

Vec random_unknown_state(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
    return v / v.norm();
}

json label_json(const dense::BellLabel& label, const char* family_key,
                const char* member_key) {
    json j;
    j[family_key] = label.k;
    j["sign"] = label.sign > 0 ? "+" : "-";
    j[member_key] = label.j;
    return j;
}

struct RunArgs {
    int n = 2;
    int m = 0;       // momentum channels; 0 = position-only
    int twice_s = 0; // 2S
    std::uint64_t seed = 0;
    std::string state_path, hadamard_x, hadamard_p, out;
};

void run_teleport(const RunArgs& a) {
    json doc;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["seed"] = a.seed;

    if (a.m > 0) {
        const auto hx = hadamard_for(a.n, a.hadamard_x);
        const auto hp = hadamard_for(a.m, a.hadamard_p);
        const Vec phi = a.state_path.empty()
                            ? random_unknown_state(4 * a.n * a.m, a.seed)
                            : load_state_csv(a.state_path);
        if (phi.size() != 4 * a.n * a.m) {
            throw CliError("state must have 2N*2M amplitudes for a 3D run");
        }
        const auto rep = teleport_3d(phi, a.n, a.m, hx, hp, a.seed);
        doc["outcome_position"] = label_json(rep.outcome_position, "k", "j");
        doc["outcome_momentum"] = label_json(rep.outcome_momentum, "q", "r");
        doc["fidelity"] = json_number(rep.fidelity);
    } else {
        const int n_eff = a.n * (a.twice_s + 1);
        const auto h = hadamard_for(n_eff, a.hadamard_x);
        const Vec phi = a.state_path.empty() ? random_unknown_state(2 * n_eff, a.seed)
                                             : load_state_csv(a.state_path);
        if (phi.size() != 2 * n_eff) {
            throw CliError("state must have 2N(2S+1) amplitudes");
        }
        const TeleportReport rep =
            a.twice_s > 0 ? teleport_with_spin(phi, a.n, a.twice_s, h, a.seed)
                          : simulate_teleport(phi, a.n, h, a.seed);
        doc["outcome_position"] = label_json(rep.outcome, "k", "j");
        doc["outcome_momentum"] = nullptr;
        doc["fidelity"] = json_number(rep.fidelity);
    }
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
}

struct ExpandArgs {
    int n = 2;
    std::string state_path, hadamard, out;
};

void run_expand(const ExpandArgs& a) {
    const auto h = hadamard_for(a.n, a.hadamard);
    const Vec phi = load_state_csv(a.state_path);
    if (phi.size() != 2 * a.n) throw CliError("state must have 2N amplitudes");
    json entries = json::array();
    for (const auto& e : bell_expand(phi, a.n, h)) {
        json row;
        row["label"] = label_json(e.label, "k", "j");
        row["probability"] = json_number(e.probability);
        json residual = json::array();
        for (Eigen::Index i = 0; i < e.residual.size(); ++i) {
            residual.push_back({json_number(e.residual(i).real()),
                                json_number(e.residual(i).imag())});
        }
        row["residual"] = std::move(residual);
        entries.push_back(std::move(row));
    }
    json doc;
    doc["n"] = a.n;
    doc["entries"] = std::move(entries);
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
}

} // namespace

void register_teleport(CLI::App& app) {
    auto* tp = app.add_subcommand("teleport", "wavefunction teleportation protocol");
    tp->require_subcommand(1);

    {
        auto args = std::make_shared<RunArgs>();
        auto* cmd = tp->add_subcommand("run", "teleport a (seeded or supplied) unknown state");
        cmd->add_option("--n", args->n, "position channel count N")->required();
        cmd->add_option("--m", args->m, "momentum channel count M (adds the z direction)");
        cmd->add_option("--spin", args->twice_s, "twice the spin (2S)");
        cmd->add_option("--seed", args->seed, "outcome-sampling seed");
        cmd->add_option("--state", args->state_path, "unknown state CSV (re,im rows)");
        cmd->add_option("--hadamard", args->hadamard_x, "order-2N Hadamard file");
        cmd->add_option("--hadamard-p", args->hadamard_p, "order-2M Hadamard file");
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_teleport(*args); });
    }
    {
        auto args = std::make_shared<ExpandArgs>();
        auto* cmd = tp->add_subcommand("expand", "expand |phi>|psi_1> over the Bell basis");
        cmd->add_option("--n", args->n, "position channel count N")->required();
        cmd->add_option("--state", args->state_path, "unknown state CSV")->required();
        cmd->add_option("--hadamard", args->hadamard, "order-2N Hadamard file");
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_expand(*args); });
    }
}

} // namespace eprlab
