#include <CLI11.hpp>

#include "cli_util.hpp"
#include "commands.hpp"
#include "eprsim/rates.hpp"
#include "eprsim/tables.hpp"

namespace eprlab {

using namespace eprsim;
using namespace eprsim::dense;

namespace {

HadamardMatrix hadamard_for(int n, const std::string& path) {
    if (path.empty()) return default_hadamard(2 * n);
    const HadamardMatrix h = load_hadamard(path);
    if (h.order() != 2 * n) throw CliError("Hadamard file must have order 2N");
    return h;
}

json label_json(const BellLabel& label) {
    json j;
    j["k"] = label.k;
    j["sign"] = label.sign > 0 ? "+" : "-";
    j["j"] = label.j;
    return j;
}

struct BellArgs {
    int n = 2;
    int k = 1, j = 1;
    std::string sign = "-";
    std::string hadamard, out, op_out;
};

void run_bell(const BellArgs& a) {
    const auto h = hadamard_for(a.n, a.hadamard);
    const BellLabel label{a.k, a.sign == "+" ? +1 : -1, a.j};
    if (!a.out.empty()) {
        atomic_write(a.out, format_state_csv(bell_state(a.n, h, label)));
    }
    if (!a.op_out.empty()) {
        atomic_write(a.op_out, format_matrix_csv(encode_operator(a.n, h, label)));
    }
    if (a.out.empty() && a.op_out.empty()) {
        throw CliError("nothing to do: pass --out and/or --op-out");
    }
}

struct RoundtripArgs {
    int n = 2;
    bool all = false;
    std::string message, hadamard, out;
};

void run_roundtrip(const RoundtripArgs& a) {
    const BsmContext ctx(a.n, hadamard_for(a.n, a.hadamard));
    std::vector<std::string> messages;
    if (a.all) {
        for (int flat = 1; flat <= 4 * a.n * a.n; ++flat) {
            messages.push_back(flat_code_to_message(flat, a.n));
        }
    } else if (!a.message.empty()) {
        messages.push_back(a.message);
    } else {
        throw CliError("pass --all or --message");
    }

    json results = json::array();
    int failures = 0;
    for (const auto& msg : messages) {
        const RoundTripRecord rec = dense_roundtrip(ctx, msg);
        json r;
        r["N"] = rec.n;
        r["label"] = label_json(rec.label);
        r["outcome"] = {rec.outcome.alice.value, rec.outcome.bob.value};
        r["renamed"] = rec.outcome.renamed;
        r["message_in"] = rec.message_in;
        r["message_out"] = rec.message_out;
        if (!rec.ok) ++failures;
        results.push_back(std::move(r));
    }
    json doc;
    doc["N"] = a.n;
    doc["bits_per_particle"] = json_number(2.0 * std::log2(2.0 * a.n));
    doc["count"] = results.size();
    doc["failures"] = failures;
    doc["results"] = std::move(results);
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
}

struct RatesArgs {
    int n = 2, nn = 2;
    double tc = 1, th = 1, tp = 4, tu = -1;
    std::string out;
};

void run_rates(const RatesArgs& a) {
    GateTimes times{a.tc, a.th, a.tp, a.tu > 0 ? a.tu : double(a.n)};
    const InfoRates r = info_rates(a.n, a.nn, times);
    json doc;
    doc["N"] = a.n;
    doc["NN"] = a.nn;
    doc["times"] = {{"t_c", json_number(times.t_c)},
                    {"t_h", json_number(times.t_h)},
                    {"t_p", json_number(times.t_p)},
                    {"t_u", json_number(times.t_u)}};
    doc["bits_per_particle"] = json_number(r.bits_per_particle);
    doc["R_x"] = json_number(r.r_x);
    doc["R_p"] = json_number(r.r_p);
    doc["R_m"] = json_number(r.r_m);
    doc["r_p_corrected"] = json_number(r.r_p_corrected);
    doc["r_m_corrected"] = json_number(r.r_m_corrected);
    doc["r_p_per_particle"] = json_number(r.r_p_per_particle);
    doc["r_m_per_particle"] = json_number(r.r_m_per_particle);
    doc["ratio_x_over_p"] = json_number(r.ratio_x_over_p);
    doc["asymptotic_ratio"] = json_number(r.asymptotic_ratio);
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
}

struct TablesArgs {
    int n = 2;
    std::string outdir;
};

void run_tables(const TablesArgs& a) {
    if (a.n != 1 && a.n != 2 && a.n != 4) {
        throw CliError("tables are generated for N in {1, 2, 4}");
    }
    const std::filesystem::path dir(a.outdir);
    atomic_write(dir / ("prep_n" + std::to_string(a.n) + ".csv"),
                 preparation_table_csv(a.n));
    atomic_write(dir / ("meas_n" + std::to_string(a.n) + ".csv"),
                 measurement_table_csv(a.n));
}

} // namespace

void register_dense(CLI::App& app) {
    auto* dense = app.add_subcommand("dense", "spatial dense coding protocol");
    dense->require_subcommand(1);

    {
        auto args = std::make_shared<BellArgs>();
        auto* cmd = dense->add_subcommand("bell", "emit a Bell state / encoder as CSV");
        cmd->add_option("--n", args->n, "channel count N")->required();
        cmd->add_option("--k", args->k, "family index");
        cmd->add_option("--sign", args->sign, "family sign + or -")
            ->check(CLI::IsMember({"+", "-"}));
        cmd->add_option("--j", args->j, "member index");
        cmd->add_option("--hadamard", args->hadamard, "order-2N Hadamard file");
        cmd->add_option("--out", args->out, "state CSV (re,im rows)");
        cmd->add_option("--op-out", args->op_out, "encoder matrix CSV");
        cmd->callback([args] { run_bell(*args); });
    }
    {
        auto args = std::make_shared<RoundtripArgs>();
        auto* cmd = dense->add_subcommand("roundtrip", "encode, measure and decode messages");
        cmd->add_option("--n", args->n, "channel count N")->required();
        cmd->add_flag("--all", args->all, "run every message");
        cmd->add_option("--message", args->message, "single message (bits, or integer)");
        cmd->add_option("--hadamard", args->hadamard, "order-2N Hadamard file");
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_roundtrip(*args); });
    }
    {
        auto args = std::make_shared<RatesArgs>();
        auto* cmd = dense->add_subcommand("rates", "classical information gain rates");
        cmd->add_option("--n", args->n, "channel count N")->required();
        cmd->add_option("--nn", args->nn, "qubit count of the compared schemes")->required();
        cmd->add_option("--tc", args->tc, "CNOT time");
        cmd->add_option("--th", args->th, "Hadamard time");
        cmd->add_option("--tp", args->tp, "PCS time");
        cmd->add_option("--tu", args->tu, "U_(N) time (default: N * t_c)");
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_rates(*args); });
    }
    {
        auto args = std::make_shared<TablesArgs>();
        auto* cmd = dense->add_subcommand(
            "tables", "regenerate the preparation/measurement tables as CSV");
        cmd->add_option("--n", args->n, "channel count N (1, 2 or 4)")->required();
        cmd->add_option("--outdir", args->outdir, "output directory")->required();
        cmd->callback([args] { run_tables(*args); });
    }
}

} // namespace eprlab
