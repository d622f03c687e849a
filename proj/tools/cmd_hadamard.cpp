#include <CLI11.hpp>

#include "cli_util.hpp"
#include "commands.hpp"
#include "eprsim/hadamard.hpp"

namespace eprlab {

namespace {

struct GenArgs {
    int exponent = 1;
    std::string out;
};

void run_gen(const GenArgs& a) {
    atomic_write(a.out, eprsim::format_hadamard(eprsim::sylvester_hadamard(a.exponent)));
}

struct CheckArgs {
    std::string in, out;
};

void run_check(const CheckArgs& a) {
    std::ifstream file(a.in);
    if (!file) throw CliError("cannot open " + a.in);
    std::ostringstream buf;
    buf << file.rdbuf();

    // report the individual validation flags even when the matrix fails
    const Eigen::MatrixXi raw = eprsim::parse_hadamard_raw(buf.str());
    const auto report = eprsim::validate_hadamard(raw);
    json doc;
    doc["path"] = a.in;
    doc["order"] = static_cast<int>(raw.rows());
    doc["is_hadamard"] = report.is_hadamard;
    doc["is_symmetric"] = report.is_symmetric;
    doc["is_normalized"] = report.is_normalized;
    doc["accepted"] = report.accepted();
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty()) std::fputs(text.c_str(), stdout);
    else atomic_write(a.out, text);
    if (!report.accepted()) throw eprsim::FormatError("Hadamard file rejected: " + a.in);
}

} // namespace

void register_hadamard(CLI::App& app) {
    auto* had = app.add_subcommand("hadamard", "Hadamard matrix files");
    had->require_subcommand(1);

    {
        auto args = std::make_shared<GenArgs>();
        auto* cmd = had->add_subcommand("gen", "write the Sylvester matrix of order 2^e");
        cmd->add_option("--exponent", args->exponent, "e, order = 2^e")->required();
        cmd->add_option("--out", args->out, "output file")->required();
        cmd->callback([args] { run_gen(*args); });
    }
    {
        auto args = std::make_shared<CheckArgs>();
        auto* cmd = had->add_subcommand("check", "validate a Hadamard file");
        cmd->add_option("--in", args->in, "input file")->required();
        cmd->add_option("--out", args->out, "report JSON (default: stdout)");
        cmd->callback([args] { run_check(*args); });
    }
}

} // namespace eprlab
