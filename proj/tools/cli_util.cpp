#include "cli_util.hpp"

#include <cstdio>
#include <fstream>

namespace eprlab {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const auto parent = path.parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw CliError("cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

json json_number(double v) { return json::parse(fmt17(v)); }

eprsim::bohm::ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open config: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw CliError(std::string("config parse error: ") + e.what());
    }

    eprsim::bohm::ExperimentConfig cfg;
    if (doc.contains("params")) {
        const auto& p = doc["params"];
        auto get = [&](const char* key, double fallback) {
            return p.contains(key) ? p[key].get<double>() : fallback;
        };
        cfg.params.hbar = get("hbar", cfg.params.hbar);
        cfg.params.mass = get("mass", cfg.params.mass);
        cfg.params.sigma0 = get("sigma0", cfg.params.sigma0);
        cfg.params.slit_y = get("slit_y", cfg.params.slit_y);
        cfg.params.slit_x = get("slit_x", cfg.params.slit_x);
        cfg.params.k_x = get("k_x", cfg.params.k_x);
        cfg.params.k_y = get("k_y", cfg.params.k_y);
        cfg.params.screen_x = get("screen_x", cfg.params.screen_x);
    }
    const std::string layout = doc.value("layout", "two_double_slit");
    if (layout == "two_double_slit") {
        cfg.layout = eprsim::bohm::Layout::TwoDoubleSlit;
    } else if (layout == "single_double_slit_entangled") {
        cfg.layout = eprsim::bohm::Layout::SingleDoubleSlitEntangled;
    } else if (layout == "single_double_slit_disentangled") {
        cfg.layout = eprsim::bohm::Layout::SingleDoubleSlitDisentangled;
    } else {
        throw CliError("unknown layout: " + layout);
    }
    const std::string exchange = doc.value("exchange", "bosonic");
    if (exchange == "bosonic") {
        cfg.exchange = eprsim::bohm::Exchange::Bosonic;
    } else if (exchange == "fermionic") {
        cfg.exchange = eprsim::bohm::Exchange::Fermionic;
    } else {
        throw CliError("unknown exchange: " + exchange);
    }
    cfg.com_y0 = doc.value("com_y0", 0.0);
    cfg.com_spread = doc.value("com_spread", 0.0);
    cfg.uncorrected_prime_packets = doc.value("uncorrected_prime_packets", false);
    cfg.validate();
    return cfg;
}

eprsim::Vec load_state_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open state file: " + path.string());
    std::vector<eprsim::Complex> amps;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw CliError("state rows must be re,im");
        try {
            amps.emplace_back(std::stod(line.substr(0, comma)),
                              std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw CliError("bad amplitude row: " + line);
        }
    }
    if (amps.empty()) throw CliError("state file is empty");
    eprsim::Vec v(static_cast<Eigen::Index>(amps.size()));
    for (size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
    const double n = v.norm();
    if (n <= 0) throw CliError("state has zero norm");
    return v / n;
}

std::string format_state_csv(const eprsim::Vec& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out += fmt17(v(i).real());
        out += ',';
        out += fmt17(v(i).imag());
        out += '\n';
    }
    return out;
}

std::string format_matrix_csv(const eprsim::Mat& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += fmt17(m(i, j).real());
            out += ',';
            out += fmt17(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

} // namespace eprlab
