#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "eprsim/linalg.hpp"
#include "eprsim/phys_params.hpp"

namespace eprlab {

using json = nlohmann::ordered_json;

/// Doubles are serialized with 17 significant digits so a rerun on the same
/// build reproduces output files byte for byte.
std::string fmt17(double v);

/// Write-to-temp-then-rename; no partial files on failure.
void atomic_write(const std::filesystem::path& path, const std::string& content);

json json_number(double v);

eprsim::bohm::ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Amplitude CSV: one "re,im" row per basis entry.
eprsim::Vec load_state_csv(const std::filesystem::path& path);
std::string format_state_csv(const eprsim::Vec& v);
std::string format_matrix_csv(const eprsim::Mat& m);

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace eprlab
