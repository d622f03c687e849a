#pragma once

namespace CLI {
class App;
}

namespace eprlab {

void register_bohm(CLI::App& app);
void register_dense(CLI::App& app);
void register_teleport(CLI::App& app);
void register_hadamard(CLI::App& app);

} // namespace eprlab
