#include <CLI11.hpp>

#include <iostream>

#include "cli_util.hpp"
#include "commands.hpp"
#include "eprsim/errors.hpp"

namespace {

void emit_error(const char* type, const std::string& message) {
    eprlab::json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eprlab: entangled double-slit trajectories, spatial dense coding and "
                 "wavefunction teleportation"};
    app.require_subcommand(1);

    eprlab::register_bohm(app);
    eprlab::register_dense(app);
    eprlab::register_teleport(app);
    eprlab::register_hadamard(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        emit_error("usage", e.what());
        return 2;
    } catch (const eprsim::NodeError& e) {
        emit_error("node", e.what());
        return 3;
    } catch (const eprsim::AmbiguityError& e) {
        emit_error("ambiguity", e.what());
        return 3;
    } catch (const eprsim::CoverageError& e) {
        emit_error("coverage", e.what());
        return 2;
    } catch (const eprsim::CapabilityError& e) {
        emit_error("capability", e.what());
        return 2;
    } catch (const eprsim::StateError& e) {
        emit_error("state", e.what());
        return 3;
    } catch (const eprsim::FormatError& e) {
        emit_error("format", e.what());
        return 2;
    } catch (const eprsim::SizeError& e) {
        emit_error("size", e.what());
        return 2;
    } catch (const eprlab::CliError& e) {
        emit_error("config", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 3;
    }
    return 0;
}
