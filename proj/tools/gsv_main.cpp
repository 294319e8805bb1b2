// Command-line front end: gsv <mode> --config <path> [--out <dir>] [--seed <n>]

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gsv/commands.hpp"
#include "gsv/errors.hpp"
#include "gsv/run_config.hpp"

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw gsv::InvalidInput("cannot read config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riemann solver and Godunov finite-volume simulator for the "
                 "viscoelastic (Johnson-Segalman) shallow-water system"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;

    for (const char* mode : {"eigen", "riemann", "simulate", "validate"}) {
        CLI::App* sub = app.add_subcommand(mode);
        sub->add_option("--config", config_path, "run configuration file")->required();
        sub->add_option("--out", out_dir, "output directory (default: current)");
        sub->add_option("--seed", seed, "override the validation seed")
            ->each([&seed_given](const std::string&) { seed_given = true; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        gsv::RunConfig config = gsv::parse_config(read_file(config_path));
        const gsv::RunMode cli_mode = gsv::parse_mode(app.get_subcommands().front()->get_name());
        config.mode = cli_mode;
        if (seed_given) config.seed = seed;

        const std::filesystem::path out(out_dir);
        std::filesystem::create_directories(out);
        const gsv::CommandResult result = gsv::run_command(config, out);

        for (const auto& file : result.files) {
            std::cout << "wrote " << file.string() << "\n";
        }
        if (!result.message.empty()) {
            (result.exit_code == 0 ? std::cout : std::cerr) << result.message << "\n";
        }
        return result.exit_code;
    } catch (const gsv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
