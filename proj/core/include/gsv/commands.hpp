#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gsv/run_config.hpp"

namespace gsv {

struct CommandResult {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
    std::string message;
};

/// Writes eigen.csv: eigenstructure of the [left] state.
CommandResult cmd_eigen(const RunConfig& config, const std::filesystem::path& out_dir);

/// Writes riemann_star.csv, riemann_waves.csv (wave structure with jump
/// residuals and entropy dissipation per discontinuity) and
/// riemann_profile.csv (xi, h, u, sxx, szz, P, F over the requested grid).
/// Solver errors are reported in the message with a nonzero exit code.
CommandResult cmd_riemann(const RunConfig& config, const std::filesystem::path& out_dir);

/// Writes snapshot_<k>.csv per snapshot time (x, h, u, sxx, szz) and
/// conservation.csv with the four conserved totals per step.
CommandResult cmd_simulate(const RunConfig& config, const std::filesystem::path& out_dir);

/// Runs the validation suite and writes validation_report.csv; exit code is
/// nonzero when any property fails.
CommandResult cmd_validate(const RunConfig& config, const std::filesystem::path& out_dir);

/// Dispatch on config.mode.
CommandResult run_command(const RunConfig& config, const std::filesystem::path& out_dir);

}  // namespace gsv
