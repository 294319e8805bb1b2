#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/godunov.hpp"
#include "gsv/params.hpp"
#include "gsv/state.hpp"

namespace gsv {

enum class RunMode { eigen, riemann, simulate, validate };

enum class InitialConditionKind { riemann, dam_break, smooth_bump };

/// Fully resolved run configuration parsed from the sectioned key-value
/// format documented in the README. Defaults are recorded explicitly:
/// cfl = 0.9, boundary = transmissive, lambda = inf.
struct RunConfig {
    RunMode mode = RunMode::riemann;
    Params params;

    // [left] / [right] state blocks
    PrimitiveState left{1.0, 0.0, 1.0, 1.0};
    PrimitiveState right{1.0, 0.0, 1.0, 1.0};

    // [riemann] profile sampling grid
    double xi_min = -10.0;
    double xi_max = 10.0;
    std::size_t xi_samples = 1001;

    // [grid] / [time] / [sim]
    Grid grid{-1.0, 1.0, 200};
    double cfl = 0.9;
    double t_end = 0.0;
    Boundary boundary = Boundary::transmissive;
    std::vector<double> snapshot_times;
    InitialConditionKind ic = InitialConditionKind::riemann;
    double x0 = 0.0;  // interface position for riemann / dam-break data
    PrimitiveState base{1.0, 0.0, 1.0, 1.0};  // smooth-bump background
    double bump_amplitude = 0.2;
    double bump_width = 0.1;
    double bump_center = 0.0;

    // [validate]
    std::uint64_t seed = 42;
    bool negative_control = false;

    // which blocks appeared in the parsed text (for per-mode requirements)
    bool has_left = false;
    bool has_right = false;
    bool has_grid = false;
    bool has_time = false;
};

[[nodiscard]] RunMode parse_mode(std::string_view name);
[[nodiscard]] std::string_view mode_name(RunMode mode);

/// Parses and validates the sectioned key-value configuration text.
/// Unknown sections or keys, malformed values and out-of-range parameters
/// (e.g. zeta > 1/2) are rejected with messages naming the offender.
[[nodiscard]] RunConfig parse_config(std::string_view text);

/// Canonical textual form; parse_config(serialize_config(c)) reproduces c.
[[nodiscard]] std::string serialize_config(const RunConfig& config);

/// Throws InvalidInput when blocks required by the mode are missing.
void require_blocks_for_mode(const RunConfig& config, RunMode mode);

[[nodiscard]] SimConfig to_sim_config(const RunConfig& config);
[[nodiscard]] InitialCondition make_initial_condition(const RunConfig& config);

}  // namespace gsv
