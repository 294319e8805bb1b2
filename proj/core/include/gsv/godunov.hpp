#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsv/params.hpp"
#include "gsv/state.hpp"

namespace gsv {

struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n_cells = 2;

    [[nodiscard]] double dx() const noexcept {
        return (x_max - x_min) / static_cast<double>(n_cells);
    }
    [[nodiscard]] double center(std::size_t i) const noexcept {
        return x_min + (static_cast<double>(i) + 0.5) * dx();
    }
    void validate() const;
};

enum class Boundary { transmissive, periodic, reflective };

struct SimConfig {
    Params params;
    Grid grid;
    double cfl = 0.9;
    double t_end = 0.0;
    Boundary boundary = Boundary::transmissive;
    std::vector<double> snapshot_times;

    void validate() const;
};

/// Cell-averaged conserved states at one time level.
struct Field {
    std::vector<ConservedState> cells;
    double time = 0.0;
};

using InitialCondition = std::function<PrimitiveState(double)>;

/// Midpoint-sampled initial field. Throws InvalidInput when the initial
/// condition leaves the admissible region.
[[nodiscard]] Field init(const SimConfig& config, const InitialCondition& ic);

/// CFL time step: cfl * dx / max_cells max(|lambda-|, |lambda+|).
[[nodiscard]] double stable_dt(const Field& field, const SimConfig& config);

/// One first-order Godunov transport step with exact interface Riemann
/// solutions and one ghost-cell layer. Throws StabilityError (with the cell
/// index) if a cell leaves the admissible region; violations are surfaced,
/// never clipped.
[[nodiscard]] Field step(const Field& field, const SimConfig& config, double dt);

/// Exactly integrated relaxation source step at fixed (h, u):
///   sigma <- 1 + (sigma - 1) exp(-dt/lambda).
/// Identity when lambda is infinite.
[[nodiscard]] Field relax(const Field& field, const Params& params, double dt);

struct Snapshot {
    double time = 0.0;
    Field field;
};

/// Result of a full run: snapshots at every requested time (plus t_end).
/// When a step fails, `completed` is false, `error` carries the diagnostic
/// and `snapshots` holds everything emitted before the failure.
struct RunResult {
    std::vector<Snapshot> snapshots;
    bool completed = true;
    std::string error;
};

/// Called after every completed step (transport plus relaxation).
using StepObserver = std::function<void(const Field& field, double dt)>;

/// Advances the Cauchy problem to t_end with Lie splitting (transport then
/// relaxation), clamping dt to hit snapshot times exactly. Deterministic
/// given the configuration.
[[nodiscard]] RunResult run(const SimConfig& config, const InitialCondition& ic,
                            const StepObserver& observer = nullptr);

}  // namespace gsv
