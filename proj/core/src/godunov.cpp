#include "gsv/godunov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsv/errors.hpp"
#include "gsv/model.hpp"
#include "gsv/riemann.hpp"

namespace gsv {

namespace {

bool same_state(const ConservedState& a, const ConservedState& b) noexcept {
    return a.h == b.h && a.hu == b.hu && a.hX == b.hX && a.hZinv == b.hZinv;
}

PrimitiveState reflect(const PrimitiveState& s) noexcept {
    return {s.h, -s.u, s.sxx, s.szz};
}

}  // namespace

void Grid::validate() const {
    if (n_cells < 2) {
        throw InvalidInput("grid: n_cells must be >= 2, got " + std::to_string(n_cells));
    }
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw InvalidInput("grid: need finite x_min < x_max");
    }
}

void SimConfig::validate() const {
    params.validate();
    grid.validate();
    if (!(cfl > 0.0 && cfl <= 1.0)) {
        throw InvalidInput("sim: cfl must lie in (0, 1], got " + std::to_string(cfl));
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw InvalidInput("sim: t_end must be finite and >= 0");
    }
    for (double t : snapshot_times) {
        if (!(t >= 0.0) || t > t_end) {
            throw InvalidInput("sim: snapshot time " + std::to_string(t) +
                               " outside [0, t_end]");
        }
    }
}

Field init(const SimConfig& config, const InitialCondition& ic) {
    config.validate();
    Field field;
    field.time = 0.0;
    field.cells.reserve(config.grid.n_cells);
    for (std::size_t i = 0; i < config.grid.n_cells; ++i) {
        const PrimitiveState s = ic(config.grid.center(i));
        if (!in_state_space(s)) {
            throw InvalidInput("init: initial condition leaves the admissible region at x=" +
                               std::to_string(config.grid.center(i)));
        }
        field.cells.push_back(to_conserved(s, config.params));
    }
    return field;
}

double stable_dt(const Field& field, const SimConfig& config) {
    double max_speed = 0.0;
    for (const ConservedState& v : field.cells) {
        const Eigenvalues ev = eigenvalues(to_primitive(v, config.params), config.params);
        max_speed = std::max(max_speed, std::max(std::abs(ev.minus), std::abs(ev.plus)));
    }
    return config.cfl * config.grid.dx() / max_speed;
}

Field step(const Field& field, const SimConfig& config, double dt) {
    const std::size_t n = field.cells.size();
    const Params& p = config.params;

    // ghost-padded conserved and primitive rows (one layer each side)
    std::vector<ConservedState> v(n + 2);
    std::copy(field.cells.begin(), field.cells.end(), v.begin() + 1);
    switch (config.boundary) {
        case Boundary::transmissive:
            v[0] = field.cells.front();
            v[n + 1] = field.cells.back();
            break;
        case Boundary::periodic:
            v[0] = field.cells.back();
            v[n + 1] = field.cells.front();
            break;
        case Boundary::reflective:
            v[0] = to_conserved(reflect(to_primitive(field.cells.front(), p)), p);
            v[n + 1] = to_conserved(reflect(to_primitive(field.cells.back(), p)), p);
            break;
    }

    std::vector<PrimitiveState> w(n + 2);
    for (std::size_t i = 0; i < n + 2; ++i) w[i] = to_primitive(v[i], p);

    std::vector<FluxVector> flux(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (same_state(v[i], v[i + 1])) {
            flux[i] = physical_flux(w[i], p);
        } else {
            flux[i] = interface_flux(solve(w[i], w[i + 1], p));
        }
    }

    Field out;
    out.time = field.time + dt;
    out.cells.resize(n);
    const double r = dt / config.grid.dx();
    for (std::size_t i = 0; i < n; ++i) {
        out.cells[i] = v[i + 1] - r * (flux[i + 1] - flux[i]);
        try {
            (void)to_primitive(out.cells[i], p);
        } catch (const InvalidInput& e) {
            throw StabilityError("step: cell " + std::to_string(i) +
                                     " left the admissible region at t=" +
                                     std::to_string(out.time) + ": " + e.what(),
                                 i, out.time);
        }
    }
    return out;
}

Field relax(const Field& field, const Params& params, double dt) {
    if (!params.has_relaxation()) return field;
    Field out;
    out.time = field.time;
    out.cells.reserve(field.cells.size());
    const double decay = std::exp(-dt / params.lambda);
    for (const ConservedState& v : field.cells) {
        PrimitiveState s = to_primitive(v, params);
        s.sxx = 1.0 + (s.sxx - 1.0) * decay;
        s.szz = 1.0 + (s.szz - 1.0) * decay;
        out.cells.push_back(to_conserved(s, params));
    }
    return out;
}

RunResult run(const SimConfig& config, const InitialCondition& ic,
              const StepObserver& observer) {
    config.validate();

    std::vector<double> events = config.snapshot_times;
    events.push_back(config.t_end);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    RunResult result;
    Field field = init(config, ic);

    try {
        for (double event : events) {
            while (field.time < event) {
                double dt = stable_dt(field, config);
                const double remaining = event - field.time;
                const bool final_substep = dt >= remaining;
                if (final_substep) dt = remaining;
                field = step(field, config, dt);
                if (config.params.has_relaxation()) {
                    field = relax(field, config.params, dt);
                }
                if (final_substep) field.time = event;
                if (observer) observer(field, dt);
            }
            result.snapshots.push_back({event, field});
        }
    } catch (const Error& e) {
        result.completed = false;
        result.error = e.what();
    }
    return result;
}

}  // namespace gsv
