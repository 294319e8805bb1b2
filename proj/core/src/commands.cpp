#include "gsv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "gsv/csv.hpp"
#include "gsv/errors.hpp"
#include "gsv/model.hpp"
#include "gsv/riemann.hpp"
#include "gsv/validation.hpp"

namespace gsv {

namespace {

std::string_view kind_name(WaveKind k) {
    switch (k) {
        case WaveKind::shock: return "shock";
        case WaveKind::fan: return "fan";
        case WaveKind::contact: return "contact";
        case WaveKind::none: return "zero-amplitude";
    }
    return "?";
}

std::string_view field_name(CharField f) {
    switch (f) {
        case CharField::minus: return "minus";
        case CharField::zero: return "zero";
        case CharField::plus: return "plus";
    }
    return "?";
}

void write_state_fields(CsvWriter& csv, const PrimitiveState& s) {
    csv.field(s.h).field(s.u).field(s.sxx).field(s.szz);
}

}  // namespace

CommandResult cmd_eigen(const RunConfig& config, const std::filesystem::path& out_dir) {
    require_blocks_for_mode(config, RunMode::eigen);
    require_valid(config.left);

    CommandResult result;
    const auto path = out_dir / "eigen.csv";
    CsvWriter csv(path);
    csv.field("h").field("u").field("sxx").field("szz");
    csv.field("lambda_minus").field("lambda_zero").field("lambda_plus");
    csv.field("dP_dh").field("gnl_minus").field("gnl_plus").field("P").field("F");
    csv.end_row();

    const PrimitiveState& s = config.left;
    const Eigenvalues ev = eigenvalues(s, config.params);
    const GenuineNonlinearity gnl = genuine_nonlinearity(s, config.params);
    write_state_fields(csv, s);
    csv.field(ev.minus).field(ev.zero).field(ev.plus);
    csv.field(dP_dh(s, config.params));
    csv.field(gnl.minus).field(gnl.plus);
    csv.field(total_pressure(s, config.params)).field(free_energy(s, config.params));
    csv.end_row();

    result.files.push_back(path);
    return result;
}

CommandResult cmd_riemann(const RunConfig& config, const std::filesystem::path& out_dir) {
    require_blocks_for_mode(config, RunMode::riemann);
    CommandResult result;

    RiemannSolution sol;
    try {
        sol = solve(config.left, config.right, config.params);
    } catch (const Error& e) {
        result.exit_code = 2;
        result.message = std::string("riemann solve failed: ") + e.what();
        return result;
    }

    {
        const auto path = out_dir / "riemann_star.csv";
        CsvWriter csv(path);
        csv.field("p_star").field("u_star").field("h_star_left").field("h_star_right");
        csv.field("sxx_star_left").field("szz_star_left");
        csv.field("sxx_star_right").field("szz_star_right").field("iterations");
        csv.end_row();
        csv.field(sol.p_star).field(sol.u_star);
        csv.field(sol.star_left.h).field(sol.star_right.h);
        csv.field(sol.star_left.sxx).field(sol.star_left.szz);
        csv.field(sol.star_right.sxx).field(sol.star_right.szz);
        csv.field(static_cast<std::size_t>(sol.iterations));
        csv.end_row();
        result.files.push_back(path);
    }

    {
        const auto path = out_dir / "riemann_waves.csv";
        CsvWriter csv(path);
        csv.field("family").field("kind").field("head").field("tail");
        csv.field("h_left").field("u_left").field("sxx_left").field("szz_left");
        csv.field("h_right").field("u_right").field("sxx_right").field("szz_right");
        csv.field("rh_res_h").field("rh_res_hu").field("rh_res_hX").field("rh_res_hZinv");
        csv.field("entropy_E");
        csv.end_row();

        const Diagnostics diag = diagnostics(sol);
        for (const Wave& w : sol.waves) {
            csv.field(field_name(w.field)).field(kind_name(w.kind));
            csv.field(w.head).field(w.tail);
            write_state_fields(csv, w.left);
            write_state_fields(csv, w.right);
            const DiscontinuityReport* report = nullptr;
            for (const DiscontinuityReport& d : diag.discontinuities) {
                if (d.field == w.field) report = &d;
            }
            if (report != nullptr) {
                for (int i = 0; i < 4; ++i) csv.field(report->rh_residual[i]);
                csv.field(report->entropy_dissipation);
            } else {
                // fans are not discontinuities; leave the residual cells empty
                for (int i = 0; i < 5; ++i) csv.field("");
            }
            csv.end_row();
        }
        result.files.push_back(path);
    }

    {
        if (config.xi_samples < 2 || !(config.xi_max > config.xi_min)) {
            throw InvalidInput("config: riemann profile grid needs xi_min < xi_max and "
                               "samples >= 2");
        }
        const auto path = out_dir / "riemann_profile.csv";
        CsvWriter csv(path);
        csv.field("xi").field("h").field("u").field("sxx").field("szz").field("P").field("F");
        csv.end_row();
        for (std::size_t i = 0; i < config.xi_samples; ++i) {
            const double xi = config.xi_min + (config.xi_max - config.xi_min) *
                                                  static_cast<double>(i) /
                                                  static_cast<double>(config.xi_samples - 1);
            const PrimitiveState s = sample(sol, xi);
            csv.field(xi);
            write_state_fields(csv, s);
            csv.field(total_pressure(s, config.params)).field(free_energy(s, config.params));
            csv.end_row();
        }
        result.files.push_back(path);
    }
    return result;
}

CommandResult cmd_simulate(const RunConfig& config, const std::filesystem::path& out_dir) {
    require_blocks_for_mode(config, RunMode::simulate);
    CommandResult result;

    const SimConfig sim = to_sim_config(config);
    sim.validate();
    const InitialCondition ic = make_initial_condition(config);

    const auto conservation_path = out_dir / "conservation.csv";
    CsvWriter conservation(conservation_path);
    conservation.field("step").field("time");
    conservation.field("total_h").field("total_hu").field("total_hX").field("total_hZinv");
    conservation.end_row();

    std::size_t step_count = 0;
    const auto log_totals = [&](const Field& f) {
        ConservedState total{};
        for (const ConservedState& v : f.cells) total = total + v;
        conservation.field(step_count).field(f.time);
        conservation.field(total.h).field(total.hu).field(total.hX).field(total.hZinv);
        conservation.end_row();
    };

    log_totals(init(sim, ic));
    const RunResult run_result = run(sim, ic, [&](const Field& f, double) {
        ++step_count;
        log_totals(f);
    });
    result.files.push_back(conservation_path);

    for (std::size_t k = 0; k < run_result.snapshots.size(); ++k) {
        char name[40];
        std::snprintf(name, sizeof(name), "snapshot_%03zu.csv", k);
        const auto path = out_dir / name;
        CsvWriter csv(path);
        csv.field("x").field("h").field("u").field("sxx").field("szz");
        csv.end_row();
        const Snapshot& snap = run_result.snapshots[k];
        for (std::size_t i = 0; i < snap.field.cells.size(); ++i) {
            const PrimitiveState s = to_primitive(snap.field.cells[i], config.params);
            csv.field(sim.grid.center(i));
            write_state_fields(csv, s);
            csv.end_row();
        }
        result.files.push_back(path);
    }

    if (!run_result.completed) {
        result.exit_code = 2;
        result.message = "simulation aborted: " + run_result.error +
                         " (partial snapshots written)";
    }
    return result;
}

CommandResult cmd_validate(const RunConfig& config, const std::filesystem::path& out_dir) {
    CommandResult result;
    const auto reports = run_validation_suite(config.seed, config.negative_control);

    const auto path = out_dir / "validation_report.csv";
    CsvWriter csv(path);
    csv.field("property").field("passed").field("observed").field("threshold").field("detail");
    csv.end_row();
    bool all_passed = true;
    for (const SweepReport& r : reports) {
        csv.field(r.property).field(r.passed ? "true" : "false");
        csv.field(r.observed).field(r.threshold);
        std::string detail = r.detail;
        for (char& ch : detail) {
            if (ch == ',') ch = ';';
        }
        csv.field(detail);
        csv.end_row();
        all_passed = all_passed && r.passed;
    }
    result.files.push_back(path);
    if (!all_passed) {
        result.exit_code = 2;
        result.message = "validation failures recorded in " + path.string();
    }
    return result;
}

CommandResult run_command(const RunConfig& config, const std::filesystem::path& out_dir) {
    switch (config.mode) {
        case RunMode::eigen: return cmd_eigen(config, out_dir);
        case RunMode::riemann: return cmd_riemann(config, out_dir);
        case RunMode::simulate: return cmd_simulate(config, out_dir);
        case RunMode::validate: return cmd_validate(config, out_dir);
    }
    throw InvalidInput("run_command: unknown mode");
}

}  // namespace gsv
