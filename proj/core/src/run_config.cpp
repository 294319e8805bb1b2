#include "gsv/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gsv/errors.hpp"

namespace gsv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    if (value == "inf" || value == "infinite") return std::numeric_limits<double>::infinity();
    const std::string buf(value);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty()) {
        throw InvalidInput("config: key '" + std::string(key) + "' has malformed number '" +
                           buf + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view key, std::string_view value) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw InvalidInput("config: key '" + std::string(key) + "' has malformed count '" +
                           std::string(value) + "'");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw InvalidInput("config: key '" + std::string(key) + "' expects true/false");
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
    std::vector<double> out;
    std::string token;
    std::istringstream is{std::string(value)};
    while (std::getline(is, token, ',')) {
        const std::string_view t = trim(token);
        if (t.empty()) continue;
        out.push_back(parse_double(key, t));
    }
    return out;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void set_state_field(PrimitiveState& s, std::string_view key, double v,
                     std::string_view section) {
    if (key == "h") {
        s.h = v;
    } else if (key == "u") {
        s.u = v;
    } else if (key == "sxx") {
        s.sxx = v;
    } else if (key == "szz") {
        s.szz = v;
    } else {
        throw InvalidInput("config: unknown key '" + std::string(key) + "' in section [" +
                           std::string(section) + "]");
    }
}

}  // namespace

RunMode parse_mode(std::string_view name) {
    if (name == "eigen") return RunMode::eigen;
    if (name == "riemann") return RunMode::riemann;
    if (name == "simulate") return RunMode::simulate;
    if (name == "validate") return RunMode::validate;
    throw InvalidInput("unknown mode '" + std::string(name) +
                       "'; expected eigen|riemann|simulate|validate");
}

std::string_view mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::eigen: return "eigen";
        case RunMode::riemann: return "riemann";
        case RunMode::simulate: return "simulate";
        case RunMode::validate: return "validate";
    }
    return "riemann";
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::string section;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw InvalidInput("config: malformed section header at line " +
                                   std::to_string(line_no));
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "params" && section != "left" && section != "right" &&
                section != "riemann" && section != "grid" && section != "time" &&
                section != "sim" && section != "validate") {
                throw InvalidInput("config: unknown section [" + section + "]");
            }
            if (section == "left") cfg.has_left = true;
            if (section == "right") cfg.has_right = true;
            if (section == "grid") cfg.has_grid = true;
            if (section == "time") cfg.has_time = true;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidInput("config: expected 'key = value' at line " +
                               std::to_string(line_no));
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (section.empty()) {
            if (key == "mode") {
                cfg.mode = parse_mode(value);
            } else {
                throw InvalidInput("config: key '" + std::string(key) +
                                   "' outside any section (only 'mode' is allowed there)");
            }
        } else if (section == "params") {
            if (key == "g") {
                cfg.params.g = parse_double(key, value);
            } else if (key == "G") {
                cfg.params.G = parse_double(key, value);
            } else if (key == "zeta") {
                cfg.params.zeta = parse_double(key, value);
            } else if (key == "lambda") {
                cfg.params.lambda = parse_double(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) + "' in [params]");
            }
        } else if (section == "left") {
            set_state_field(cfg.left, key, parse_double(key, value), section);
        } else if (section == "right") {
            set_state_field(cfg.right, key, parse_double(key, value), section);
        } else if (section == "riemann") {
            if (key == "xi_min") {
                cfg.xi_min = parse_double(key, value);
            } else if (key == "xi_max") {
                cfg.xi_max = parse_double(key, value);
            } else if (key == "samples") {
                cfg.xi_samples = parse_count(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) +
                                   "' in [riemann]");
            }
        } else if (section == "grid") {
            if (key == "x_min") {
                cfg.grid.x_min = parse_double(key, value);
            } else if (key == "x_max") {
                cfg.grid.x_max = parse_double(key, value);
            } else if (key == "n_cells") {
                cfg.grid.n_cells = parse_count(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) + "' in [grid]");
            }
        } else if (section == "time") {
            if (key == "t_end") {
                cfg.t_end = parse_double(key, value);
            } else if (key == "cfl") {
                cfg.cfl = parse_double(key, value);
            } else if (key == "snapshots") {
                cfg.snapshot_times = parse_list(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) + "' in [time]");
            }
        } else if (section == "sim") {
            if (key == "boundary") {
                if (value == "transmissive") {
                    cfg.boundary = Boundary::transmissive;
                } else if (value == "periodic") {
                    cfg.boundary = Boundary::periodic;
                } else if (value == "reflective") {
                    cfg.boundary = Boundary::reflective;
                } else {
                    throw InvalidInput("config: boundary '" + std::string(value) +
                                       "' is not transmissive|periodic|reflective");
                }
            } else if (key == "ic") {
                if (value == "riemann") {
                    cfg.ic = InitialConditionKind::riemann;
                } else if (value == "dam-break") {
                    cfg.ic = InitialConditionKind::dam_break;
                } else if (value == "smooth-bump") {
                    cfg.ic = InitialConditionKind::smooth_bump;
                } else {
                    throw InvalidInput("config: ic '" + std::string(value) +
                                       "' is not riemann|dam-break|smooth-bump");
                }
            } else if (key == "x0") {
                cfg.x0 = parse_double(key, value);
            } else if (key == "base_h") {
                cfg.base.h = parse_double(key, value);
            } else if (key == "base_u") {
                cfg.base.u = parse_double(key, value);
            } else if (key == "base_sxx") {
                cfg.base.sxx = parse_double(key, value);
            } else if (key == "base_szz") {
                cfg.base.szz = parse_double(key, value);
            } else if (key == "bump_amplitude") {
                cfg.bump_amplitude = parse_double(key, value);
            } else if (key == "bump_width") {
                cfg.bump_width = parse_double(key, value);
            } else if (key == "bump_center") {
                cfg.bump_center = parse_double(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) + "' in [sim]");
            }
        } else if (section == "validate") {
            if (key == "seed") {
                cfg.seed = parse_count(key, value);
            } else if (key == "negative_control") {
                cfg.negative_control = parse_bool(key, value);
            } else {
                throw InvalidInput("config: unknown key '" + std::string(key) +
                                   "' in [validate]");
            }
        }
    }

    cfg.params.validate();
    return cfg;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os << "mode = " << mode_name(c.mode) << "\n\n";
    os << "[params]\n";
    os << "g = " << format_number(c.params.g) << "\n";
    os << "G = " << format_number(c.params.G) << "\n";
    os << "zeta = " << format_number(c.params.zeta) << "\n";
    os << "lambda = "
       << (std::isfinite(c.params.lambda) ? format_number(c.params.lambda) : "inf") << "\n\n";

    const auto state_block = [&os](const char* name, const PrimitiveState& s) {
        os << "[" << name << "]\n";
        os << "h = " << format_number(s.h) << "\n";
        os << "u = " << format_number(s.u) << "\n";
        os << "sxx = " << format_number(s.sxx) << "\n";
        os << "szz = " << format_number(s.szz) << "\n\n";
    };
    state_block("left", c.left);
    state_block("right", c.right);

    os << "[riemann]\n";
    os << "xi_min = " << format_number(c.xi_min) << "\n";
    os << "xi_max = " << format_number(c.xi_max) << "\n";
    os << "samples = " << c.xi_samples << "\n\n";

    os << "[grid]\n";
    os << "x_min = " << format_number(c.grid.x_min) << "\n";
    os << "x_max = " << format_number(c.grid.x_max) << "\n";
    os << "n_cells = " << c.grid.n_cells << "\n\n";

    os << "[time]\n";
    os << "t_end = " << format_number(c.t_end) << "\n";
    os << "cfl = " << format_number(c.cfl) << "\n";
    os << "snapshots =";
    for (std::size_t i = 0; i < c.snapshot_times.size(); ++i) {
        os << (i == 0 ? " " : ", ") << format_number(c.snapshot_times[i]);
    }
    os << "\n\n";

    os << "[sim]\n";
    os << "boundary = "
       << (c.boundary == Boundary::transmissive
               ? "transmissive"
               : (c.boundary == Boundary::periodic ? "periodic" : "reflective"))
       << "\n";
    os << "ic = "
       << (c.ic == InitialConditionKind::riemann
               ? "riemann"
               : (c.ic == InitialConditionKind::dam_break ? "dam-break" : "smooth-bump"))
       << "\n";
    os << "x0 = " << format_number(c.x0) << "\n";
    os << "base_h = " << format_number(c.base.h) << "\n";
    os << "base_u = " << format_number(c.base.u) << "\n";
    os << "base_sxx = " << format_number(c.base.sxx) << "\n";
    os << "base_szz = " << format_number(c.base.szz) << "\n";
    os << "bump_amplitude = " << format_number(c.bump_amplitude) << "\n";
    os << "bump_width = " << format_number(c.bump_width) << "\n";
    os << "bump_center = " << format_number(c.bump_center) << "\n\n";

    os << "[validate]\n";
    os << "seed = " << c.seed << "\n";
    os << "negative_control = " << (c.negative_control ? "true" : "false") << "\n";
    return os.str();
}

void require_blocks_for_mode(const RunConfig& c, RunMode mode) {
    const auto need = [](bool present, const char* block, const char* mode_str) {
        if (!present) {
            throw InvalidInput("config: mode '" + std::string(mode_str) +
                               "' requires a [" + std::string(block) + "] block");
        }
    };
    switch (mode) {
        case RunMode::eigen:
            need(c.has_left, "left", "eigen");
            break;
        case RunMode::riemann:
            need(c.has_left, "left", "riemann");
            need(c.has_right, "right", "riemann");
            break;
        case RunMode::simulate:
            need(c.has_grid, "grid", "simulate");
            need(c.has_time, "time", "simulate");
            if (c.ic != InitialConditionKind::smooth_bump) {
                need(c.has_left, "left", "simulate");
                need(c.has_right, "right", "simulate");
            }
            break;
        case RunMode::validate:
            break;
    }
}

SimConfig to_sim_config(const RunConfig& c) {
    SimConfig sim;
    sim.params = c.params;
    sim.grid = c.grid;
    sim.cfl = c.cfl;
    sim.t_end = c.t_end;
    sim.boundary = c.boundary;
    sim.snapshot_times = c.snapshot_times;
    return sim;
}

InitialCondition make_initial_condition(const RunConfig& c) {
    switch (c.ic) {
        case InitialConditionKind::riemann:
        case InitialConditionKind::dam_break: {
            const PrimitiveState l = c.left;
            const PrimitiveState r = c.right;
            const double x0 = c.x0;
            return [l, r, x0](double x) { return x < x0 ? l : r; };
        }
        case InitialConditionKind::smooth_bump: {
            const PrimitiveState base = c.base;
            const double amp = c.bump_amplitude;
            const double width = c.bump_width;
            const double center = c.bump_center;
            return [base, amp, width, center](double x) {
                PrimitiveState s = base;
                const double arg = (x - center) / width;
                s.h += amp * std::exp(-arg * arg);
                return s;
            };
        }
    }
    throw InvalidInput("make_initial_condition: unknown initial condition kind");
}

}  // namespace gsv
