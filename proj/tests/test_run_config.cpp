#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gsv/commands.hpp"
#include "gsv/errors.hpp"
#include "gsv/run_config.hpp"

using namespace gsv;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("gsv_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

constexpr const char* kRiemannConfig = R"(
mode = riemann

[params]
g = 9.81
G = 1.0
zeta = 0.25

[left]
h = 2.0
u = 0.0
sxx = 1.0
szz = 1.0

[right]
h = 1.0
u = 0.0
sxx = 1.0
szz = 1.0

[riemann]
xi_min = -8
xi_max = 8
samples = 101
)";

}  // namespace

TEST_CASE("minimal config fills the documented defaults") {
    const RunConfig cfg = parse_config("[params]\ng = 9.81\n");
    CHECK(cfg.cfl == 0.9);
    CHECK(cfg.boundary == Boundary::transmissive);
    CHECK_FALSE(cfg.params.has_relaxation());  // lambda = inf
    CHECK(cfg.params.G == 0.0);
    CHECK(cfg.mode == RunMode::riemann);
}

TEST_CASE("out-of-range zeta is rejected naming the constraint") {
    CHECK_THROWS_WITH_AS((void)parse_config("[params]\nzeta = 0.7\n"),
                         doctest::Contains("hyperbolicity"), InvalidInput);
}

TEST_CASE("unknown keys and sections are rejected by name") {
    CHECK_THROWS_WITH_AS((void)parse_config("[params]\ngg = 1\n"), doctest::Contains("gg"),
                         InvalidInput);
    CHECK_THROWS_WITH_AS((void)parse_config("[paramz]\ng = 1\n"), doctest::Contains("paramz"),
                         InvalidInput);
    CHECK_THROWS_AS((void)parse_config("g = 1\n"), InvalidInput);
    CHECK_THROWS_AS((void)parse_config("[params]\ng = abc\n"), InvalidInput);
    CHECK_THROWS_AS((void)parse_config("[params\ng = 1\n"), InvalidInput);   // broken header
    CHECK_THROWS_AS((void)parse_config("[params]\ng 9.81\n"), InvalidInput); // missing '='
    CHECK_THROWS_AS((void)parse_config("[validate]\nseed = -3\n"), InvalidInput);
    CHECK_THROWS_AS((void)parse_config("[validate]\nnegative_control = maybe\n"), InvalidInput);
    CHECK_THROWS_AS((void)parse_config("[sim]\nboundary = open\n"), InvalidInput);
    CHECK_THROWS_AS((void)parse_config("[sim]\nic = step\n"), InvalidInput);
}

TEST_CASE("comments and blank lines are ignored") {
    const RunConfig cfg = parse_config("# leading comment\n\n[params]\ng = 2.5  # trailing\n");
    CHECK(cfg.params.g == 2.5);
}

TEST_CASE("config round trip preserves the semantics") {
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.mode = RunMode::simulate;
    cfg.snapshot_times = {0.05, 0.1};
    cfg.boundary = Boundary::periodic;
    cfg.ic = InitialConditionKind::smooth_bump;
    cfg.params.lambda = 2.5;
    cfg.seed = 777;

    const RunConfig back = parse_config(serialize_config(cfg));
    CHECK(back.mode == cfg.mode);
    CHECK(back.params.g == cfg.params.g);
    CHECK(back.params.G == cfg.params.G);
    CHECK(back.params.zeta == cfg.params.zeta);
    CHECK(back.params.lambda == cfg.params.lambda);
    CHECK(back.left.h == cfg.left.h);
    CHECK(back.right.szz == cfg.right.szz);
    CHECK(back.xi_min == cfg.xi_min);
    CHECK(back.xi_samples == cfg.xi_samples);
    CHECK(back.grid.n_cells == cfg.grid.n_cells);
    CHECK(back.snapshot_times == cfg.snapshot_times);
    CHECK(back.boundary == cfg.boundary);
    CHECK(back.ic == cfg.ic);
    CHECK(back.seed == cfg.seed);
    CHECK(back.negative_control == cfg.negative_control);

    // a second serialize is byte-identical
    CHECK(serialize_config(back) == serialize_config(cfg));
}

TEST_CASE("per-mode block requirements") {
    const RunConfig cfg = parse_config("[params]\ng = 9.81\n\n[left]\nh = 1\n");
    CHECK_NOTHROW(require_blocks_for_mode(cfg, RunMode::eigen));
    CHECK_THROWS_WITH_AS(require_blocks_for_mode(cfg, RunMode::riemann),
                         doctest::Contains("right"), InvalidInput);
    CHECK_THROWS_AS(require_blocks_for_mode(cfg, RunMode::simulate), InvalidInput);
}

TEST_CASE("initial condition factory") {
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.x0 = 0.25;
    const InitialCondition ic = make_initial_condition(cfg);
    CHECK(ic(0.2).h == 2.0);
    CHECK(ic(0.3).h == 1.0);

    cfg.ic = InitialConditionKind::smooth_bump;
    cfg.base = {1.0, 0.1, 1.0, 1.0};
    cfg.bump_amplitude = 0.3;
    cfg.bump_width = 0.2;
    cfg.bump_center = 0.0;
    const InitialCondition bump = make_initial_condition(cfg);
    CHECK(bump(0.0).h == doctest::Approx(1.3).epsilon(1e-14));
    CHECK(bump(10.0).h == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bump(0.0).u == 0.1);
}

TEST_CASE("cmd_eigen writes the eigenstructure row") {
    const auto dir = fresh_dir("eigen");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.mode = RunMode::eigen;
    const CommandResult res = cmd_eigen(cfg, dir);
    CHECK(res.exit_code == 0);
    REQUIRE(res.files.size() == 1);
    const std::string text = slurp(res.files[0]);
    CHECK(text.find("lambda_minus") != std::string::npos);
    CHECK(text.find("\r") == std::string::npos);  // LF endings only
}

TEST_CASE("cmd_riemann writes star, waves and profile files") {
    const auto dir = fresh_dir("riemann");
    const RunConfig cfg = parse_config(kRiemannConfig);
    const CommandResult res = cmd_riemann(cfg, dir);
    CHECK(res.exit_code == 0);
    REQUIRE(res.files.size() == 3);

    const std::string waves = slurp(dir / "riemann_waves.csv");
    CHECK(waves.find("minus") != std::string::npos);
    CHECK(waves.find("contact") != std::string::npos);
    CHECK(waves.find("plus") != std::string::npos);

    // profile has a header plus the requested number of samples
    const std::string profile = slurp(dir / "riemann_profile.csv");
    std::size_t lines = 0;
    for (char ch : profile) lines += ch == '\n';
    CHECK(lines == 102);

    SUBCASE("outputs are byte-deterministic") {
        const auto dir2 = fresh_dir("riemann2");
        (void)cmd_riemann(cfg, dir2);
        CHECK(slurp(dir / "riemann_profile.csv") == slurp(dir2 / "riemann_profile.csv"));
        CHECK(slurp(dir / "riemann_star.csv") == slurp(dir2 / "riemann_star.csv"));
    }
}

TEST_CASE("cmd_riemann reports equal data as three zero-amplitude waves") {
    const auto dir = fresh_dir("riemann_trivial");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.right = cfg.left;
    const CommandResult res = cmd_riemann(cfg, dir);
    CHECK(res.exit_code == 0);
    const std::string waves = slurp(dir / "riemann_waves.csv");
    std::size_t count = 0, pos = 0;
    while ((pos = waves.find("zero-amplitude", pos)) != std::string::npos) {
        ++count;
        pos += 1;
    }
    CHECK(count == 3);
}

TEST_CASE("cmd_riemann rejects a malformed profile grid") {
    const auto dir = fresh_dir("riemann_bad");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.xi_samples = 1;
    CHECK_THROWS_AS((void)cmd_riemann(cfg, dir), InvalidInput);
}

TEST_CASE("cmd_simulate writes snapshots and a conservation log") {
    const auto dir = fresh_dir("simulate");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.mode = RunMode::simulate;
    cfg.has_grid = cfg.has_time = true;
    cfg.grid = {-1.0, 1.0, 40};
    cfg.t_end = 0.0;  // IC snapshot only
    const CommandResult res = cmd_simulate(cfg, dir);
    CHECK(res.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "snapshot_000.csv"));
    CHECK_FALSE(std::filesystem::exists(dir / "snapshot_001.csv"));

    const std::string header = slurp(dir / "snapshot_000.csv").substr(0, 14);
    CHECK(header == "x,h,u,sxx,szz\n");
}

TEST_CASE("cmd_simulate conserves totals on a periodic constant run") {
    const auto dir = fresh_dir("simulate_periodic");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.mode = RunMode::simulate;
    cfg.has_grid = cfg.has_time = true;
    cfg.right = cfg.left;
    cfg.grid = {-1.0, 1.0, 16};
    cfg.t_end = 0.05;
    cfg.boundary = Boundary::periodic;
    const CommandResult res = cmd_simulate(cfg, dir);
    CHECK(res.exit_code == 0);

    // every conservation row repeats the same totals
    std::istringstream log(slurp(dir / "conservation.csv"));
    std::string line, first_totals;
    std::getline(log, line);  // header
    while (std::getline(log, line)) {
        const auto second_comma = line.find(',', line.find(',') + 1);
        const std::string totals = line.substr(second_comma);
        if (first_totals.empty()) {
            first_totals = totals;
        } else {
            CHECK(totals == first_totals);
        }
    }
}

TEST_CASE("cmd_simulate reports aborted runs with a nonzero exit code") {
    const auto dir = fresh_dir("simulate_abort");
    RunConfig cfg = parse_config(kRiemannConfig);
    cfg.mode = RunMode::simulate;
    cfg.has_grid = cfg.has_time = true;
    cfg.params.G = 0.0;
    cfg.left = {0.1, -5.0, 1.0, 1.0};
    cfg.right = {0.1, 5.0, 1.0, 1.0};
    cfg.grid = {-1.0, 1.0, 16};
    cfg.t_end = 0.1;
    const CommandResult res = cmd_simulate(cfg, dir);
    CHECK(res.exit_code == 2);
    CHECK(res.message.find("aborted") != std::string::npos);
}

TEST_CASE("mode parsing") {
    CHECK(parse_mode("eigen") == RunMode::eigen);
    CHECK(parse_mode("validate") == RunMode::validate);
    CHECK_THROWS_AS((void)parse_mode("bogus"), InvalidInput);
    CHECK(mode_name(RunMode::simulate) == "simulate");
}
