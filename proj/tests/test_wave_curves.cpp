#include <doctest.h>

#include <cmath>
#include <vector>

#include "gsv/errors.hpp"
#include "gsv/quadrature.hpp"
#include "gsv/root_finding.hpp"
#include "gsv/wave_curves.hpp"
#include "test_support.hpp"

using namespace gsv;
using namespace gsv::test;

namespace {

PrimitiveState curve_state(double h, const CurveSide& side, const Params& p) {
    return state_from_invariants(h, rarefaction_velocity(h, side, p), side.inv, p);
}

}  // namespace

TEST_CASE("quadrature handles smooth and endpoint-steep integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::cos(x); }, 0.0, 2.0) ==
          doctest::Approx(std::sin(2.0)).epsilon(1e-13));
    // signed orientation
    CHECK(integrate([](double x) { return x; }, 1.0, 0.0) ==
          doctest::Approx(-0.5).epsilon(1e-13));
    // steep near the left endpoint, like the rarefaction integrand near vacuum
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0) ==
          doctest::Approx(2.0 - 2e-6).epsilon(1e-10));
}

TEST_CASE("root finding helpers") {
    const auto cubic = [](double x) { return std::pair{x * x * x - 2.0, 3.0 * x * x}; };
    const RootResult newton = bracketed_newton(cubic, 0.0, 4.0, 1.0, 1e-14, 100);
    CHECK(newton.converged);
    CHECK(newton.x == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));

    const auto f = [](double x) { return std::tanh(x - 0.7); };
    const RootResult secant = bracketed_secant(f, -4.0, 5.0, f(-4.0), f(5.0), 1e-14, 1e-15);
    CHECK(secant.converged);
    CHECK(secant.x == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("p_of_h") {
    Params p;
    p.g = 9.81;

    SUBCASE("G = 0 is hydrostatic") {
        p.G = 0.0;
        CHECK(p_of_h(2.0, {1, 1}, p) == doctest::Approx(0.5 * 9.81 * 4.0).epsilon(1e-14));
    }

    SUBCASE("zeta = 1/2 tends to -G X as h -> 0") {
        p.G = 2.0;
        p.zeta = 0.5;
        const Invariants inv{3.0, 1.5};
        CHECK(p_of_h(1e-8, inv, p) == doctest::Approx(-p.G * inv.X).epsilon(1e-12));
        CHECK(p_lower_bound(inv, p) == doctest::Approx(-6.0).epsilon(1e-14));
    }

    SUBCASE("strictly increasing in h") {
        Rng rng(201);
        for (int i = 0; i < 300; ++i) {
            const Params q = sample_params(rng);
            const Invariants inv{rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e2)};
            const double h1 = rng.log_uniform(1e-3, 1e3);
            const double h2 = h1 * rng.log_uniform(1.0 + 1e-9, 10.0);
            CHECK(p_of_h(h1, inv, q) < p_of_h(h2, inv, q));
        }
    }
}

TEST_CASE("h_of_p") {
    Params p;
    p.g = 9.81;

    SUBCASE("G = 0, P = g/2 gives unit depth") {
        CHECK(h_of_p(0.5 * p.g, {1, 1}, p) == doctest::Approx(1.0).epsilon(1e-13));
    }

    SUBCASE("round trip") {
        Rng rng(202);
        for (int i = 0; i < 400; ++i) {
            const Params q = sample_params(rng);
            const Invariants inv{rng.log_uniform(1e-2, 1e2), rng.log_uniform(1e-2, 1e2)};
            const double h = rng.log_uniform(1e-3, 1e3);
            const double P = p_of_h(h, inv, q);
            const double back = h_of_p(P, inv, q, rng.log_uniform(1e-3, 1e3));
            const double scale = std::abs(P) + q.G * (inv.X + inv.Zinv) + q.g;
            CHECK(p_of_h(back, inv, q) == doctest::Approx(P).epsilon(1e-11).scale(scale));
        }
    }

    SUBCASE("zeta = 1/2 near the range boundary") {
        p.G = 1.0;
        p.zeta = 0.5;
        const Invariants inv{2.0, 0.7};
        for (double eps : {1e-3, 1e-6, 1e-9, 1e-12}) {
            const double target = -p.G * inv.X + eps;
            const double h = h_of_p(target, inv, p);
            CHECK(h > 0.0);
            CHECK(p_of_h(h, inv, p) ==
                  doctest::Approx(target).epsilon(1e-10).scale(p.G * inv.X));
        }
        CHECK_THROWS_AS((void)h_of_p(-p.G * inv.X - 1e-9, inv, p), DomainError);
        Params g0;
        CHECK_THROWS_AS((void)h_of_p(-1.0, Invariants{1, 1}, g0), DomainError);
    }
}

TEST_CASE("hugoniot velocity") {
    Params p;
    p.g = 9.81;
    const PrimitiveState anchor{1.0, 0.0, 1.0, 1.0};

    SUBCASE("zero-amplitude") {
        const CurveSide side = CurveSide::left(anchor, p);
        CHECK(hugoniot_velocity(anchor.h, side, p) == anchor.u);
    }

    SUBCASE("classical shallow-water value") {
        const CurveSide side = CurveSide::left(anchor, p);
        const double u = hugoniot_velocity(2.0, side, p);
        CHECK(u == doctest::Approx(-std::sqrt(0.5 * 14.715)).epsilon(1e-10));
        CHECK(u == doctest::Approx(-2.712472).epsilon(1e-6));
    }

    SUBCASE("wrong branch is rejected") {
        const CurveSide side = CurveSide::left(anchor, p);
        CHECK_THROWS_AS((void)hugoniot_velocity(0.5, side, p), DomainError);
        CHECK_THROWS_AS((void)rarefaction_velocity(2.0, side, p), DomainError);
    }

    SUBCASE("shock pairs satisfy both scalar jump relations with one speed") {
        Rng rng(203);
        for (int i = 0; i < 300; ++i) {
            Params q = sample_params(rng);
            const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
            const bool minus = rng.index(2) == 0;
            const CurveSide side = minus ? CurveSide::left(a, q) : CurveSide::right(a, q);
            const double h = a.h * rng.log_uniform(1.0, 8.0);
            const double u = hugoniot_velocity(h, side, q);
            const PrimitiveState star = state_from_invariants(h, u, side.inv, q);
            const PrimitiveState& l = minus ? a : star;
            const PrimitiveState& r = minus ? star : a;
            const double xi0 = shock_speed(l, r, q);

            const double mass = xi0 * (r.h - l.h) - (r.h * r.u - l.h * l.u);
            const double mom = xi0 * (r.h * r.u - l.h * l.u) -
                               (r.h * r.u * r.u + total_pressure(r, q) - l.h * l.u * l.u -
                                total_pressure(l, q));
            const double mass_scale =
                std::abs(xi0) * (r.h + l.h) + std::abs(r.h * r.u) + std::abs(l.h * l.u) + 1.0;
            const double mom_scale = std::abs(xi0) * (std::abs(r.h * r.u) + std::abs(l.h * l.u)) +
                                     std::abs(total_pressure(r, q)) +
                                     std::abs(total_pressure(l, q)) + 1.0;
            CHECK(std::abs(mass) <= 1e-10 * mass_scale);
            CHECK(std::abs(mom) <= 1e-10 * mom_scale);
        }
    }
}

TEST_CASE("shock speed") {
    Params p;
    p.g = 9.81;
    const PrimitiveState l{1.0, 0.0, 1.0, 1.0};
    const CurveSide side = CurveSide::left(l, p);
    const double u2 = hugoniot_velocity(2.0, side, p);
    const PrimitiveState r = state_from_invariants(2.0, u2, side.inv, p);

    const double xi0 = shock_speed(l, r, p);
    CHECK(xi0 == doctest::Approx(2.0 * u2).epsilon(1e-12));
    CHECK(xi0 == doctest::Approx(-5.424944).epsilon(1e-6));
    // difference quotient is symmetric in the pair ordering
    CHECK(shock_speed(r, l, p) == doctest::Approx(xi0).epsilon(1e-14));

    CHECK_THROWS_AS((void)shock_speed(l, l, p), DomainError);
}

TEST_CASE("rarefaction velocity") {
    Params p;
    p.g = 9.81;
    const PrimitiveState anchor{1.0, 0.0, 1.0, 1.0};
    const CurveSide side = CurveSide::left(anchor, p);

    SUBCASE("empty integral at the anchor") {
        CHECK(rarefaction_velocity(anchor.h, side, p) == anchor.u);
    }

    SUBCASE("classical invariant u + 2 sqrt(g h)") {
        const double u = rarefaction_velocity(0.5, side, p);
        const double expected = 2.0 * std::sqrt(p.g) * (1.0 - std::sqrt(0.5));
        CHECK(u == doctest::Approx(expected).epsilon(1e-10));
        CHECK(u == doctest::Approx(1.834737).epsilon(1e-6));
    }

    SUBCASE("vacuum floor is enforced") {
        CHECK_THROWS_AS((void)rarefaction_velocity(1e-15, side, p), VacuumError);
    }

    SUBCASE("curve tangent is parallel to the characteristic field") {
        Rng rng(204);
        for (int i = 0; i < 150; ++i) {
            Params q = sample_params(rng);
            const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
            const bool minus = rng.index(2) == 0;
            const CurveSide s = minus ? CurveSide::left(a, q) : CurveSide::right(a, q);
            const double h = a.h * rng.uniform(0.3, 0.95);

            const double dh = 1e-6 * h;
            const PrimitiveState hi = curve_state(h + dh, s, q);
            const PrimitiveState lo = curve_state(h - dh, s, q);
            const Vec4 tangent{(hi.h - lo.h) / (2 * dh), (hi.u - lo.u) / (2 * dh),
                               (hi.sxx - lo.sxx) / (2 * dh), (hi.szz - lo.szz) / (2 * dh)};

            const PrimitiveState mid = curve_state(h, s, q);
            const CharBasis basis = char_fields(mid, q);
            const Vec4 r = minus ? basis.r_minus : basis.r_plus;
            // tangent and r/h should agree componentwise
            for (int k = 0; k < 4; ++k) {
                CHECK(tangent[k] ==
                      doctest::Approx(r[k] / mid.h).epsilon(1e-6).scale(1.0 + norm4(r) / mid.h));
            }
        }
    }
}

TEST_CASE("rarefaction xi") {
    Params p;
    p.g = 9.81;
    p.G = 1.3;
    p.zeta = 0.2;
    const PrimitiveState anchor{1.4, 0.3, 0.8, 1.1};
    const CurveSide side = CurveSide::left(anchor, p);

    SUBCASE("anchor characteristic speed") {
        CHECK(rarefaction_xi(anchor.h, side, p) ==
              doctest::Approx(eigenvalues(anchor, p).minus).epsilon(1e-13));
    }

    SUBCASE("classical fan speed at G = 0") {
        Params g0;
        g0.g = 9.81;
        const CurveSide s = CurveSide::left(PrimitiveState{1.0, 0.0, 1.0, 1.0}, g0);
        for (double h : {0.9, 0.7, 0.5, 0.3}) {
            const double u = rarefaction_velocity(h, s, g0);
            CHECK(rarefaction_xi(h, s, g0) ==
                  doctest::Approx(u - std::sqrt(g0.g * h)).epsilon(1e-12));
        }
    }

    SUBCASE("matches the quadrature of the printed fan-slope ratio") {
        // independent route: xi(h) = lambda_ref + Int_{h_ref}^{h} dlambda/dh'
        // with the integrand written out from the invariant-form coefficients
        Rng rng(205);
        for (int i = 0; i < 60; ++i) {
            Params q = sample_params(rng);
            const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
            const bool minus = rng.index(2) == 0;
            const CurveSide s = minus ? CurveSide::left(a, q) : CurveSide::right(a, q);
            const double h = a.h * rng.uniform(0.2, 0.9);

            const double sign = minus ? -1.0 : 1.0;
            const Invariants inv = s.inv;
            const auto ratio = [&](double hh) {
                const double gz = q.G * inv.Zinv * std::pow(hh, 2.0 * (1.0 - q.zeta));
                const double gx = q.G * inv.X * std::pow(hh, 2.0 * (q.zeta - 1.0));
                const double num = 3.0 * q.g * hh +
                                   (4.0 * q.zeta * q.zeta - 14.0 * q.zeta + 12.0) * gz +
                                   2.0 * q.zeta * (1.0 - 2.0 * q.zeta) * gx;
                const double dp = q.g * hh + (3.0 - 2.0 * q.zeta) * gz + (1.0 - 2.0 * q.zeta) * gx;
                return num / (2.0 * hh * std::sqrt(dp));
            };
            const double lambda_ref = minus ? eigenvalues(a, q).minus : eigenvalues(a, q).plus;
            const double via_integral =
                lambda_ref + sign * integrate(ratio, a.h, h, 1e-12, 1e-15);
            const double direct = rarefaction_xi(h, s, q);
            CHECK(std::abs(via_integral - direct) <= 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("rarefaction h at xi") {
    Params p;
    p.g = 9.81;
    p.G = 0.8;
    p.zeta = 0.3;
    const PrimitiveState anchor{2.0, -0.4, 1.2, 0.9};
    const CurveSide side = CurveSide::left(anchor, p);

    SUBCASE("anchor ray returns the anchor depth") {
        const double xi_ref = eigenvalues(anchor, p).minus;
        CHECK(rarefaction_h_at_xi(xi_ref, side, p) == doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("round trip across the fan") {
        Rng rng(206);
        for (int i = 0; i < 200; ++i) {
            Params q = sample_params(rng);
            const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
            const bool minus = rng.index(2) == 0;
            const CurveSide s = minus ? CurveSide::left(a, q) : CurveSide::right(a, q);
            const double h = a.h * rng.uniform(0.15, 0.999);
            const double xi = rarefaction_xi(h, s, q);
            const double back = rarefaction_h_at_xi(xi, s, q);
            CHECK(back == doctest::Approx(h).epsilon(1e-9));
            CHECK(rarefaction_xi(back, s, q) ==
                  doctest::Approx(xi).epsilon(1e-10).scale(1.0 + std::abs(xi)));
        }
    }

    SUBCASE("classical closed form at G = 0") {
        Params g0;
        g0.g = 9.81;
        const PrimitiveState a{1.0, 0.0, 1.0, 1.0};
        const CurveSide s = CurveSide::left(a, g0);
        for (double xi : {-3.0, -2.5, -2.0, -1.5}) {
            const double expected =
                std::pow((a.u + 2.0 * std::sqrt(g0.g * a.h) - xi) / 3.0, 2.0) / g0.g;
            CHECK(rarefaction_h_at_xi(xi, s, g0) == doctest::Approx(expected).epsilon(1e-10));
        }
    }

    SUBCASE("xi outside the fan range is rejected") {
        const double xi_ref = eigenvalues(anchor, p).minus;
        CHECK_THROWS_AS((void)rarefaction_h_at_xi(xi_ref - 1.0, side, p), DomainError);
    }
}

TEST_CASE("wave curve in the star-pressure parametrization") {
    Params p;
    p.g = 9.81;
    p.G = 1.0;
    p.zeta = 0.25;
    const PrimitiveState anchor{1.0, 0.2, 1.1, 0.9};
    const CurveSide left = CurveSide::left(anchor, p);

    SUBCASE("anchor pressure gives a zero-amplitude point") {
        const CurvePoint c = wave_curve_u(p_of_h(anchor.h, left.inv, p), left, p);
        CHECK(c.branch == CurveBranch::none);
        CHECK(c.u == anchor.u);
        CHECK(c.h == anchor.h);
    }

    SUBCASE("monotone: on the left curve u is non-increasing in P") {
        Rng rng(207);
        for (int i = 0; i < 200; ++i) {
            Params q = sample_params(rng);
            const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
            const CurveSide sl = CurveSide::left(a, q);
            const CurveSide sr = CurveSide::right(a, q);
            const double pa = p_of_h(a.h * rng.log_uniform(0.05, 20.0), sl.inv, q);
            const double pb = p_of_h(a.h * rng.log_uniform(0.05, 20.0), sl.inv, q);
            const double p1 = std::min(pa, pb), p2 = std::max(pa, pb);
            CHECK(wave_curve_u(p1, sl, q).u >= wave_curve_u(p2, sl, q).u - 1e-12);
            CHECK(wave_curve_u(p1, sr, q).u <= wave_curve_u(p2, sr, q).u + 1e-12);
        }
    }

    SUBCASE("G = 0 reproduces the classical two-branch depth functions") {
        Params g0;
        g0.g = 9.81;
        const PrimitiveState a{1.3, 0.4, 1.0, 1.0};
        const CurveSide s = CurveSide::left(a, g0);
        for (double h : {0.4, 0.8, 1.2, 1.9, 3.5}) {
            const CurvePoint c = wave_curve_u(0.5 * g0.g * h * h, s, g0);
            double f;  // classical depth function of the left datum
            if (h > a.h) {
                f = (h - a.h) * std::sqrt(0.5 * g0.g * (1.0 / a.h + 1.0 / h));
            } else {
                f = 2.0 * (std::sqrt(g0.g * h) - std::sqrt(g0.g * a.h));
            }
            CHECK(c.u == doctest::Approx(a.u - f).epsilon(1e-10));
            CHECK(c.h == doctest::Approx(h).epsilon(1e-11));
        }
    }
}

TEST_CASE("weak shocks dissipate free energy") {
    Rng rng(208);
    for (int i = 0; i < 400; ++i) {
        Params q = sample_params(rng);
        if (q.G == 0.0) q.G = 0.1;
        const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
        const bool minus = rng.index(2) == 0;
        const CurveSide side = minus ? CurveSide::left(a, q) : CurveSide::right(a, q);
        const double h = a.h * (1.0 + rng.log_uniform(1e-3, 0.1));
        const double u = hugoniot_velocity(h, side, q);
        const PrimitiveState star = state_from_invariants(h, u, side.inv, q);
        const PrimitiveState& l = minus ? a : star;
        const PrimitiveState& r = minus ? star : a;

        const double xi0 = shock_speed(l, r, q);
        const double e = -xi0 * (free_energy(r, q) - free_energy(l, q)) +
                         (entropy_flux(r, q) - entropy_flux(l, q));
        const double scale = std::abs(xi0) * (std::abs(free_energy(r, q)) +
                                              std::abs(free_energy(l, q))) +
                             std::abs(entropy_flux(r, q)) + std::abs(entropy_flux(l, q)) + 1e-300;
        CHECK(e <= 1e-12 * scale);
    }
}

TEST_CASE("rarefactions keep both invariants frozen") {
    Rng rng(209);
    for (int i = 0; i < 100; ++i) {
        Params q = sample_params(rng);
        const PrimitiveState a = sample_state(rng, 0.1, 10, 2.0, 0.1, 10);
        const CurveSide s = rng.index(2) == 0 ? CurveSide::left(a, q) : CurveSide::right(a, q);
        const double h = a.h * rng.uniform(0.1, 1.0);
        const PrimitiveState on_curve = curve_state(h, s, q);
        const Invariants inv = invariants(on_curve, q);
        CHECK(inv.X == doctest::Approx(s.inv.X).epsilon(1e-12));
        CHECK(inv.Zinv == doctest::Approx(s.inv.Zinv).epsilon(1e-12));
    }
}

TEST_CASE("rarefaction velocities diverge toward vacuum when G > 0") {
    Params p;
    p.g = 9.81;
    p.G = 1.0;
    p.zeta = 0.25;
    const PrimitiveState anchor{1.0, 0.0, 1.0, 1.0};
    const CurveSide side = CurveSide::left(anchor, p);

    double previous = 0.0;
    for (int k = 1; k <= 24; ++k) {
        const double mag = std::abs(rarefaction_velocity(std::ldexp(1.0, -k), side, p));
        CHECK(mag > previous);
        previous = mag;
    }
    CHECK(previous > 1e3 * std::sqrt(p.g * anchor.h));

    // G = 0 control stays below the classical finite limit
    Params g0;
    g0.g = 9.81;
    const CurveSide c0 = CurveSide::left(anchor, g0);
    const double limit = 2.0 * std::sqrt(g0.g * anchor.h);
    for (int k = 1; k <= 24; ++k) {
        CHECK(std::abs(rarefaction_velocity(std::ldexp(1.0, -k), c0, g0)) < limit);
    }
}
