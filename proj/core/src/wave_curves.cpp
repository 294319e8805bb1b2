#include "gsv/wave_curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "gsv/errors.hpp"
#include "gsv/quadrature.hpp"
#include "gsv/root_finding.hpp"

namespace gsv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coefficients of the curve formulas at frozen invariants; precomputing them
// keeps the quadrature integrand to one log/exp pair per evaluation.
struct CurveCoeffs {
    double g;
    double az;  // (3 - 2 zeta) G Zinv
    double ax;  // (1 - 2 zeta) G X
    double gz;  // G Zinv
    double gx;  // G X
    double zeta;

    explicit CurveCoeffs(const Invariants& inv, const Params& p)
        : g(p.g),
          az((3.0 - 2.0 * p.zeta) * p.G * inv.Zinv),
          ax((1.0 - 2.0 * p.zeta) * p.G * inv.X),
          gz(p.G * inv.Zinv),
          gx(p.G * inv.X),
          zeta(p.zeta) {}

    // P(h) = g h^2/2 + G Zinv h^{3-2z} - G X h^{2z-1}
    double pressure(double h) const {
        if (gz == 0.0 && gx == 0.0) return 0.5 * g * h * h;
        const double lh = std::log(h);
        return 0.5 * g * h * h + gz * std::exp((3.0 - 2.0 * zeta) * lh) -
               gx * std::exp((2.0 * zeta - 1.0) * lh);
    }

    // dP/dh = g h + az h^{2-2z} + ax h^{2z-2}
    double dp(double h) const {
        if (az == 0.0 && ax == 0.0) return g * h;
        const double lh = std::log(h);
        return g * h + az * std::exp((2.0 - 2.0 * zeta) * lh) +
               ax * std::exp((2.0 * zeta - 2.0) * lh);
    }

    // sum of term magnitudes of P(h); the meaningful scale for residuals
    double pressure_scale(double h) const {
        const double lh = std::log(h);
        return 0.5 * g * h * h + std::abs(gz) * std::exp((3.0 - 2.0 * zeta) * lh) +
               std::abs(gx) * std::exp((2.0 * zeta - 1.0) * lh);
    }

    // rarefaction velocity integrand sqrt(dP/dh)/h, written with the
    // exponents shifted so it stays scaled for very small depths
    double integrand(double h) const {
        if (az == 0.0 && ax == 0.0) return std::sqrt(g / h);
        const double lh = std::log(h);
        return std::sqrt(g / h + az * std::exp(-2.0 * zeta * lh) +
                         ax * std::exp((2.0 * zeta - 4.0) * lh));
    }

    // 2 dP/dh + h d2P/dh2 = 3 g h + (4-2z) az h^{2-2z} + 2z ax h^{2z-2};
    // the numerator of d(lambda)/dh along the curve, positive on [0,1/2].
    double fan_slope_numerator(double h) const {
        if (az == 0.0 && ax == 0.0) return 3.0 * g * h;
        const double lh = std::log(h);
        return 3.0 * g * h + (4.0 - 2.0 * zeta) * az * std::exp((2.0 - 2.0 * zeta) * lh) +
               2.0 * zeta * ax * std::exp((2.0 * zeta - 2.0) * lh);
    }
};

double family_sign(WaveFamily f) {
    return f == WaveFamily::minus ? -1.0 : 1.0;
}

bool within_tie_band(double h, double h_ref) {
    return std::abs(h - h_ref) <= kTieBand * h_ref;
}

}  // namespace

double p_of_h(double h, const Invariants& inv, const Params& p) {
    return CurveCoeffs(inv, p).pressure(h);
}

double p_lower_bound(const Invariants& inv, const Params& p) {
    if (p.G == 0.0) return 0.0;
    if (p.zeta == 0.5) return -p.G * inv.X;
    return -kInf;
}

double h_of_p(double P, const Invariants& inv, const Params& p, double h_hint) {
    const CurveCoeffs c(inv, p);
    const double lb = p_lower_bound(inv, p);
    if (!(P > lb)) {
        throw DomainError("h_of_p: pressure " + std::to_string(P) +
                          " at or below the attainable lower bound " + std::to_string(lb));
    }

    double hi = (h_hint > 0.0 && std::isfinite(h_hint)) ? h_hint : 1.0;
    double lo = hi;
    int guard = 0;
    while (c.pressure(hi) < P) {
        hi *= 2.0;
        if (++guard > 1100) throw NumericalError("h_of_p: no upper depth bracket");
    }
    guard = 0;
    while (c.pressure(lo) > P) {
        lo *= 0.5;
        if (++guard > 1100) throw NumericalError("h_of_p: no lower depth bracket");
    }

    // iterate to stagnation; accept against the pressure scale at the root
    const auto res = bracketed_newton(
        [&](double h) { return std::pair{c.pressure(h) - P, c.dp(h)}; }, lo, hi,
        std::clamp(h_hint, lo, hi), 0.0, 200);
    const double scale = std::abs(P) + c.pressure_scale(res.x);
    if (std::abs(res.fx) > 1e-11 * scale) {
        throw NumericalError("h_of_p: Newton iteration did not converge",
                             "P=" + std::to_string(P) + " residual=" + std::to_string(res.fx));
    }
    return res.x;
}

double hugoniot_velocity(double h, const CurveSide& side, const Params& p) {
    const double h_ref = side.ref.h;
    if (within_tie_band(h, h_ref)) return side.ref.u;
    if (h < h_ref) {
        throw DomainError("hugoniot_velocity: depth " + std::to_string(h) +
                          " below the anchor depth " + std::to_string(h_ref) +
                          "; the admissible shock branch has h >= h_ref");
    }
    const CurveCoeffs c(side.inv, p);
    const double jump = (1.0 / h_ref - 1.0 / h) * (c.pressure(h) - c.pressure(h_ref));
    return side.ref.u + family_sign(side.family) * std::sqrt(std::max(jump, 0.0));
}

double shock_speed(const PrimitiveState& left, const PrimitiveState& right, const Params&) {
    if (std::abs(right.h - left.h) <= kTieBand * std::max(left.h, right.h)) {
        throw DomainError("shock_speed: equal depths, the discontinuity is degenerate");
    }
    return (right.h * right.u - left.h * left.u) / (right.h - left.h);
}

double rarefaction_velocity(double h, const CurveSide& side, const Params& p) {
    const double h_ref = side.ref.h;
    if (within_tie_band(h, h_ref)) return side.ref.u;
    if (h > h_ref) {
        throw DomainError("rarefaction_velocity: depth " + std::to_string(h) +
                          " above the anchor depth " + std::to_string(h_ref) +
                          "; the rarefaction branch has h <= h_ref");
    }
    if (h < kVacuumFloorRel * h_ref) {
        throw VacuumError("rarefaction_velocity: depth " + std::to_string(h) +
                          " below the vacuum floor " + std::to_string(kVacuumFloorRel * h_ref));
    }
    const CurveCoeffs c(side.inv, p);
    const double integral =
        integrate([&c](double s) { return c.integrand(s); }, h_ref, h, 1e-13, 1e-15);
    return side.ref.u + family_sign(side.family) * integral;
}

double rarefaction_xi(double h, const CurveSide& side, const Params& p) {
    const double u = rarefaction_velocity(h, side, p);
    const CurveCoeffs c(side.inv, p);
    return u + family_sign(side.family) * std::sqrt(c.dp(h));
}

double rarefaction_h_at_xi(double xi, const CurveSide& side, const Params& p) {
    const CurveCoeffs c(side.inv, p);
    const double sign = family_sign(side.family);
    const double h_ref = side.ref.h;
    const double floor = kVacuumFloorRel * h_ref;
    const double xi_ref = side.ref.u + sign * std::sqrt(c.dp(h_ref));
    const double tol = 1e-12 * (1.0 + std::abs(xi) + std::abs(xi_ref));

    // Along the curve xi(h) moves away from xi_ref as h decreases:
    // downward for the plus family, upward for the minus family.
    const double toward_vacuum = -sign;  // sign of xi - xi_ref inside the fan
    if ((xi - xi_ref) * toward_vacuum < 0.0) {
        if (std::abs(xi - xi_ref) <= tol) return h_ref;
        throw DomainError("rarefaction_h_at_xi: xi=" + std::to_string(xi) +
                          " outside the fan (anchor characteristic " + std::to_string(xi_ref) +
                          ")");
    }
    if (std::abs(xi - xi_ref) <= tol) return h_ref;

    // Bracketed Newton in h with the velocity carried incrementally, so each
    // step integrates only over the interval it moved.
    double lo = floor, hi = h_ref;
    double h = h_ref, u = side.ref.u;
    for (int it = 0; it < 120; ++it) {
        const double dp = c.dp(h);
        const double sdp = std::sqrt(dp);
        const double f = (u + sign * sdp) - xi;
        if (std::abs(f) <= tol) return h;
        // xi(h) increases with h for plus, decreases for minus
        if (f * sign > 0.0) {
            hi = h;
        } else {
            lo = h;
        }
        const double slope = sign * c.fan_slope_numerator(h) / (2.0 * h * sdp);
        double next = h - f / slope;
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            next = std::sqrt(lo * hi);  // geometric bisection over decades
        }
        if (next <= floor * (1.0 + 1e-12) && lo <= floor) {
            throw VacuumError("rarefaction_h_at_xi: xi=" + std::to_string(xi) +
                              " requires a depth below the vacuum floor");
        }
        u += sign * integrate([&c](double s) { return c.integrand(s); }, h, next, 1e-13, 1e-15);
        h = next;
    }
    throw NumericalError("rarefaction_h_at_xi: iteration did not converge",
                         "xi=" + std::to_string(xi) + " h=" + std::to_string(h));
}

CurvePoint wave_curve_u(double P, const CurveSide& side, const Params& p) {
    const double h = h_of_p(P, side.inv, p, side.ref.h);
    if (within_tie_band(h, side.ref.h)) {
        return {side.ref.u, side.ref.h, CurveBranch::none};
    }
    if (h > side.ref.h) {
        return {hugoniot_velocity(h, side, p), h, CurveBranch::shock};
    }
    return {rarefaction_velocity(h, side, p), h, CurveBranch::rarefaction};
}

}  // namespace gsv
