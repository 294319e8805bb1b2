#include "gsv/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gsv/errors.hpp"
#include "gsv/root_finding.hpp"

namespace gsv {

namespace {

std::string describe_problem(const PrimitiveState& l, const PrimitiveState& r, const Params& p) {
    std::ostringstream os;
    os.precision(17);
    os << "left=(" << l.h << "," << l.u << "," << l.sxx << "," << l.szz << ") right=(" << r.h
       << "," << r.u << "," << r.sxx << "," << r.szz << ") params=(g=" << p.g << ",G=" << p.G
       << ",zeta=" << p.zeta << ")";
    return os.str();
}

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-13 * (std::abs(a) + std::abs(b));
}

Wave make_outer_wave(CharField field, CurveBranch branch, const PrimitiveState& wave_left,
                     const PrimitiveState& wave_right, const CurveSide& side, const Params& p) {
    Wave w;
    w.field = field;
    w.kind = WaveKind::none;
    w.left = wave_left;
    w.right = wave_right;
    const bool is_minus = field == CharField::minus;
    switch (branch) {
        case CurveBranch::none: {
            const Eigenvalues ev = eigenvalues(side.ref, p);
            w.head = w.tail = is_minus ? ev.minus : ev.plus;
            break;
        }
        case CurveBranch::shock: {
            w.kind = WaveKind::shock;
            w.head = w.tail = shock_speed(wave_left, wave_right, p);
            break;
        }
        case CurveBranch::rarefaction: {
            w.kind = WaveKind::fan;
            const Eigenvalues el = eigenvalues(wave_left, p);
            const Eigenvalues er = eigenvalues(wave_right, p);
            w.head = is_minus ? el.minus : el.plus;
            w.tail = is_minus ? er.minus : er.plus;
            break;
        }
    }
    return w;
}

PrimitiveState fan_state(const RiemannSolution& sol, CharField field, double xi) {
    const CurveSide side = field == CharField::minus ? CurveSide::left(sol.left, sol.params)
                                                     : CurveSide::right(sol.right, sol.params);
    const double h = rarefaction_h_at_xi(xi, side, sol.params);
    const double u = rarefaction_velocity(h, side, sol.params);
    return state_from_invariants(h, u, side.inv, sol.params);
}

}  // namespace

RiemannSolution solve(const PrimitiveState& left, const PrimitiveState& right, const Params& p) {
    p.validate();
    require_valid(left);
    require_valid(right);

    const CurveSide side_l = CurveSide::left(left, p);
    const CurveSide side_r = CurveSide::right(right, p);

    if (p.G == 0.0 &&
        right.u - left.u >= 2.0 * std::sqrt(p.g * left.h) + 2.0 * std::sqrt(p.g * right.h)) {
        throw VacuumError("vacuum in G=0 limit: u_r - u_l >= 2 sqrt(g h_l) + 2 sqrt(g h_r); "
                          "the solver does not construct vacuum states [" +
                          describe_problem(left, right, p) + "]");
    }

    const double p_left = p_of_h(left.h, side_l.inv, p);
    const double p_right = p_of_h(right.h, side_r.inv, p);

    // Star pressure root of u3(P) - u2(P), evaluable while both star depths
    // stay above their vacuum floors.
    const double p_eval_min = std::max(p_of_h(kVacuumFloorRel * left.h, side_l.inv, p),
                                       p_of_h(kVacuumFloorRel * right.h, side_r.inv, p));
    const auto velocity_gap = [&](double P) {
        return wave_curve_u(P, side_r, p).u - wave_curve_u(P, side_l, p).u;
    };

    const double tol_u = 1e-11 * (1.0 + std::abs(left.u) + std::abs(right.u));

    double p_lo = std::min(p_left, p_right);
    double p_hi = std::max(p_left, p_right);
    if (p_lo <= p_eval_min) {
        p_lo = p_eval_min + 1e-12 * (1.0 + std::abs(p_eval_min));
        p_hi = std::max(p_hi, p_lo);
    }
    double f_lo = velocity_gap(p_lo);
    double f_hi = p_hi > p_lo ? velocity_gap(p_hi) : f_lo;

    double step = std::max(p_hi - p_lo, 0.25 * (1.0 + std::abs(p_lo) + std::abs(p_hi)));
    int expansions = 0;
    while (f_hi < -tol_u) {
        p_hi += step;
        step *= 2.0;
        f_hi = velocity_gap(p_hi);
        if (++expansions > 200) {
            throw NumericalError("riemann solve: no upper bracket for the star pressure",
                                 describe_problem(left, right, p));
        }
    }
    step = std::max(p_hi - p_lo, 0.25 * (1.0 + std::abs(p_lo) + std::abs(p_hi)));
    const double collapse_band =
        4.0 * std::numeric_limits<double>::epsilon() * std::abs(p_eval_min) + 1e-300;
    while (f_lo > tol_u) {
        if (p_lo - p_eval_min <= collapse_band) {
            throw VacuumError(
                "riemann solve: star region collapses toward vacuum before the wave curves "
                "intersect [" + describe_problem(left, right, p) + "]");
        }
        double next = p_lo - step;
        step *= 2.0;
        if (next <= p_eval_min) next = 0.5 * (p_lo + p_eval_min);
        p_lo = next;
        f_lo = velocity_gap(p_lo);
        if (++expansions > 200) {
            throw NumericalError("riemann solve: no lower bracket for the star pressure",
                                 describe_problem(left, right, p));
        }
    }

    RootResult root;
    if (std::abs(f_lo) <= tol_u) {
        root = {p_lo, f_lo, 0, true};
    } else if (std::abs(f_hi) <= tol_u) {
        root = {p_hi, f_hi, 0, true};
    } else {
        root = bracketed_secant(velocity_gap, p_lo, p_hi, f_lo, f_hi, tol_u, 1e-15, 500);
    }
    if (!root.converged) {
        throw NumericalError("riemann solve: star-pressure iteration did not converge",
                             describe_problem(left, right, p) +
                                 " bracket=[" + std::to_string(p_lo) + "," +
                                 std::to_string(p_hi) + "] residual=" + std::to_string(root.fx));
    }

    RiemannSolution sol;
    sol.params = p;
    sol.left = left;
    sol.right = right;
    sol.p_star = root.x;
    sol.iterations = root.iterations;

    const CurvePoint cl = wave_curve_u(sol.p_star, side_l, p);
    const CurvePoint cr = wave_curve_u(sol.p_star, side_r, p);
    sol.u_star = 0.5 * (cl.u + cr.u);
    sol.star_left = state_from_invariants(cl.h, sol.u_star, side_l.inv, p);
    sol.star_right = state_from_invariants(cr.h, sol.u_star, side_r.inv, p);

    sol.waves[0] = make_outer_wave(CharField::minus, cl.branch, left, sol.star_left, side_l, p);

    Wave contact;
    contact.field = CharField::zero;
    contact.left = sol.star_left;
    contact.right = sol.star_right;
    contact.head = contact.tail = sol.u_star;
    const bool contact_trivial = nearly_equal(sol.star_left.h, sol.star_right.h) &&
                                 nearly_equal(sol.star_left.sxx, sol.star_right.sxx) &&
                                 nearly_equal(sol.star_left.szz, sol.star_right.szz);
    contact.kind = contact_trivial ? WaveKind::none : WaveKind::contact;
    sol.waves[1] = contact;

    sol.waves[2] = make_outer_wave(CharField::plus, cr.branch, sol.star_right, right, side_r, p);
    return sol;
}

PrimitiveState sample(const RiemannSolution& sol, double xi) {
    const Wave& minus = sol.waves[0];
    const Wave& contact = sol.waves[1];
    const Wave& plus = sol.waves[2];

    if (xi < minus.head) return sol.left;
    if (minus.kind == WaveKind::fan && xi < minus.tail) {
        return fan_state(sol, CharField::minus, xi);
    }
    if (xi < contact.head) return sol.star_left;
    if (xi < plus.head) return sol.star_right;
    if (plus.kind == WaveKind::fan && xi < plus.tail) {
        return fan_state(sol, CharField::plus, xi);
    }
    return sol.right;
}

FluxVector interface_flux(const RiemannSolution& sol) {
    return physical_flux(sample(sol, 0.0), sol.params);
}

Diagnostics diagnostics(const RiemannSolution& sol) {
    Diagnostics d;
    for (const Wave& w : sol.waves) {
        if (w.kind == WaveKind::fan) continue;
        DiscontinuityReport r;
        r.field = w.field;
        r.kind = w.kind;
        r.speed = w.speed();

        const ConservedState vl = to_conserved(w.left, sol.params);
        const ConservedState vr = to_conserved(w.right, sol.params);
        const FluxVector fl = physical_flux(w.left, sol.params);
        const FluxVector fr = physical_flux(w.right, sol.params);
        for (int i = 0; i < 4; ++i) {
            r.rh_residual[i] = r.speed * (vr[i] - vl[i]) - (fr[i] - fl[i]);
            r.rh_scale[i] =
                std::abs(r.speed) * (std::abs(vr[i]) + std::abs(vl[i])) + std::abs(fr[i]) +
                std::abs(fl[i]) + 1e-300;
        }

        const double el = free_energy(w.left, sol.params);
        const double er = free_energy(w.right, sol.params);
        const double ql = entropy_flux(w.left, sol.params);
        const double qr = entropy_flux(w.right, sol.params);
        r.entropy_dissipation = -r.speed * (er - el) + (qr - ql);
        r.entropy_scale =
            std::abs(r.speed) * (std::abs(er) + std::abs(el)) + std::abs(qr) + std::abs(ql) +
            1e-300;
        d.discontinuities.push_back(r);
    }
    return d;
}

}  // namespace gsv
