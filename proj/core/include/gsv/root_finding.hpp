#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

namespace gsv {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Newton iteration safeguarded by a bracket [lo, hi] with f(lo) <= 0 <= f(hi)
/// (f continuous and increasing across the bracket). fdf returns {f, f'}.
/// Steps leaving the bracket, or with unusable derivative, fall back to
/// bisection. Stops when |f| <= f_tol or the bracket collapses.
template <typename FDF>
RootResult bracketed_newton(FDF&& fdf, double lo, double hi, double x0, double f_tol,
                            int max_iter = 200) {
    RootResult res;
    double x = std::clamp(x0, lo, hi);
    for (int it = 0; it < max_iter; ++it) {
        auto [fx, dfx] = fdf(x);
        res = {x, fx, it + 1, false};
        if (std::abs(fx) <= f_tol) {
            res.converged = true;
            return res;
        }
        if (fx > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        double next = x - fx / dfx;
        if (!(dfx != 0.0) || !std::isfinite(next) || next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);
        }
        if (next == x || !(lo < hi)) {
            res.converged = std::abs(fx) <= f_tol;
            return res;
        }
        x = next;
    }
    return res;
}

/// Bracketed false position, Illinois variant, for continuous f with
/// f(lo) <= 0 <= f(hi): when the same endpoint is kept twice in a row its
/// stored value is halved, which prevents one-sided stagnation and gives
/// superlinear convergence. Stops when |f| <= f_tol or the bracket width
/// collapses below x_tol_rel relative to the current endpoints (so roots
/// many orders of magnitude smaller than the initial bracket stay
/// resolvable).
template <typename F>
RootResult bracketed_secant(F&& f, double lo, double hi, double flo, double fhi, double f_tol,
                            double x_tol_rel, int max_iter = 500) {
    RootResult res;
    if (std::abs(flo) <= f_tol) return {lo, flo, 0, true};
    if (std::abs(fhi) <= f_tol) return {hi, fhi, 0, true};
    double a = lo, b = hi, fa = flo, fb = fhi;
    int kept_side = 0;
    for (int it = 0; it < max_iter; ++it) {
        double x = (a * fb - b * fa) / (fb - fa);
        if (!std::isfinite(x) || x <= a || x >= b) x = 0.5 * (a + b);
        const double fx = f(x);
        res = {x, fx, it + 1, false};
        if (std::abs(fx) <= f_tol) {
            res.converged = true;
            return res;
        }
        if (fx > 0.0) {
            b = x;
            fb = fx;
            if (kept_side == -1) fa *= 0.5;
            kept_side = -1;
        } else {
            a = x;
            fa = fx;
            if (kept_side == +1) fb *= 0.5;
            kept_side = +1;
        }
        if (b - a <= x_tol_rel * (std::abs(a) + std::abs(b)) + 1e-300) {
            // pick the endpoint with the smaller residual
            res = (std::abs(fa) < std::abs(fb)) ? RootResult{a, fa, it + 1, false}
                                                : RootResult{b, fb, it + 1, false};
            res.converged = std::abs(res.fx) <= f_tol;
            return res;
        }
    }
    return res;
}

}  // namespace gsv
