#pragma once

#include <array>
#include <vector>

#include "gsv/model.hpp"
#include "gsv/params.hpp"
#include "gsv/state.hpp"
#include "gsv/wave_curves.hpp"

namespace gsv {

enum class CharField { minus, zero, plus };

enum class WaveKind { shock, fan, contact, none };  // none: zero-amplitude wave

/// One elementary wave of the self-similar solution. head == tail except for
/// fans; for zero-amplitude waves the ray carries the anchor characteristic
/// speed and identical side states.
struct Wave {
    CharField field = CharField::zero;
    WaveKind kind = WaveKind::none;
    PrimitiveState left, right;
    double head = 0.0;
    double tail = 0.0;

    [[nodiscard]] double speed() const noexcept { return head; }
};

/// Exact solution of the Riemann problem: two star states separated by a
/// contact, bounded by the minus and plus waves. Star states share u and P;
/// each keeps the invariants of its datum.
struct RiemannSolution {
    Params params;
    PrimitiveState left, right;
    PrimitiveState star_left, star_right;
    double p_star = 0.0;
    double u_star = 0.0;
    std::array<Wave, 3> waves;  // minus, contact, plus
    int iterations = 0;         // star-root iterations
};

/// Solves the Riemann problem exactly by intersecting the left minus-curve
/// and right plus-curve in the (u, P) plane: the root of u3(P) - u2(P) is
/// bracketed by geometric expansion from the data pressures and refined by
/// safeguarded secant/bisection to |u3 - u2| <= 1e-11 (1 + |u_l| + |u_r|).
///
/// Throws VacuumError for G = 0 data at or beyond the dry-bed threshold
/// u_r - u_l >= 2 sqrt(g h_l) + 2 sqrt(g h_r) (and when the star region
/// otherwise collapses below the depth floor), NumericalError on iteration
/// failure.
[[nodiscard]] RiemannSolution solve(const PrimitiveState& left, const PrimitiveState& right,
                                    const Params& p);

/// State of the self-similar solution at coordinate xi = x/t. On a
/// discontinuity ray the right limit is returned.
[[nodiscard]] PrimitiveState sample(const RiemannSolution& sol, double xi);

/// Godunov interface flux: the conservative flux evaluated at xi = 0.
[[nodiscard]] FluxVector interface_flux(const RiemannSolution& sol);

/// Jump-condition residuals and entropy dissipation of one discontinuity.
struct DiscontinuityReport {
    CharField field = CharField::zero;
    WaveKind kind = WaveKind::none;
    double speed = 0.0;
    Vec4 rh_residual{};   // xi0 (V_r - V_l) - (F_r - F_l), per component
    Vec4 rh_scale{};      // componentwise magnitude for relative comparison
    double entropy_dissipation = 0.0;  // E <= 0 for admissible discontinuities
    double entropy_scale = 0.0;
};

struct Diagnostics {
    std::vector<DiscontinuityReport> discontinuities;
};

/// Reports Rankine-Hugoniot residuals and entropy dissipation for every
/// discontinuity (fans excluded; zero-amplitude waves report zero).
[[nodiscard]] Diagnostics diagnostics(const RiemannSolution& sol);

}  // namespace gsv
