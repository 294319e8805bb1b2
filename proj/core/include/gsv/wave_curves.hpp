#pragma once

#include "gsv/model.hpp"
#include "gsv/params.hpp"
#include "gsv/state.hpp"

namespace gsv {

enum class WaveFamily { minus, plus };

enum class CurveBranch { shock, rarefaction, none };

/// Relative depth band around the anchor inside which a wave is reported as
/// zero-amplitude (both branches agree to first order there).
inline constexpr double kTieBand = 1e-13;

/// Depth floor relative to the anchor below which curve evaluations refuse
/// to integrate further toward vacuum.
inline constexpr double kVacuumFloorRel = 1e-13;

/// Anchor state and frozen invariants of a forward wave curve. The minus
/// family anchors to the left Riemann datum, the plus family to the right.
struct CurveSide {
    PrimitiveState ref;
    Invariants inv;
    WaveFamily family;

    static CurveSide left(const PrimitiveState& state, const Params& p) {
        return {state, invariants(state, p), WaveFamily::minus};
    }
    static CurveSide right(const PrimitiveState& state, const Params& p) {
        return {state, invariants(state, p), WaveFamily::plus};
    }
};

struct CurvePoint {
    double u;
    double h;
    CurveBranch branch;
};

/// Pressure along a curve of frozen invariants:
///   P(h) = g h^2/2 + G Zinv h^{3-2 zeta} - G X h^{2 zeta - 1}.
/// Strictly increasing in h.
[[nodiscard]] double p_of_h(double h, const Invariants& inv, const Params& p);

/// Infimum of p_of_h as h -> 0+: -infinity for zeta < 1/2 with G > 0,
/// -G X at zeta = 1/2, and 0 for G = 0.
[[nodiscard]] double p_lower_bound(const Invariants& inv, const Params& p);

/// Monotone inverse of p_of_h via bracketed safeguarded Newton iteration.
/// Throws DomainError for P at or below the attainable range.
[[nodiscard]] double h_of_p(double P, const Invariants& inv, const Params& p,
                            double h_hint = 1.0);

/// Velocity on the admissible shock branch (depth at or beyond the anchor):
///   minus: u = u_ref - sqrt((1/h_ref - 1/h)(P - P_ref)),
///   plus:  u = u_ref + sqrt((1/h_ref - 1/h)(P - P_ref)).
/// Throws DomainError when h is on the wrong side of the anchor.
[[nodiscard]] double hugoniot_velocity(double h, const CurveSide& side, const Params& p);

/// Discontinuity speed xi0 = (h_r u_r - h_l u_l)/(h_r - h_l) of a shock pair.
/// Throws DomainError for equal depths (no shock).
[[nodiscard]] double shock_speed(const PrimitiveState& left, const PrimitiveState& right,
                                 const Params& p);

/// Velocity along the rarefaction branch (depth at or below the anchor),
///   u(h) = u_ref -/+ Int_{h_ref}^{h} sqrt(dP/dh(s))/s ds,
/// by adaptive quadrature. Throws DomainError for depths beyond the anchor
/// and VacuumError below the depth floor.
[[nodiscard]] double rarefaction_velocity(double h, const CurveSide& side, const Params& p);

/// Self-similar coordinate of the fan point at depth h: the characteristic
/// speed lambda_{+/-} of the curve state at that depth. Monotone in h.
[[nodiscard]] double rarefaction_xi(double h, const CurveSide& side, const Params& p);

/// Depth of the fan point with self-similar coordinate xi (monotone
/// bracketed solve). Throws DomainError when xi lies outside the fan range.
[[nodiscard]] double rarefaction_h_at_xi(double xi, const CurveSide& side, const Params& p);

/// Forward wave curve parametrized by the star pressure: depth from h_of_p,
/// branch from the depth ordering, velocity from the matching branch
/// formula. u is non-increasing in P on the minus side and non-decreasing
/// on the plus side.
[[nodiscard]] CurvePoint wave_curve_u(double P, const CurveSide& side, const Params& p);

}  // namespace gsv
