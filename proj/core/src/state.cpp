#include "gsv/state.hpp"

#include <cmath>
#include <string>

#include "gsv/errors.hpp"

namespace gsv {

namespace {

constexpr double kMagnitudeFloor = 1e-300;
constexpr double kMagnitudeCeil = 1e300;

bool positive_in_range(double v) noexcept {
    return std::isfinite(v) && v >= kMagnitudeFloor && v <= kMagnitudeCeil;
}

}  // namespace

bool in_state_space(const PrimitiveState& s) noexcept {
    return positive_in_range(s.h) && positive_in_range(s.sxx) && positive_in_range(s.szz) &&
           std::isfinite(s.u) && std::abs(s.u) <= kMagnitudeCeil;
}

void require_valid(const PrimitiveState& s) {
    if (!in_state_space(s)) {
        throw InvalidInput("state (h=" + std::to_string(s.h) + ", u=" + std::to_string(s.u) +
                           ", sxx=" + std::to_string(s.sxx) + ", szz=" + std::to_string(s.szz) +
                           ") outside the admissible region {h>0, sxx>0, szz>0}");
    }
}

Invariants invariants(const PrimitiveState& s, const Params& p) {
    const double e = 2.0 * (1.0 - p.zeta);
    const double he = std::pow(s.h, e);
    return {s.sxx * he, s.szz / he};
}

PrimitiveState state_from_invariants(double h, double u, const Invariants& inv, const Params& p) {
    if (!positive_in_range(h)) {
        throw InvalidInput("state_from_invariants: nonpositive depth h=" + std::to_string(h));
    }
    const double e = 2.0 * (1.0 - p.zeta);
    const double he = std::pow(h, e);
    return {h, u, inv.X / he, inv.Zinv * he};
}

ConservedState to_conserved(const PrimitiveState& s, const Params& p) {
    const Invariants inv = invariants(s, p);
    return {s.h, s.h * s.u, s.h * inv.X, s.h * inv.Zinv};
}

PrimitiveState to_primitive(const ConservedState& v, const Params& p) {
    if (!positive_in_range(v.h) || !(v.hX > 0.0) || !(v.hZinv > 0.0) || !std::isfinite(v.hu) ||
        !std::isfinite(v.hX) || !std::isfinite(v.hZinv)) {
        throw InvalidInput("conserved state (h=" + std::to_string(v.h) +
                           ", hu=" + std::to_string(v.hu) + ", hX=" + std::to_string(v.hX) +
                           ", hZinv=" + std::to_string(v.hZinv) + ") is not decodable");
    }
    const Invariants inv{v.hX / v.h, v.hZinv / v.h};
    PrimitiveState s = state_from_invariants(v.h, v.hu / v.h, inv, p);
    if (!in_state_space(s)) {
        throw InvalidInput("conserved state decodes outside the admissible region");
    }
    return s;
}

}  // namespace gsv
