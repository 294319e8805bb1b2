#include "gsv/model.hpp"

#include <cmath>
#include <string>

#include "gsv/errors.hpp"

namespace gsv {

double normal_stress(const PrimitiveState& s, const Params& p) {
    return p.G * (s.szz - s.sxx);
}

double total_pressure(const PrimitiveState& s, const Params& p) {
    return 0.5 * p.g * s.h * s.h + s.h * normal_stress(s, p);
}

double dP_dh(const PrimitiveState& s, const Params& p) {
    const double value = p.g * s.h + p.G * (s.szz - s.sxx) +
                         2.0 * p.G * (1.0 - p.zeta) * (s.szz + s.sxx);
    if (!(value > 0.0)) {
        throw DomainError("dP_dh = " + std::to_string(value) +
                          " is not positive; state/parameters outside the hyperbolic regime");
    }
    return value;
}

double dP_dh(double h, const Invariants& inv, const Params& p) {
    return dP_dh(state_from_invariants(h, 0.0, inv, p), p);
}

Eigenvalues eigenvalues(const PrimitiveState& s, const Params& p) {
    const double c = std::sqrt(dP_dh(s, p));
    return {s.u - c, s.u, s.u + c};
}

CharBasis char_fields(const PrimitiveState& s, const Params& p) {
    const double c = std::sqrt(dP_dh(s, p));
    const double gh_n = p.g * s.h + normal_stress(s, p);
    const double tx = 2.0 * (p.zeta - 1.0) * s.sxx;
    const double tz = 2.0 * (1.0 - p.zeta) * s.szz;
    return {
        Vec4{p.G * s.h, 0.0, gh_n, 0.0},
        Vec4{p.G * s.h, 0.0, 0.0, -gh_n},
        Vec4{s.h, -c, tx, tz},
        Vec4{s.h, c, tx, tz},
    };
}

GenuineNonlinearity genuine_nonlinearity(const PrimitiveState& s, const Params& p) {
    const double num = 3.0 * p.g * s.h +
                       2.0 * p.G * (3.0 - 2.0 * p.zeta) * (2.0 - p.zeta) * s.szz +
                       2.0 * p.G * p.zeta * (1.0 - 2.0 * p.zeta) * s.sxx;
    const double value = num / (2.0 * std::sqrt(dP_dh(s, p)));
    return {-value, value};
}

double free_energy(const PrimitiveState& s, const Params& p) {
    // The elastic part carries a 1/(1-zeta) factor: with it (and only with
    // it) the pair (F, u(F+P)) closes on smooth solutions for every slip
    // parameter, and weak Lax shocks dissipate. At zeta = 0 it reduces to
    // the familiar form.
    const double elastic = p.G / (1.0 - p.zeta) *
                           (s.sxx + s.szz - std::log(s.sxx) - std::log(s.szz) - 2.0);
    return 0.5 * s.h * (s.u * s.u + p.g * s.h + elastic);
}

double entropy_flux(const PrimitiveState& s, const Params& p) {
    return s.u * (free_energy(s, p) + total_pressure(s, p));
}

Mat4 quasilinear_matrix(const PrimitiveState& s, const Params& p) {
    const double n_over_h = normal_stress(s, p) / s.h;
    return Mat4{{
        {s.u, s.h, 0.0, 0.0},
        {p.g + n_over_h, s.u, -p.G, p.G},
        {0.0, 2.0 * (p.zeta - 1.0) * s.sxx, s.u, 0.0},
        {0.0, 2.0 * (1.0 - p.zeta) * s.szz, 0.0, s.u},
    }};
}

std::array<double, 2> relaxation_rate(const PrimitiveState& s, const Params& p) {
    if (!p.has_relaxation()) {
        throw InvalidInput("relaxation_rate: lambda is infinite; skip the source step instead");
    }
    return {(1.0 - s.sxx) / p.lambda, (1.0 - s.szz) / p.lambda};
}

FluxVector physical_flux(const PrimitiveState& s, const Params& p) {
    const Invariants inv = invariants(s, p);
    const double hu = s.h * s.u;
    return {hu, hu * s.u + total_pressure(s, p), hu * inv.X, hu * inv.Zinv};
}

}  // namespace gsv
