#pragma once

#include "gsv/params.hpp"

namespace gsv {

/// State in the quasilinear variable U = (h, u, sigma_xx, sigma_zz).
/// The admissible region is h > 0, sigma_xx > 0, sigma_zz > 0.
struct PrimitiveState {
    double h = 1.0;   // depth [m]
    double u = 0.0;   // depth-averaged velocity [m/s]
    double sxx = 1.0; // streamwise stress component (dimensionless)
    double szz = 1.0; // vertical stress component (dimensionless)
};

/// Riemann invariants of the genuinely nonlinear fields:
///   X    = sigma_xx * h^{2(1-zeta)}
///   Zinv = sigma_zz * h^{2(zeta-1)}
/// Both are advected constants along +/- waves and jump only at the contact.
struct Invariants {
    double X = 1.0;
    double Zinv = 1.0;
};

/// Conserved vector V = (h, h u, h X, h Z^{-1}) of the conservation-law form.
/// Also used for fluxes, which share the same algebraic shape.
struct ConservedState {
    double h = 0.0;
    double hu = 0.0;
    double hX = 0.0;
    double hZinv = 0.0;

    double& operator[](int i) noexcept { return (&h)[i]; }
    const double& operator[](int i) const noexcept { return (&h)[i]; }

    friend ConservedState operator+(const ConservedState& a, const ConservedState& b) noexcept {
        return {a.h + b.h, a.hu + b.hu, a.hX + b.hX, a.hZinv + b.hZinv};
    }
    friend ConservedState operator-(const ConservedState& a, const ConservedState& b) noexcept {
        return {a.h - b.h, a.hu - b.hu, a.hX - b.hX, a.hZinv - b.hZinv};
    }
    friend ConservedState operator*(double s, const ConservedState& a) noexcept {
        return {s * a.h, s * a.hu, s * a.hX, s * a.hZinv};
    }
};

using FluxVector = ConservedState;

/// Membership in the admissible region, with floating-point domain guards:
/// depths and stresses outside [1e-300, 1e300] (or non-finite values) are
/// treated as invalid rather than propagated.
[[nodiscard]] bool in_state_space(const PrimitiveState& state) noexcept;

/// Throws InvalidInput when the state is outside the admissible region.
void require_valid(const PrimitiveState& state);

/// Riemann invariants (X, Z^{-1}) of a state.
[[nodiscard]] Invariants invariants(const PrimitiveState& state, const Params& p);

/// Reconstructs the primitive state of given depth and velocity on the
/// curve of frozen invariants. Inverse of invariants() at fixed (h, u).
[[nodiscard]] PrimitiveState state_from_invariants(double h, double u, const Invariants& inv,
                                                   const Params& p);

[[nodiscard]] ConservedState to_conserved(const PrimitiveState& state, const Params& p);

/// Decodes a conserved vector; throws InvalidInput when it does not
/// correspond to an admissible primitive state.
[[nodiscard]] PrimitiveState to_primitive(const ConservedState& v, const Params& p);

}  // namespace gsv
