#pragma once

#include <array>

#include "gsv/params.hpp"
#include "gsv/state.hpp"

namespace gsv {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;

/// Eigenvalues of the quasilinear matrix, sorted minus <= zero <= plus.
/// `zero` (= u) has multiplicity two.
struct Eigenvalues {
    double minus;
    double zero;
    double plus;

    [[nodiscard]] Vec4 as_array() const noexcept { return {minus, zero, zero, plus}; }
};

/// Right eigenvectors spanning the four characteristic fields, in the
/// normalization
///   r0_1 = (G h, 0, g h + N, 0),   r0_2 = (G h, 0, 0, -(g h + N)),
///   r_pm = (h, +/- sqrt(dP/dh), 2(zeta-1) sxx, 2(1-zeta) szz).
struct CharBasis {
    Vec4 r0_1;
    Vec4 r0_2;
    Vec4 r_minus;
    Vec4 r_plus;
};

/// Directional derivatives of the acoustic eigenvalues along their own
/// fields; plus > 0 and minus < 0 for every admissible state.
struct GenuineNonlinearity {
    double minus;
    double plus;
};

/// Normal stress difference N = G (szz - sxx).
[[nodiscard]] double normal_stress(const PrimitiveState& state, const Params& p);

/// Total pressure P = g h^2 / 2 + h N.
[[nodiscard]] double total_pressure(const PrimitiveState& state, const Params& p);

/// dP/dh at frozen invariants:
///   g h + G (szz - sxx) + 2 G (1 - zeta) (szz + sxx),
/// with the stresses reconstructed from `inv` at depth h. Strictly positive
/// in the hyperbolic regime; throws DomainError when it is not.
[[nodiscard]] double dP_dh(double h, const Invariants& inv, const Params& p);

/// Same quantity evaluated directly at a state.
[[nodiscard]] double dP_dh(const PrimitiveState& state, const Params& p);

[[nodiscard]] Eigenvalues eigenvalues(const PrimitiveState& state, const Params& p);

[[nodiscard]] CharBasis char_fields(const PrimitiveState& state, const Params& p);

[[nodiscard]] GenuineNonlinearity genuine_nonlinearity(const PrimitiveState& state,
                                                       const Params& p);

/// Free energy
///   F = h (u^2 + g h + G/(1-zeta) (sxx + szz - ln sxx - ln szz - 2)) / 2,
/// the mathematical entropy of the system: together with the flux u (F + P)
/// it is conserved by smooth solutions and dissipated by admissible shocks.
[[nodiscard]] double free_energy(const PrimitiveState& state, const Params& p);

/// Entropy flux u (F + P).
[[nodiscard]] double entropy_flux(const PrimitiveState& state, const Params& p);

/// Quasilinear matrix A(U) with dt U + A dx U = S. Used by tests
/// and diagnostics only; the solvers use the closed-form eigenstructure.
[[nodiscard]] Mat4 quasilinear_matrix(const PrimitiveState& state, const Params& p);

/// Relaxation source rates ((1 - sxx)/lambda, (1 - szz)/lambda).
/// Requires finite lambda; in the elastic limit the caller skips the source.
[[nodiscard]] std::array<double, 2> relaxation_rate(const PrimitiveState& state, const Params& p);

/// Flux of the conservation-law form,
///   F(V) = (h u, h u^2 + P, h u X, h u Z^{-1}).
[[nodiscard]] FluxVector physical_flux(const PrimitiveState& state, const Params& p);

}  // namespace gsv
