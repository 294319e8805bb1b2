#pragma once

#include <cmath>
#include <limits>

namespace gsv {

/// Physical parameters of the viscoelastic shallow-water model.
///
/// Hyperbolicity of the homogeneous system requires zeta <= 1/2; the wider
/// Johnson-Segalman range zeta in [0,2] is rejected at validation time.
/// lambda is the stress relaxation time; +infinity (the default) selects the
/// elastic limit in which the source terms vanish.
struct Params {
    double g = 9.81;   // gravity [m/s^2]
    double G = 0.0;    // elastic modulus per unit density [m^2/s^2]
    double zeta = 0.0; // slip parameter, 0 = upper-convected Maxwell
    double lambda = std::numeric_limits<double>::infinity(); // relaxation time [s]

    [[nodiscard]] bool has_relaxation() const noexcept { return std::isfinite(lambda); }

    /// Throws InvalidInput unless g > 0, G >= 0, 0 <= zeta <= 1/2 and
    /// lambda > 0 (finite or infinite).
    void validate() const;
};

}  // namespace gsv
