#include "gsv/params.hpp"

#include <string>

#include "gsv/errors.hpp"

namespace gsv {

void Params::validate() const {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw InvalidInput("params: gravity g must be positive and finite, got g=" +
                           std::to_string(g));
    }
    if (!(G >= 0.0) || !std::isfinite(G)) {
        throw InvalidInput("params: elastic modulus G must be >= 0 and finite, got G=" +
                           std::to_string(G));
    }
    if (!(zeta >= 0.0 && zeta <= 0.5)) {
        throw InvalidInput(
            "params: slip parameter zeta=" + std::to_string(zeta) +
            " outside [0, 1/2]; hyperbolicity requires zeta <= 1/2");
    }
    if (std::isnan(lambda) || !(lambda > 0.0)) {
        throw InvalidInput("params: relaxation time lambda must be positive (or infinite)");
    }
}

}  // namespace gsv
