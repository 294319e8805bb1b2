#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsv {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters, states or configuration.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A request outside an operation's mathematical domain: wrong Hugoniot
/// branch, pressure below the attainable range, xi outside a fan, depth
/// below the vacuum floor.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Initial data whose admissible Riemann solution would require a vacuum
/// (or near-vacuum) intermediate state.
class VacuumError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// An iteration failed to converge. Carries a diagnostic payload describing
/// the failing problem so it can be replayed.
class NumericalError : public Error {
  public:
    NumericalError(const std::string& what, std::string diagnostic_payload)
        : Error(what), diagnostic(std::move(diagnostic_payload)) {}
    explicit NumericalError(const std::string& what) : Error(what) {}

    std::string diagnostic;
};

/// A finite-volume cell left the admissible state space during a step.
class StabilityError : public Error {
  public:
    StabilityError(const std::string& what, std::size_t cell_index, double time)
        : Error(what), cell(cell_index), t(time) {}

    std::size_t cell = 0;
    double t = 0;
};

}  // namespace gsv
