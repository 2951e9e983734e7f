#ifndef RCMA_ERRORS_HPP
#define RCMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcma {

// Base class for all toolkit failures. Config problems (bad JSON, invalid
// parameter combinations) and numeric problems (divergent quadrature,
// degenerate estimates) derive from it so callers can map them to distinct
// exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Adaptive quadrature exceeded its depth limit without meeting tolerance.
struct QuadratureNotConverged : Error {
  using Error::Error;
};

// A Monte Carlo integrand produced NaN or +-inf.
struct NonFiniteSample : Error {
  using Error::Error;
};

// rho*(1) outside (0,1]; the moment estimators are undefined there.
struct RhoOutOfRange : Error {
  using Error::Error;
};

struct EmptyPath : Error {
  using Error::Error;
};

struct PathTooShort : Error {
  using Error::Error;
};

// grid_step above the m/64 floor for the Riemann-sum simulator.
struct GridTooCoarse : Error {
  using Error::Error;
};

// decay_check needs an envelope and the kernel shape cannot supply one.
struct EnvelopeMissing : Error {
  using Error::Error;
};

// sigma2_eff(a) = 1 has no root on the search interval.
struct NoRootInBracket : Error {
  using Error::Error;
};

}  // namespace rcma

#endif  // RCMA_ERRORS_HPP
