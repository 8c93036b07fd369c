#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fnls {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error taxonomy mirrored by the CLI exit codes.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonVanishingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fnls
