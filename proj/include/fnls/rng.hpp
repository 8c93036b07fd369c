#pragma once

#include <cstdint>
#include <random>

#include "fnls/common.hpp"

namespace fnls {

// Deterministic random stream. The engine is the standardized
// mt19937_64; the uniform/normal transforms are spelled out here because
// the standard library distributions are implementation-defined and the
// verification suite promises byte-identical output for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0,1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; one value per call, the pair partner is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

  cplx unit_phase() {
    const double phi = uniform(0.0, kTwoPi);
    return {std::cos(phi), std::sin(phi)};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace fnls
