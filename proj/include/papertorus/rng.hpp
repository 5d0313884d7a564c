#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "papertorus/vec.hpp"

namespace papertorus {

// Deterministic random source. Raw mt19937_64 output is mapped to doubles by
// hand so results do not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0,1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gauss() {  // Box-Muller, one value per call
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Marsaglia: uniform on the unit sphere.
  Vec3D sphere() {
    for (;;) {
      const double v1 = uniform(-1.0, 1.0), v2 = uniform(-1.0, 1.0);
      const double s = v1 * v1 + v2 * v2;
      if (s >= 1.0 || s == 0.0) continue;
      const double f = std::sqrt(1.0 - s);
      return {2.0 * v1 * f, 2.0 * v2 * f, 1.0 - 2.0 * s};
    }
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace papertorus
