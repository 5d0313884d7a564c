#pragma once

#include <vector>

#include "papertorus/configuration.hpp"
#include "papertorus/errors.hpp"
#include "papertorus/real.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

// Decimal exponent of the certification scale: coordinates are multiplied by
// 10^32 and truncated toward zero, exactly as decimal-string arithmetic.
inline constexpr int kScalePow10 = 32;

struct ScaledIntegerConfig {
  Triangulation triangulation;
  std::vector<Vec3I> coordinates;  // exact, units of 10^-32

  static BigInt scale() {
    BigInt s = 1;
    for (int i = 0; i < kScalePow10; ++i) s *= 10;
    return s;
  }
};

inline ScaledIntegerConfig scale_to_integers(const Configuration& c) {
  if (c.precision < 32)
    throw InsufficientPrecision(
        "scaling to 10^32 needs coordinates to >= 32 digits");
  ScaledIntegerConfig out{c.triangulation, {}};
  out.coordinates.reserve(c.coordinates.size());
  for (const auto& p : c.coordinates)
    out.coordinates.push_back({p[0].scaled(kScalePow10),
                               p[1].scaled(kScalePow10),
                               p[2].scaled(kScalePow10)});
  return out;
}

}  // namespace papertorus
