#pragma once

#include <array>
#include <vector>

#include "papertorus/decimal.hpp"
#include "papertorus/triangulation.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

// An embedded polyhedral torus candidate: a triangulation plus per-vertex
// coordinates. Coordinates are stored as decimal literals so that file
// round-trips are verbatim and the certifier can scale them to exact
// integers; geometry evaluates them at the configuration's precision.
struct Configuration {
  Triangulation triangulation;
  std::vector<std::array<Decimal, 3>> coordinates;
  unsigned precision = 64;  // working mantissa, decimal digits

  Configuration(Triangulation t, std::vector<std::array<Decimal, 3>> coords,
                unsigned precision_digits)
      : triangulation(std::move(t)),
        coordinates(std::move(coords)),
        precision(precision_digits) {
    if (static_cast<int>(coordinates.size()) != triangulation.vertex_count())
      throw Error("configuration: coordinate count != vertex count");
  }

  // Vertex positions parsed at the current working precision. Callers open a
  // PrecisionGuard first; values are never cached across precisions.
  std::vector<Vec3R> points() const {
    std::vector<Vec3R> out;
    out.reserve(coordinates.size());
    for (const auto& c : coordinates)
      out.push_back({c[0].value(), c[1].value(), c[2].value()});
    return out;
  }

  std::vector<Vec3D> points_double() const {
    std::vector<Vec3D> out;
    out.reserve(coordinates.size());
    PrecisionGuard g(20);
    for (const auto& c : coordinates)
      out.push_back({static_cast<double>(c[0].value()),
                     static_cast<double>(c[1].value()),
                     static_cast<double>(c[2].value())});
    return out;
  }
};

}  // namespace papertorus
