#pragma once

#include <array>
#include <string>

#include "papertorus/configuration.hpp"
#include "papertorus/decimal.hpp"
#include "papertorus/errors.hpp"
#include "papertorus/triangulation.hpp"

namespace papertorus {

// The published pup tent coordinates, truncated after 32 digits. The x and y
// columns are fixed 3-decimal values; the z column is (z0,z1,z2,z1,z0,0,z2,0).
inline const std::array<std::array<std::string, 2>, 8>& puptent_xy() {
  static const std::array<std::array<std::string, 2>, 8> xy{{
      {"0.755", "0.650"},
      {"-0.455", "0.345"},
      {"-0.170", "1.140"},
      {"0.455", "-0.345"},
      {"-0.755", "-0.650"},
      {"-0.090", "0.665"},
      {"0.170", "-1.140"},
      {"0.090", "-0.665"},
  }};
  return xy;
}

inline const std::array<std::string, 3>& puptent_z_strings() {
  static const std::array<std::string, 3> z{
      "0.98050571585977935561653820085693",
      "0.99028162433430542934317615858328",
      "0.97653883470312317624184245672434",
  };
  return z;
}

// Which z parameter drives each vertex; -1 means the height is pinned to 0.
inline const std::array<int, 8>& puptent_z_column() {
  static const std::array<int, 8> col{0, 1, 2, 1, 0, -1, 2, -1};
  return col;
}

// The heights (z0, z1, z2) parameterizing the symmetric family T(z0,z1,z2).
struct PupTentParams {
  Decimal z0, z1, z2;

  static PupTentParams paper() {
    const auto& z = puptent_z_strings();
    return {Decimal(z[0]), Decimal(z[1]), Decimal(z[2])};
  }

  const Decimal& operator[](int i) const {
    return i == 0 ? z0 : i == 1 ? z1 : z2;
  }
};

inline Configuration build_pup_tent(const PupTentParams& p,
                                    unsigned precision = 64) {
  if (precision < 32)
    throw InsufficientPrecision("pup tent wants >= 32 digits, got " +
                                std::to_string(precision));
  std::vector<std::array<Decimal, 3>> coords;
  for (int v = 0; v < 8; ++v) {
    int zc = puptent_z_column()[v];
    coords.push_back({Decimal(puptent_xy()[v][0]), Decimal(puptent_xy()[v][1]),
                      zc < 0 ? Decimal("0") : p[zc]});
  }
  return Configuration(best8_triangulation(), std::move(coords), precision);
}

}  // namespace papertorus
