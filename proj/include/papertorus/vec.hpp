#pragma once

#include <cmath>

#include "papertorus/real.hpp"

namespace papertorus {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(const T& s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

template <class T>
T norm2(const Vec3<T>& a) {
  return dot(a, a);
}

inline Real norm(const Vec3<Real>& a) {
  return boost::multiprecision::sqrt(norm2(a));
}
inline double norm(const Vec3<double>& a) { return std::sqrt(norm2(a)); }

using Vec3R = Vec3<Real>;
using Vec3D = Vec3<double>;
using Vec3I = Vec3<BigInt>;

template <class T>
struct Vec2 {
  T x{}, y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Vec2 operator*(const T& s, const Vec2& v) {
    return {s * v.x, s * v.y};
  }
};

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

// z-component of the 2D cross product
template <class T>
T cross2(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
T norm2(const Vec2<T>& a) {
  return dot(a, a);
}

inline Real norm(const Vec2<Real>& a) {
  return boost::multiprecision::sqrt(norm2(a));
}
inline double norm(const Vec2<double>& a) { return std::sqrt(norm2(a)); }

using Vec2R = Vec2<Real>;
using Vec2D = Vec2<double>;

inline Vec3D to_double(const Vec3R& v) {
  return {static_cast<double>(v.x), static_cast<double>(v.y),
          static_cast<double>(v.z)};
}

}  // namespace papertorus
