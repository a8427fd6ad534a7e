#ifndef CARTANPATH_LINALG_HPP
#define CARTANPATH_LINALG_HPP

#include <array>
#include <stdexcept>

#include "cartanpath/rational.hpp"

namespace cartanpath {

using Vec3 = std::array<Rat, 3>;

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(const Rat& s, const Vec3& u);
bool is_zero(const Vec3& u);

/// Dense 3x3 matrix over the exact rationals.
struct Mat3 {
  std::array<std::array<Rat, 3>, 3> m;

  static Mat3 zero();
  static Mat3 identity();
  static Mat3 diagonal(const Rat& d0, const Rat& d1, const Rat& d2);

  Rat& at(int i, int j) { return m[i][j]; }
  const Rat& at(int i, int j) const { return m[i][j]; }

  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(const Rat& s, const Mat3& a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);

Mat3 transpose(const Mat3& a);
Rat det(const Mat3& a);
Rat trace(const Mat3& a);
bool is_symmetric(const Mat3& a);

/// Exact inverse; throws std::domain_error on a singular matrix.
Mat3 inverse(const Mat3& a);

/// Solves a x = b exactly; throws std::domain_error on a singular matrix.
Vec3 solve(const Mat3& a, const Vec3& b);

}  // namespace cartanpath

#endif
