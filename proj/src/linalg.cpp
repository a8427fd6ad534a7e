#include "cartanpath/linalg.hpp"

namespace cartanpath {

Vec3 operator+(const Vec3& u, const Vec3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

Vec3 operator-(const Vec3& u, const Vec3& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

Vec3 operator*(const Rat& s, const Vec3& u) { return {s * u[0], s * u[1], s * u[2]}; }

bool is_zero(const Vec3& u) { return u[0].is_zero() && u[1].is_zero() && u[2].is_zero(); }

Mat3 Mat3::zero() { return Mat3{}; }

Mat3 Mat3::identity() { return diagonal(Rat(1), Rat(1), Rat(1)); }

Mat3 Mat3::diagonal(const Rat& d0, const Rat& d1, const Rat& d2) {
  Mat3 r{};
  r.m[0][0] = d0;
  r.m[1][1] = d1;
  r.m[2][2] = d2;
  return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

Mat3 operator*(const Rat& s, const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat acc;
      for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) {
    Rat acc;
    for (int k = 0; k < 3; ++k) acc += a.m[i][k] * v[k];
    r[i] = acc;
  }
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  return r;
}

Rat det(const Mat3& a) {
  return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
         a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
         a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

Rat trace(const Mat3& a) { return a.m[0][0] + a.m[1][1] + a.m[2][2]; }

bool is_symmetric(const Mat3& a) {
  return a.m[0][1] == a.m[1][0] && a.m[0][2] == a.m[2][0] && a.m[1][2] == a.m[2][1];
}

Mat3 inverse(const Mat3& a) {
  Rat dd = det(a);
  if (dd.is_zero()) throw std::domain_error("Mat3: inverse of a singular matrix");
  Mat3 adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // adjugate entry (j,i): cofactor expansion with cyclic index shift
      adj.m[j][i] = a.m[r0][c0] * a.m[r1][c1] - a.m[r0][c1] * a.m[r1][c0];
    }
  return dd.inverse() * adj;
}

Vec3 solve(const Mat3& a, const Vec3& b) { return inverse(a) * b; }

}  // namespace cartanpath
