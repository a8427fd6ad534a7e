#include "cartanpath/lie_algebra.hpp"

#include <stdexcept>

namespace cartanpath {

const Vec3& StructureConstants::basis_bracket(int i, int j) const {
  if (i == 0 && j == 1) return b_[0];
  if (i == 0 && j == 2) return b_[1];
  if (i == 1 && j == 2) return b_[2];
  throw std::out_of_range("StructureConstants: basis pair must have 0 <= i < j < 3");
}

Vec3 bracket(const StructureConstants& sc, const Vec3& u, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Rat coeff = u[i] * v[j] - u[j] * v[i];
      if (coeff.is_zero()) continue;
      r = r + coeff * sc.basis_bracket(i, j);
    }
  return r;
}

Mat3 ad_matrix(const StructureConstants& sc, const Vec3& u) {
  Mat3 m{};
  for (int j = 0; j < 3; ++j) {
    Vec3 ej{};
    ej[j] = Rat(1);
    Vec3 col = bracket(sc, u, ej);
    for (int i = 0; i < 3; ++i) m.m[i][j] = col[i];
  }
  return m;
}

std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc) {
  std::vector<JacobiViolation> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        Vec3 ei{}, ej{}, ek{};
        ei[i] = Rat(1);
        ej[j] = Rat(1);
        ek[k] = Rat(1);
        Vec3 sum = bracket(sc, bracket(sc, ei, ej), ek) +
                   bracket(sc, bracket(sc, ej, ek), ei) +
                   bracket(sc, bracket(sc, ek, ei), ej);
        if (!is_zero(sum)) out.push_back({i, j, k, sum});
      }
  return out;
}

Mat3 killing_form(const StructureConstants& sc) {
  std::array<Mat3, 3> ad;
  for (int i = 0; i < 3; ++i) {
    Vec3 ei{};
    ei[i] = Rat(1);
    ad[i] = ad_matrix(sc, ei);
  }
  Mat3 k{};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Rat t = trace(ad[i] * ad[j]);
      k.m[i][j] = t;
      k.m[j][i] = t;
    }
  return k;
}

StructureConstants change_basis(const StructureConstants& sc, const Mat3& p) {
  Mat3 pinv = inverse(p);  // throws on singular p
  std::array<Vec3, 3> cols;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) cols[j][i] = p.m[i][j];
  auto nb = [&](int i, int j) { return pinv * bracket(sc, cols[i], cols[j]); };
  return StructureConstants(nb(0, 1), nb(0, 2), nb(1, 2));
}

}  // namespace cartanpath
