#ifndef CARTANPATH_LIE_ALGEBRA_HPP
#define CARTANPATH_LIE_ALGEBRA_HPP

#include <vector>

#include "cartanpath/linalg.hpp"

namespace cartanpath {

/// Structure constants of a three-dimensional real Lie algebra in a fixed
/// basis (e1, e2, e3). Only the brackets [e1,e2], [e1,e3], [e2,e3] are
/// stored; antisymmetry is structural, [ej,ei] = -[ei,ej].
class StructureConstants {
public:
  /// Abelian algebra.
  StructureConstants() = default;

  StructureConstants(const Vec3& b12, const Vec3& b13, const Vec3& b23)
      : b_{b12, b13, b23} {}

  /// Bracket of basis vectors e_i, e_j for 0 <= i < j < 3.
  const Vec3& basis_bracket(int i, int j) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.b_ == b.b_;
  }

private:
  std::array<Vec3, 3> b_{};  // pairs (0,1), (0,2), (1,2)
};

/// Bilinear antisymmetric extension of the stored constants.
Vec3 bracket(const StructureConstants& sc, const Vec3& u, const Vec3& v);

/// Matrix of ad_u = [u, .] in the stored basis.
Mat3 ad_matrix(const StructureConstants& sc, const Vec3& u);

struct JacobiViolation {
  int i, j, k;  // 0-based basis triple
  Vec3 value;   // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

/// Evaluates the Jacobi cyclic sum on every basis triple; an empty result
/// means the constants define a Lie algebra.
std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc);

/// Trace form of the adjoint representation: entry (i,j) = tr(ad_ei ad_ej).
Mat3 killing_form(const StructureConstants& sc);

/// Constants of the same algebra in the basis whose coordinate vectors are
/// the columns of P. Throws std::domain_error when P is singular.
StructureConstants change_basis(const StructureConstants& sc, const Mat3& p);

}  // namespace cartanpath

#endif
