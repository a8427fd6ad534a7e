#ifndef CARTANPATH_PATH_STRUCTURE_HPP
#define CARTANPATH_PATH_STRUCTURE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartanpath/lie_algebra.hpp"

namespace cartanpath {

struct ConstraintViolation {
  int index;             // 1..3
  std::string equation;  // human-readable form of the failed constraint
  Rat residual;
};

/// Checks the three compatibility constraints a raw 3x2 entry block must
/// satisfy to be the matrix of ad_Y in an adapted basis (X1, X2, Y = -[X1,X2]):
///   (1) a11 + a22 = 0
///   (2) a31 a12 - a32 a11 = 0
///   (3) a31 a22 - a32 a21 = 0
std::vector<ConstraintViolation> check_ady_constraints(const Rat& a11, const Rat& a12,
                                                       const Rat& a21, const Rat& a22,
                                                       const Rat& a31, const Rat& a32);

class ConstraintError : public std::runtime_error {
public:
  explicit ConstraintError(std::vector<ConstraintViolation> violations);
  const std::vector<ConstraintViolation>& violations() const { return violations_; }

private:
  std::vector<ConstraintViolation> violations_;
};

/// The 3x2 matrix of ad_Y in an adapted basis, displayed as
///   ( a  b )
///   ( c -a )
///   ( e  f )
/// with (a, b, c, e, f) = (a11, a12, a21, a31, a32). Construction validates
/// the three constraints exactly and throws ConstraintError otherwise, so a
/// value of this type always describes a Lie algebra.
class AdYMatrix {
public:
  AdYMatrix(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
            const Rat& a31, const Rat& a32);

  static AdYMatrix from_rows(const std::array<Rat, 6>& rows);

  const Rat& a11() const { return e_[0]; }
  const Rat& a12() const { return e_[1]; }
  const Rat& a21() const { return e_[2]; }
  const Rat& a22() const { return e_[3]; }
  const Rat& a31() const { return e_[4]; }
  const Rat& a32() const { return e_[5]; }

  // display-convention accessors
  const Rat& a() const { return e_[0]; }
  const Rat& b() const { return e_[1]; }
  const Rat& c() const { return e_[2]; }
  const Rat& e() const { return e_[4]; }
  const Rat& f() const { return e_[5]; }

  std::string str() const;

  friend bool operator==(const AdYMatrix& x, const AdYMatrix& y) { return x.e_ == y.e_; }

private:
  std::array<Rat, 6> e_;
};

/// Structure constants of the algebra spanned by (X1, X2, Y) with
/// [X1,X2] = -Y and [Y,Xi] given by the columns of A.
StructureConstants to_structure_constants(const AdYMatrix& A);

/// The involution induced by swapping the two line fields,
/// (X1, X2, Y) -> (X2, X1, -Y).
AdYMatrix reorder(const AdYMatrix& A);

/// The basis rescaling X1 -> l1 X1, X2 -> l2 X2; acts on the entries as
/// (l1 l2 a, l2^2 b; l1^2 c, -l1 l2 a; l1 e, l2 f). Throws on a zero scale.
AdYMatrix scale_action(const AdYMatrix& A, const Rat& l1, const Rat& l2);

enum class BianchiType { II, III, IV, VI, VI0, VII, VII0, VIII, IX };
std::string to_label(BianchiType t);

/// Leaves of the normal-form classification. The two parametric families of
/// simple/solvable type carry a rational modulus; every other leaf is a
/// single orbit.
enum class LeafCase {
  Heisenberg,        // (0,0; 0,0; 0,0)
  Sl2Diag,           // (1,0; 0,-1; 0,0)
  Sl2Offdiag,        // (0,1; 1,0; 0,0)
  Sl2Rot,            // (0,-1; 1,0; 0,0)
  Su2Rot,            // (0,1; -1,0; 0,0)
  EuclidVII0,        // (0,1; 0,0; 0,0)
  PoincareVI0,       // (0,-1; 0,0; 0,0)
  SimpleFamily,      // (1,s; c,-1; 0,0), s = +-1, modulus c
  AffRE,             // (0,0; 0,0; 1,0)
  AffREF,            // (0,0; 0,0; 1,1)
  SolvFamilyE,       // (0,0; c,0; 1,0), modulus c != 0
  SolvFamilyEF       // (-c,-c; c,c; 1,1), modulus c != 0
};
std::string leaf_name(LeafCase leaf);

/// Result of the orbit classification. The leaf and modulus are computed
/// through scale-invariant rational functions of the entries, so they are
/// exact; the scale witness (lambda1, lambda2) may involve square roots and
/// is reported in floating point with its residual.
struct NormalForm {
  LeafCase leaf;
  int sign = 0;                  // +-1 for SimpleFamily, 0 elsewhere
  std::optional<Rat> parameter;  // family modulus
  bool reordered = false;        // whether the line-field swap was applied
  AdYMatrix matrix;              // canonical representative
  BianchiType bianchi;
  std::string scale_invariants;  // the invariant functions that pin the leaf
  double lambda1 = 1.0, lambda2 = 1.0;  // scale_action(reorder^k(A), l1, l2) ~ matrix
  double witness_residual = 0.0;        // max relative entrywise deviation, <= 1e-12

  bool same_orbit_data(const NormalForm& o) const {
    return leaf == o.leaf && sign == o.sign && parameter == o.parameter;
  }
};

/// Classifies A into its unique normal-form leaf.
NormalForm normalize(const AdYMatrix& A);

/// Bianchi label of the underlying Lie algebra (via normalize).
BianchiType bianchi_type(const AdYMatrix& A);

/// Independent Bianchi classification from structure constants alone
/// (Killing form for the semisimple types, derived-algebra spectra for the
/// solvable ones). Used as a cross-check oracle against bianchi_type.
BianchiType bianchi_from_constants(const StructureConstants& sc);

}  // namespace cartanpath

#endif
