#ifndef CARTANPATH_SL2_HPP
#define CARTANPATH_SL2_HPP

#include <optional>
#include <string>

#include "cartanpath/path_structure.hpp"

namespace cartanpath {

/// Traceless 2x2 matrix u = h*H + e*E + f*F in the standard basis
///   E = (0 1; 0 0), F = (0 0; 1 0), H = (1 0; 0 -1), with H = [E,F].
struct Sl2Vector {
  Rat h, e, f;

  friend bool operator==(const Sl2Vector& u, const Sl2Vector& v) {
    return u.h == v.h && u.e == v.e && u.f == v.f;
  }
  bool is_zero() const { return h.is_zero() && e.is_zero() && f.is_zero(); }
  std::string str() const;
};

Sl2Vector operator+(const Sl2Vector& u, const Sl2Vector& v);
Sl2Vector operator-(const Sl2Vector& u, const Sl2Vector& v);
Sl2Vector operator*(const Rat& s, const Sl2Vector& u);

/// Matrix commutator [u, v] in (h, e, f) coordinates.
Sl2Vector sl2_bracket(const Sl2Vector& u, const Sl2Vector& v);

/// The Lorentzian quadratic form q(u) = -det(u) = h^2 + ef.
Rat q_form(const Sl2Vector& u);

/// Fundamental-representation pairing (1/2) tr(uv); its quadratic form is q.
/// The adjoint trace form is exactly 8 times this pairing on sl(2), so every
/// degree-0 expression (causal types, plane types, the cross-ratio) is the
/// same in either convention; no bridge factor is needed anywhere.
Rat killing_pairing(const Sl2Vector& u, const Sl2Vector& v);

/// Adjoint action u -> g u g^{-1} of g = (g11 g12; g21 g22), det g != 0.
/// q is preserved.
Sl2Vector adjoint(const Rat& g11, const Rat& g12, const Rat& g21, const Rat& g22,
                  const Sl2Vector& u);

enum class CausalType { Timelike, Lightlike, Spacelike };
std::string to_string(CausalType t);

/// Sign trichotomy of q: negative timelike, zero lightlike, positive
/// spacelike. Throws std::domain_error on the zero vector. Coincides with the
/// elliptic / parabolic / hyperbolic trichotomy of the one-parameter group
/// generated by u.
CausalType causal_type(const Sl2Vector& u);

/// Type of the plane spanned by u and v, from the discriminant of the
/// restriction of q: Lorentzian signature timelike, degenerate lightlike,
/// euclidean spacelike. Throws std::domain_error on a dependent pair.
CausalType plane_type(const Sl2Vector& u, const Sl2Vector& v);

/// Ordered pair of distinct projective lines, canonicalized so that each
/// representative has its first nonzero coordinate equal to one.
class LinePair {
public:
  LinePair(const Sl2Vector& d1, const Sl2Vector& d2);  // throws on zero/equal lines
  const Sl2Vector& d1() const { return d1_; }
  const Sl2Vector& d2() const { return d2_; }
  LinePair swapped() const { return LinePair(d2_, d1_); }

  friend bool operator==(const LinePair& x, const LinePair& y) {
    return x.d1_ == y.d1_ && x.d2_ == y.d2_;
  }

private:
  Sl2Vector d1_, d2_;
};

/// Scale-free invariant kappa(X1,X2)^2 / (kappa(X1,X1) kappa(X2,X2)).
/// Throws std::domain_error when a generator is lightlike (excluded pairs).
Rat cross_ratio(const LinePair& pair);

/// Adapted path-structure matrix of the pair: Y = -[X1,X2], ad_Y expressed
/// in the basis (X1, X2, Y). The contact condition requires a non-lightlike
/// plane; ad_Y then preserves the span, so the bottom row vanishes.
/// Throws std::domain_error on a lightlike plane.
AdYMatrix pair_to_path_structure(const LinePair& pair);

struct IsomorphismDecision {
  bool isomorphic = false;
  int case_id = 0;  // 1..4 per the decision cases, 0 when no case applies
  std::string subcomponent;  // for case 4: both-timelike / both-spacelike / mixed
  std::string detail;
  std::optional<Rat> cr1, cr2;
};

/// Local-isomorphism decision for two invariant structures given by line
/// pairs spanning contact planes. The four mutually exclusive cases:
///   1. all four lines lightlike (both structures flat);
///   2. exactly one lightlike line in each pair, the remaining lines of the
///      same causal type;
///   3. both planes spacelike with equal cross-ratio;
///   4. both planes timelike, no lightlike line, matching ordered type
///      pattern (after the reorder convention) and equal cross-ratio.
IsomorphismDecision locally_isomorphic(const LinePair& p1, const LinePair& p2);

}  // namespace cartanpath

#endif
