#ifndef CARTANPATH_TRANSFORM_HPP
#define CARTANPATH_TRANSFORM_HPP

#include <array>

#include "cartanpath/exterior.hpp"
#include "cartanpath/flat_model.hpp"

namespace cartanpath {

/// Element of the structure group, exact-rational path. The associated
/// matrix is upper triangular with rows (a, c, e; 0, 1/(ab), f; 0, 0, b),
/// determinant one by construction. Requires a != 0, b != 0.
struct GroupElement {
  Rat a, b, c, e, f;
  GroupElement(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& e_, const Rat& f_);
  static GroupElement identity() { return {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)}; }
};

using FormMat3 = std::array<std::array<InvariantForm, 3>, 3>;

/// The eight connection components as 1-forms over a shared generator set.
/// Assembling them as
///   ( phi+w   phi2   psi   )
///   ( omega1  -2w    phi1  )
///   ( omega   omega2 -phi+w )
/// yields a traceless matrix of forms.
struct ConnectionComponents {
  InvariantForm omega, omega1, omega2, phi, w, phi1, phi2, psi;

  int generators() const { return omega.generators(); }

  /// The tautological components over the eight abstract flat-model
  /// generators: each component is its own generator.
  static ConnectionComponents tautological();

  FormMat3 as_matrix() const;
  static ConnectionComponents from_matrix(const FormMat3& pi);

  friend bool operator==(const ConnectionComponents& x, const ConnectionComponents& y) {
    return x.omega == y.omega && x.omega1 == y.omega1 && x.omega2 == y.omega2 &&
           x.phi == y.phi && x.w == y.w && x.phi1 == y.phi1 && x.phi2 == y.phi2 &&
           x.psi == y.psi;
  }
};

/// The displayed component-wise transformation law under a constant group
/// element, applied verbatim.
ConnectionComponents transform_components(const GroupElement& h,
                                          const ConnectionComponents& comps);

/// Independent check: assembles the connection matrix, conjugates it by the
/// group element entrywise over the form coefficients and re-extracts the
/// components. Must agree with transform_components exactly.
ConnectionComponents conjugation_oracle(const GroupElement& h,
                                        const ConnectionComponents& comps);

struct CurvatureTuple {
  Rat Q1, Q2, U1, U2;
};

/// Curvature transformation laws:
///   Q1 -> a b^5 Q1,              Q2 -> Q2 / (a^5 b)
///   U1 -> (b/a^4)(U1 - (f/b)Q2), U2 -> (b^4/a)(U2 + a b c Q1)
CurvatureTuple transform_curvature(const GroupElement& h, const CurvatureTuple& q);

/// Verifies the scalar curvature laws through the exterior kernel: builds the
/// curvature 2-forms over the tautological components, conjugates the
/// curvature matrix, and re-expresses the result in the transformed coframe.
bool verify_curvature_form_laws(const GroupElement& h, const CurvatureTuple& q);

/// Floating-point witness of the scale normalization. Distinct from the
/// exact GroupElement path on purpose; the two never mix.
struct ReductionWitness {
  double a, b;
  int epsilon;              // sign(Q1*Q2)
  double residual1;         // |a b^5 Q1 - 1|
  double residual2;         // |Q2/(a^5 b) - epsilon|
  double second_a, second_b;  // the other witness (joint sign flip)
};

/// Solves a b^5 Q1 = 1, Q2/(a^5 b) = epsilon for nonzero curvatures.
/// Returns the witness with a > 0; the sign-flipped pair is reported as the
/// residual two-fold ambiguity. Throws std::domain_error when Q1 or Q2
/// vanishes (the reduction does not apply; consult flatness instead).
ReductionWitness reduction_scale_solve(double q1, double q2);

}  // namespace cartanpath

#endif
