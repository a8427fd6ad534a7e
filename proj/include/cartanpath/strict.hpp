#ifndef CARTANPATH_STRICT_HPP
#define CARTANPATH_STRICT_HPP

#include <string>
#include <utility>

#include "cartanpath/path_structure.hpp"

namespace cartanpath {

/// Connection and first Bianchi-layer coefficients of the strict structure
/// carried by a homogeneous path structure, in closed form.
///
/// Field-name bridge against the display convention of AdYMatrix:
/// (a, b, c, e, f) = (a11, a12, a21, a31, a32). The coframe is the shifted
/// invariant basis with d theta = theta1^theta2; upsilon is the strict
/// connection form, tau1 = tau12 theta2 and tau2 = tau21 theta1 the torsions.
struct StrictInvariants {
  Rat u_theta, u_theta1, u_theta2;  // upsilon = u_theta th + u_theta1 th1 + u_theta2 th2
  Rat tau12, tau21;
  Rat R, W1, W2;
  Rat S11, S12, S21, S22;
  Rat W1_0, W1_1, W1_2;
  Rat W2_0, W2_1, W2_2;
  // derivative layer; zero on homogeneous structures since every structure
  // function is constant along the section
  Rat R0, R1, R2, R11, R12, R22;
  // embedded-section data
  Rat c_embed;  // -R/4
  Rat E1, E2;   // -2 W2 + R2/2, 2 W1 - R1/2
  Rat G;        // pinned by the vanishing th^th1 coefficient of the first
                // curvature equation on the section
};

/// Closed-form strict invariants of the structure defined by A.
StrictInvariants compute_strict(const AdYMatrix& A);

/// Curvature pair straight from the entries:
///   Q1 = -a (3b/2 - f^2/3),  Q2 = -a (3c/2 + e^2/3).
std::pair<Rat, Rat> curvature_direct(const AdYMatrix& A);

/// Curvature pair through the embedded-section formulas:
///   Q1 =  S12 + (3/2) R tau12 + 2 W2_2 - R22/2
///   Q2 = -S21 + (3/2) R tau21 - 2 W1_1 + R11/2
/// Agrees with curvature_direct on every valid matrix.
std::pair<Rat, Rat> curvature_via_embedding(const StrictInvariants& si);

enum class FlatnessVerdict { NotFlat, CurvatureFlat, FullyFlatCandidate };

struct FlatnessReport {
  Rat Q1, Q2;
  Rat U1, U2;  // implementation-derived secondary invariants, see note
  FlatnessVerdict verdict;
  std::string note;
};
std::string to_string(FlatnessVerdict v);

/// Curvature-flat iff Q1 = Q2 = 0; the fully-flat candidate verdict
/// additionally requires the derived U-invariants to vanish.
FlatnessReport flatness_indicator(const AdYMatrix& A);

}  // namespace cartanpath

#endif
