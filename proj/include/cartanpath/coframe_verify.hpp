#ifndef CARTANPATH_COFRAME_VERIFY_HPP
#define CARTANPATH_COFRAME_VERIFY_HPP

#include <vector>

#include "cartanpath/exterior.hpp"
#include "cartanpath/path_structure.hpp"

namespace cartanpath {

struct StrictInvariants;

/// Generators of the invariant group coframe.
enum CoframeGen : int { kTheta = 0, kTheta1, kTheta2, kCoframeGenCount };

const std::vector<std::string>& coframe_generator_names();

/// Differential rules of the invariant coframe in the shifted basis with
/// d theta = theta1 ^ theta2:
///   d theta1 = a th1^th + b th2^th - f th1^th2
///   d theta2 = c th1^th - a th2^th + e th1^th2
DifferentialRule group_coframe_rules(const AdYMatrix& A);

struct EquationCheck {
  std::string name;
  bool ok;
};

struct StructureEquationReport {
  std::vector<EquationCheck> checks;
  bool ok() const;
};

/// Verifies the three strict structure equations exactly on the coframe of A
/// with the closed-form connection and torsion:
///   d th1 - 3 upsilon^th1 = th^tau1
///   d th2 + 3 upsilon^th2 = th^tau2
///   d th = th1^th2
/// plus d^2 = 0 on the rule set itself.
StructureEquationReport verify_structure_equations(const AdYMatrix& A);

struct CurvatureEquationReport {
  Rat Q1, Q2;
  Rat U1, U2;  // implementation-derived; no tabulated reference values exist
  Rat G;       // solved from the vanishing th^th1 coefficient, echoed for transparency
  std::vector<EquationCheck> checks;
  bool ok() const;
};

/// Assembles the pulled-back connection components on the embedded section
/// (phi = 0, w = upsilon + c_embed*th, phi1/phi2/psi from the strict data),
/// extracts the curvature functions from the three curvature 2-forms and
/// asserts every residual term vanishes exactly.
CurvatureEquationReport verify_curvature_equations(const AdYMatrix& A);

}  // namespace cartanpath

#endif
