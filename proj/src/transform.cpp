#include "cartanpath/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace cartanpath {

GroupElement::GroupElement(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& e_,
                           const Rat& f_)
    : a(a_), b(b_), c(c_), e(e_), f(f_) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("GroupElement: a and b must be nonzero");
}

ConnectionComponents ConnectionComponents::tautological() {
  const int n = kFlatGenCount;
  auto g = [&](int i) { return InvariantForm::generator(n, i); };
  return {g(kOmega), g(kOmega1), g(kOmega2), g(kPhi), g(kW), g(kPhi1), g(kPhi2), g(kPsi)};
}

FormMat3 ConnectionComponents::as_matrix() const {
  return FormMat3{{{phi + w, phi2, psi},
                   {omega1, Rat(-2) * w, phi1},
                   {omega, omega2, Rat(-1) * phi + w}}};
}

ConnectionComponents ConnectionComponents::from_matrix(const FormMat3& pi) {
  const Rat mhalf(-1, 2);
  InvariantForm w = mhalf * pi[1][1];
  InvariantForm phi = pi[0][0] - w;
  // tracelessness check: the remaining diagonal entry is determined
  if (!(pi[2][2] - (w - phi)).is_zero())
    throw std::invalid_argument("ConnectionComponents: matrix is not traceless-consistent");
  return {pi[2][0], pi[1][0], pi[2][1], phi, w, pi[1][2], pi[0][1], pi[0][2]};
}

ConnectionComponents transform_components(const GroupElement& h,
                                          const ConnectionComponents& x) {
  const Rat a = h.a, b = h.b, c = h.c, e = h.e, f = h.f;
  const Rat half(1, 2);

  ConnectionComponents y = x;
  y.omega = (a / b) * x.omega;
  y.omega1 = a * a * b * x.omega1 - a * a * f * x.omega;
  y.omega2 = (Rat(1) / (a * b * b)) * x.omega2 + (c / b) * x.omega;
  y.phi = x.phi - half * a * b * c * x.omega1 - (f / (Rat(2) * b)) * x.omega2 +
          (half * a * c * f - e / b) * x.omega;
  y.w = x.w - half * a * b * c * x.omega1 + (f / (Rat(2) * b)) * x.omega2 +
        half * a * c * f * x.omega;
  y.phi1 = b * b * a * x.phi1 - Rat(3) * a * b * f * x.w + b * a * f * x.phi +
           b * a * e * x.omega1 - f * f * a * x.omega2 - f * a * e * x.omega;
  y.phi2 = (Rat(1) / (b * a * a)) * x.phi2 + (Rat(3) * c / a) * x.w + (c / a) * x.phi -
           b * c * c * x.omega1 +
           (c * f / (a * b) - e / (a * a * b * b)) * x.omega2 +
           (f * c * c - c * e / (a * b)) * x.omega;
  y.psi = (b / a) * x.psi + (Rat(2) * e / a - b * c * f) * x.phi - b * c * e * x.omega1 +
          (c * f * f - f * e / (a * b)) * x.omega2 - c * b * b * x.phi1 +
          (f / a) * x.phi2 + Rat(3) * f * b * c * x.w +
          (f * c * e - e * e / (a * b)) * x.omega;
  return y;
}

namespace {

/// Inverse of the upper-triangular group matrix, in closed form.
std::array<std::array<Rat, 3>, 3> group_matrix(const GroupElement& h) {
  return {{{h.a, h.c, h.e},
           {Rat(0), Rat(1) / (h.a * h.b), h.f},
           {Rat(0), Rat(0), h.b}}};
}

std::array<std::array<Rat, 3>, 3> group_matrix_inverse(const GroupElement& h) {
  const Rat a = h.a, b = h.b, c = h.c, e = h.e, f = h.f;
  return {{{Rat(1) / a, -b * c, c * f - e / (a * b)},
           {Rat(0), a * b, -a * f},
           {Rat(0), Rat(0), Rat(1) / b}}};
}

FormMat3 sandwich(const std::array<std::array<Rat, 3>, 3>& left, const FormMat3& pi,
                  const std::array<std::array<Rat, 3>, 3>& right) {
  const int n = pi[0][0].generators();
  FormMat3 out{{{InvariantForm(n), InvariantForm(n), InvariantForm(n)},
                {InvariantForm(n), InvariantForm(n), InvariantForm(n)},
                {InvariantForm(n), InvariantForm(n), InvariantForm(n)}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      InvariantForm acc(n);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += (left[i][k] * right[l][j]) * pi[k][l];
      out[i][j] = acc;
    }
  return out;
}

}  // namespace

ConnectionComponents conjugation_oracle(const GroupElement& h,
                                        const ConnectionComponents& comps) {
  return ConnectionComponents::from_matrix(
      sandwich(group_matrix_inverse(h), comps.as_matrix(), group_matrix(h)));
}

CurvatureTuple transform_curvature(const GroupElement& h, const CurvatureTuple& q) {
  const Rat a = h.a, b = h.b, c = h.c, f = h.f;
  CurvatureTuple out;
  out.Q1 = a * b.pow(5) * q.Q1;
  out.Q2 = q.Q2 / (a.pow(5) * b);
  out.U1 = (b / a.pow(4)) * (q.U1 - (f / b) * q.Q2);
  out.U2 = (b.pow(4) / a) * (q.U2 + a * b * c * q.Q1);
  return out;
}

bool verify_curvature_form_laws(const GroupElement& h, const CurvatureTuple& q) {
  const int n = kFlatGenCount;
  auto taut = ConnectionComponents::tautological();

  // curvature 2-forms in the original coframe
  InvariantForm cap_phi1 = q.Q1 * wedge(taut.omega, taut.omega2);
  InvariantForm cap_phi2 = q.Q2 * wedge(taut.omega, taut.omega1);
  InvariantForm cap_psi =
      wedge(q.U1 * taut.omega1 + q.U2 * taut.omega2, taut.omega);

  // conjugate the curvature matrix ((0, Phi2, Psi); (0, 0, Phi1); 0)
  FormMat3 cap{{{InvariantForm(n), cap_phi2, cap_psi},
                {InvariantForm(n), InvariantForm(n), cap_phi1},
                {InvariantForm(n), InvariantForm(n), InvariantForm(n)}}};
  FormMat3 conj = sandwich(group_matrix_inverse(h), cap, group_matrix(h));

  auto tilde = transform_components(h, taut);
  auto tq = transform_curvature(h, q);

  InvariantForm want_phi1 = tq.Q1 * wedge(tilde.omega, tilde.omega2);
  InvariantForm want_phi2 = tq.Q2 * wedge(tilde.omega, tilde.omega1);
  InvariantForm want_psi =
      wedge(tq.U1 * tilde.omega1 + tq.U2 * tilde.omega2, tilde.omega);

  bool lower_zero = conj[0][0].is_zero() && conj[1][0].is_zero() && conj[1][1].is_zero() &&
                    conj[2][0].is_zero() && conj[2][1].is_zero() && conj[2][2].is_zero();
  return lower_zero && conj[1][2] == want_phi1 && conj[0][1] == want_phi2 &&
         conj[0][2] == want_psi;
}

ReductionWitness reduction_scale_solve(double q1, double q2) {
  if (!(std::isfinite(q1) && std::isfinite(q2)) || q1 == 0.0 || q2 == 0.0)
    throw std::domain_error(
        "reduction_scale_solve: requires nonzero finite curvatures; "
        "zero curvature means the reduction does not apply");
  const double s = q1 > 0.0 ? 1.0 : -1.0;
  // |a| = |Q1|^{1/24} |Q2|^{5/24}, then b from a b^5 Q1 = 1 (a Q1 > 0)
  double a = s * std::pow(std::fabs(q1), 1.0 / 24.0) * std::pow(std::fabs(q2), 5.0 / 24.0);
  double b = std::pow(a * q1, -0.2);
  if (a < 0.0) {
    a = -a;
    b = -b;
  }
  ReductionWitness w{};
  w.a = a;
  w.b = b;
  w.epsilon = (q1 * q2) > 0.0 ? 1 : -1;
  w.residual1 = std::fabs(a * std::pow(b, 5) * q1 - 1.0);
  w.residual2 = std::fabs(q2 / (std::pow(a, 5) * b) - static_cast<double>(w.epsilon));
  w.second_a = -a;
  w.second_b = -b;
  return w;
}

}  // namespace cartanpath
