#include "cartanpath/flat_model.hpp"

namespace cartanpath {

const std::vector<std::string>& flat_generator_names() {
  static const std::vector<std::string> names = {"omega",  "omega1", "omega2", "phi",
                                                 "w",      "phi1",   "phi2",   "psi"};
  return names;
}

DifferentialRule flat_model_rules() {
  const int n = kFlatGenCount;
  auto g = [&](int i) { return InvariantForm::generator(n, i); };
  auto w2 = [&](int i, int j) { return wedge(g(i), g(j)); };
  const Rat half(1, 2);

  DifferentialRule rules(n);
  // d omega  = omega1^omega2 + 2 phi^omega
  rules.d_of_generator[kOmega] = w2(kOmega1, kOmega2) + Rat(2) * w2(kPhi, kOmega);
  // d omega1 = phi^omega1 + 3 w^omega1 + omega^phi1
  rules.d_of_generator[kOmega1] =
      w2(kPhi, kOmega1) + Rat(3) * w2(kW, kOmega1) + w2(kOmega, kPhi1);
  // d omega2 = phi^omega2 - 3 w^omega2 - omega^phi2
  rules.d_of_generator[kOmega2] =
      w2(kPhi, kOmega2) - Rat(3) * w2(kW, kOmega2) - w2(kOmega, kPhi2);
  // d phi    = omega^psi - (1/2) phi2^omega1 - (1/2) phi1^omega2
  rules.d_of_generator[kPhi] =
      w2(kOmega, kPsi) - half * w2(kPhi2, kOmega1) - half * w2(kPhi1, kOmega2);
  // d w      = -(1/2) phi2^omega1 + (1/2) phi1^omega2
  rules.d_of_generator[kW] = half * w2(kPhi1, kOmega2) - half * w2(kPhi2, kOmega1);
  // d phi1   = psi^omega1 - phi^phi1 + 3 w^phi1
  rules.d_of_generator[kPhi1] =
      w2(kPsi, kOmega1) - w2(kPhi, kPhi1) + Rat(3) * w2(kW, kPhi1);
  // d phi2   = -psi^omega2 - phi^phi2 - 3 w^phi2
  rules.d_of_generator[kPhi2] =
      -(w2(kPsi, kOmega2) + w2(kPhi, kPhi2) + Rat(3) * w2(kW, kPhi2));
  // d psi    = phi1^phi2 + 2 psi^phi
  rules.d_of_generator[kPsi] = w2(kPhi1, kPhi2) + Rat(2) * w2(kPsi, kPhi);
  return rules;
}

FlatModelReport verify_rules(const DifferentialRule& rules) {
  return FlatModelReport{rules.d_squared_violations()};
}

FlatModelReport verify_flat_model() { return verify_rules(flat_model_rules()); }

}  // namespace cartanpath
