#ifndef CARTANPATH_FLAT_MODEL_HPP
#define CARTANPATH_FLAT_MODEL_HPP

#include <vector>

#include "cartanpath/exterior.hpp"

namespace cartanpath {

/// Generators of the flat-model coframe. Indices double as bit positions in
/// InvariantForm masks; the registry below maps them to readable names.
enum FlatGen : int {
  kOmega = 0,
  kOmega1,
  kOmega2,
  kPhi,
  kW,
  kPhi1,
  kPhi2,
  kPsi,
  kFlatGenCount
};

const std::vector<std::string>& flat_generator_names();

/// The Maurer-Cartan rule set of the flat model on the eight generators.
DifferentialRule flat_model_rules();

struct FlatModelReport {
  std::vector<int> failed_generators;
  bool ok() const { return failed_generators.empty(); }
};

/// Asserts d(d gen) = 0 for every generator of the given rule set.
FlatModelReport verify_rules(const DifferentialRule& rules);

/// Self-test of the exterior kernel on the flat-model equations.
FlatModelReport verify_flat_model();

}  // namespace cartanpath

#endif
