#ifndef CARTANPATH_SELFCHECK_HPP
#define CARTANPATH_SELFCHECK_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cartanpath/path_structure.hpp"
#include "cartanpath/sl2.hpp"
#include "cartanpath/transform.hpp"

namespace cartanpath {

/// Deterministic generator of small exact-rational test data.
class TestRng {
public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi);
  Rat rat(long max_num = 6, long max_den = 4, bool nonzero = false);
  /// Random matrix satisfying the ad_Y constraints, mixing all shapes.
  AdYMatrix valid_ady();
  GroupElement group_element();
  /// Random 1-form components over the eight abstract generators.
  ConnectionComponents components();
  Sl2Vector sl2_vector();
  /// Random pair with non-lightlike lines spanning a contact plane.
  LinePair contact_pair();

private:
  std::mt19937_64 eng_;
};

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

SuiteResult check_flat_model();
SuiteResult check_table_reproduction(int samples_per_range = 5);
/// Three-way exact agreement of the curvature routes on random matrices.
SuiteResult check_curvature_oracles(std::uint64_t seed, int cases);
/// Component law vs conjugation on `pair_cases` inputs, plus the scalar
/// curvature laws through the exterior kernel on `form_cases` inputs.
SuiteResult check_transform_oracle(std::uint64_t seed, int pair_cases, int form_cases);
SuiteResult check_orbit_invariance(std::uint64_t seed, int cases);
SuiteResult check_reduction_solver(std::uint64_t seed, int cases, double tolerance = 1e-12);
SuiteResult check_sl2_consistency(std::uint64_t seed, int cases);
SuiteResult check_jacobi_property(std::uint64_t seed, int cases);

struct SelfCheckOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  int cases = 1000;
};

/// The full verification battery; every suite must pass.
std::vector<SuiteResult> run_self_check(const SelfCheckOptions& opt);

}  // namespace cartanpath

#endif
