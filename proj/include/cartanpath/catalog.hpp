#ifndef CARTANPATH_CATALOG_HPP
#define CARTANPATH_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cartanpath/path_structure.hpp"
#include "cartanpath/strict.hpp"

namespace cartanpath {

/// Open parameter interval with optional punctures, e.g. "0 != c > -1/4".
struct ParamRange {
  std::optional<Rat> lo, hi;  // open endpoints; nullopt = unbounded
  std::vector<Rat> excluded;
  std::string display;

  bool contains(const Rat& c) const;
  /// At least n deterministic rational samples in the range, spread towards
  /// both ends.
  std::vector<Rat> samples(int n) const;
};

/// A boundary value of a parametric family together with the row that the
/// boundary structure belongs to.
struct BoundaryLink {
  Rat value;
  std::string row_key;
};

/// One classification-table entry: either a fixed matrix or a one-parameter
/// family with its declared range. The stored curvature expressions are
/// exact; regeneration checks them against curvature_direct at every sample.
struct TableRow {
  std::string key;
  std::string group_name;
  std::string table;  // "solvable" | "simple"
  BianchiType bianchi;
  std::string ady_display;
  std::string q1_display, q2_display;

  std::optional<AdYMatrix> fixed;
  std::function<AdYMatrix(const Rat&)> family;  // set iff parametric
  std::function<std::pair<Rat, Rat>(const Rat&)> q_of;
  std::pair<Rat, Rat> q_fixed{Rat(0), Rat(0)};
  ParamRange range;  // parametric only
  std::vector<BoundaryLink> boundaries;

  // expected classification of every instance of the row
  LeafCase leaf;
  int leaf_sign = 0;
  std::optional<Rat> leaf_parameter;  // fixed rows of a family leaf

  bool parametric() const { return static_cast<bool>(family); }
};

/// The classification tables as embedded ground truth: 13 solvable rows and
/// 9 simple rows (22 total).
const std::vector<TableRow>& builtin_tables();

struct RegenReport {
  std::vector<std::string> diffs;
  int rows_checked = 0;
  int samples_checked = 0;
  bool ok() const { return diffs.empty(); }
};

/// Recomputes every row (and >= `samples_per_range` samples per declared
/// family range, plus every boundary) from the normal-form machinery and
/// diffs against the stored data. Also checks that each probe normalizes to
/// exactly one row (leaf coverage).
RegenReport regenerate_tables(int samples_per_range = 5);
RegenReport regenerate_against(const std::vector<TableRow>& rows,
                               int samples_per_range = 5);

std::string render_tables_text(const std::vector<TableRow>& rows);
std::string render_tables_csv(const std::vector<TableRow>& rows);

/// Annotation for configurations whose commonly quoted curvature constant
/// disagrees with the closed form (the quoted -1 at the one-null-curvature
/// boundary is treated as a typo; the formula value +-3/2 is reported).
std::optional<std::string> curvature_annotation(const NormalForm& nf);

}  // namespace cartanpath

#endif
