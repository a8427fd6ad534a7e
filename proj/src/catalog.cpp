#include "cartanpath/catalog.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cartanpath {

bool ParamRange::contains(const Rat& c) const {
  if (lo && !(c > *lo)) return false;
  if (hi && !(c < *hi)) return false;
  return std::find(excluded.begin(), excluded.end(), c) == excluded.end();
}

std::vector<Rat> ParamRange::samples(int n) const {
  std::vector<Rat> out;
  auto push = [&](const Rat& c) {
    if (contains(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  if (lo && hi) {
    Rat span = *hi - *lo;
    for (int denom = n + 1; static_cast<int>(out.size()) < n; denom += n + 1)
      for (int i = 1; i <= denom - 1 && static_cast<int>(out.size()) < n; ++i)
        push(*lo + Rat(i, denom) * span);
  } else {
    static const long num[] = {1, 1, 1, 3, 10, 2, 7, 25, 1, 5};
    static const long den[] = {8, 2, 1, 1, 1, 3, 2, 1, 16, 7};
    Rat anchor = lo ? *lo : (hi ? *hi : Rat(0));
    int dir = lo ? 1 : (hi ? -1 : 1);
    for (std::size_t i = 0; i < std::size(num) && static_cast<int>(out.size()) < n; ++i)
      push(anchor + Rat(dir) * Rat(num[i], den[i]));
    if (!lo && !hi)
      for (std::size_t i = 0; i < std::size(num) && static_cast<int>(out.size()) < n; ++i)
        push(Rat(-1) * Rat(num[i], den[i]));
  }
  return out;
}

namespace {

const Rat kZero(0), kOne(1);

AdYMatrix fixed_matrix(long a11, long a12, long a21, long a22, long a31, long a32) {
  return AdYMatrix(Rat(a11), Rat(a12), Rat(a21), Rat(a22), Rat(a31), Rat(a32));
}

std::pair<Rat, Rat> q_zero(const Rat&) { return {Rat(0), Rat(0)}; }

std::vector<TableRow> build_tables() {
  std::vector<TableRow> rows;
  auto add = [&](TableRow r) { rows.push_back(std::move(r)); };

  // ---- solvable table ----
  {
    TableRow r;
    r.key = "heisenberg";
    r.group_name = "Heisenberg";
    r.table = "solvable";
    r.bianchi = BianchiType::II;
    r.ady_display = "(0,0; 0,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 0, 0, 0, 0, 0);
    r.leaf = LeafCase::Heisenberg;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "aff-e";
    r.group_name = "Aff(2) x R";
    r.table = "solvable";
    r.bianchi = BianchiType::III;
    r.ady_display = "(0,0; 0,0; 1,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 0, 0, 0, 1, 0);
    r.leaf = LeafCase::AffRE;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "aff-ef";
    r.group_name = "Aff(2) x R";
    r.table = "solvable";
    r.bianchi = BianchiType::III;
    r.ady_display = "(0,0; 0,0; 1,1)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 0, 0, 0, 1, 1);
    r.leaf = LeafCase::AffREF;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "iv-e";
    r.group_name = "solvable Bianchi IV";
    r.table = "solvable";
    r.bianchi = BianchiType::IV;
    r.ady_display = "(0,0; -1/4,0; 1,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = AdYMatrix(kZero, kZero, Rat(-1, 4), kZero, kOne, kZero);
    r.leaf = LeafCase::SolvFamilyE;
    r.leaf_parameter = Rat(-1, 4);
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "iv-ef";
    r.group_name = "solvable Bianchi IV";
    r.table = "solvable";
    r.bianchi = BianchiType::IV;
    r.ady_display = "(1/4,1/4; -1/4,-1/4; 1,1)";
    r.q1_display = "-1/96";
    r.q2_display = "1/96";
    r.fixed = AdYMatrix(Rat(1, 4), Rat(1, 4), Rat(-1, 4), Rat(-1, 4), kOne, kOne);
    r.q_fixed = {Rat(-1, 96), Rat(1, 96)};
    r.leaf = LeafCase::SolvFamilyEF;
    r.leaf_parameter = Rat(-1, 4);
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vi0-rot";
    r.group_name = "Poincare group";
    r.table = "solvable";
    r.bianchi = BianchiType::VI0;
    r.ady_display = "(0,-1; 0,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, -1, 0, 0, 0, 0);
    r.leaf = LeafCase::PoincareVI0;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vi0-boost";
    r.group_name = "Poincare group";
    r.table = "solvable";
    r.bianchi = BianchiType::VI0;
    r.ady_display = "(1,-1; 1,-1; 0,0)";
    r.q1_display = "3/2";
    r.q2_display = "-3/2";
    r.fixed = fixed_matrix(1, -1, 1, -1, 0, 0);
    r.q_fixed = {Rat(3, 2), Rat(-3, 2)};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = -1;
    r.leaf_parameter = Rat(1);
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vi-fam-e";
    r.group_name = "solvable Bianchi VI";
    r.table = "solvable";
    r.bianchi = BianchiType::VI;
    r.ady_display = "(0,0; c,0; 1,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.family = [](const Rat& c) { return AdYMatrix(kZero, kZero, c, kZero, kOne, kZero); };
    r.q_of = q_zero;
    r.range = {Rat(-1, 4), std::nullopt, {Rat(0)}, "0 != c > -1/4"};
    r.boundaries = {{Rat(-1, 4), "iv-e"}, {Rat(0), "aff-e"}};
    r.leaf = LeafCase::SolvFamilyE;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vi-fam-ef";
    r.group_name = "solvable Bianchi VI";
    r.table = "solvable";
    r.bianchi = BianchiType::VI;
    r.ady_display = "(-c,-c; c,c; 1,1)";
    r.q1_display = "c(-3c/2 - 1/3)";
    r.q2_display = "c(3c/2 + 1/3)";
    r.family = [](const Rat& c) { return AdYMatrix(-c, -c, c, c, kOne, kOne); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> {
      Rat q2 = c * (Rat(3, 2) * c + Rat(1, 3));
      return {-q2, q2};
    };
    r.range = {Rat(-1, 4), std::nullopt, {Rat(0)}, "0 != c > -1/4"};
    r.boundaries = {{Rat(-1, 4), "iv-ef"}, {Rat(0), "aff-ef"}};
    r.leaf = LeafCase::SolvFamilyEF;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vii0-rot";
    r.group_name = "Euclidean group";
    r.table = "solvable";
    r.bianchi = BianchiType::VII0;
    r.ady_display = "(0,1; 0,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 1, 0, 0, 0, 0);
    r.leaf = LeafCase::EuclidVII0;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vii0-boost";
    r.group_name = "Euclidean group";
    r.table = "solvable";
    r.bianchi = BianchiType::VII0;
    r.ady_display = "(1,1; -1,-1; 0,0)";
    r.q1_display = "-3/2";
    r.q2_display = "3/2";
    r.fixed = fixed_matrix(1, 1, -1, -1, 0, 0);
    r.q_fixed = {Rat(-3, 2), Rat(3, 2)};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = 1;
    r.leaf_parameter = Rat(-1);
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vii-fam-e";
    r.group_name = "solvable Bianchi VII";
    r.table = "solvable";
    r.bianchi = BianchiType::VII;
    r.ady_display = "(0,0; c,0; 1,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.family = [](const Rat& c) { return AdYMatrix(kZero, kZero, c, kZero, kOne, kZero); };
    r.q_of = q_zero;
    r.range = {std::nullopt, Rat(-1, 4), {}, "c < -1/4"};
    r.boundaries = {{Rat(-1, 4), "iv-e"}};
    r.leaf = LeafCase::SolvFamilyE;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "vii-fam-ef";
    r.group_name = "solvable Bianchi VII";
    r.table = "solvable";
    r.bianchi = BianchiType::VII;
    r.ady_display = "(-c,-c; c,c; 1,1)";
    r.q1_display = "c(-3c/2 - 1/3)";
    r.q2_display = "c(3c/2 + 1/3)";
    r.family = [](const Rat& c) { return AdYMatrix(-c, -c, c, c, kOne, kOne); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> {
      Rat q2 = c * (Rat(3, 2) * c + Rat(1, 3));
      return {-q2, q2};
    };
    r.range = {std::nullopt, Rat(-1, 4), {}, "c < -1/4"};
    r.boundaries = {{Rat(-1, 4), "iv-ef"}};
    r.leaf = LeafCase::SolvFamilyEF;
    add(std::move(r));
  }

  // ---- simple table ----
  {
    TableRow r;
    r.key = "sl2-diag";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(1,0; 0,-1; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(1, 0, 0, -1, 0, 0);
    r.leaf = LeafCase::Sl2Diag;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-offdiag";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(0,1; 1,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 1, 1, 0, 0, 0);
    r.leaf = LeafCase::Sl2Offdiag;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-rot";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(0,-1; 1,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, -1, 1, 0, 0, 0);
    r.leaf = LeafCase::Sl2Rot;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-fam-plus";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(1,1; c,-1; 0,0)";
    r.q1_display = "-3/2";
    r.q2_display = "-3c/2";
    r.family = [](const Rat& c) { return AdYMatrix(kOne, kOne, c, -kOne, kZero, kZero); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> { return {Rat(-3, 2), Rat(-3, 2) * c}; };
    r.range = {Rat(-1), std::nullopt, {}, "c > -1"};
    r.boundaries = {{Rat(-1), "vii0-boost"}};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = 1;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-fam-minus-low";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(1,-1; c,-1; 0,0)";
    r.q1_display = "3/2";
    r.q2_display = "-3c/2";
    r.family = [](const Rat& c) { return AdYMatrix(kOne, -kOne, c, -kOne, kZero, kZero); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> { return {Rat(3, 2), Rat(-3, 2) * c}; };
    r.range = {Rat(0), Rat(1), {}, "0 < c < 1"};
    r.boundaries = {{Rat(0), "sl2-null"}, {Rat(1), "vi0-boost"}};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = -1;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-fam-minus-high";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(1,-1; c,-1; 0,0)";
    r.q1_display = "3/2";
    r.q2_display = "-3c/2";
    r.family = [](const Rat& c) { return AdYMatrix(kOne, -kOne, c, -kOne, kZero, kZero); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> { return {Rat(3, 2), Rat(-3, 2) * c}; };
    r.range = {Rat(1), std::nullopt, {}, "c > 1"};
    r.boundaries = {{Rat(1), "vi0-boost"}};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = -1;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "sl2-null";
    r.group_name = "SL(2,R)";
    r.table = "simple";
    r.bianchi = BianchiType::VIII;
    r.ady_display = "(1,-1; 0,-1; 0,0)";
    r.q1_display = "3/2";
    r.q2_display = "0";
    r.fixed = fixed_matrix(1, -1, 0, -1, 0, 0);
    r.q_fixed = {Rat(3, 2), Rat(0)};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = -1;
    r.leaf_parameter = Rat(0);
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "su2-rot";
    r.group_name = "SU(2)";
    r.table = "simple";
    r.bianchi = BianchiType::IX;
    r.ady_display = "(0,1; -1,0; 0,0)";
    r.q1_display = "0";
    r.q2_display = "0";
    r.fixed = fixed_matrix(0, 1, -1, 0, 0, 0);
    r.leaf = LeafCase::Su2Rot;
    add(std::move(r));
  }
  {
    TableRow r;
    r.key = "su2-fam";
    r.group_name = "SU(2)";
    r.table = "simple";
    r.bianchi = BianchiType::IX;
    r.ady_display = "(1,1; c,-1; 0,0)";
    r.q1_display = "-3/2";
    r.q2_display = "-3c/2";
    r.family = [](const Rat& c) { return AdYMatrix(kOne, kOne, c, -kOne, kZero, kZero); };
    r.q_of = [](const Rat& c) -> std::pair<Rat, Rat> { return {Rat(-3, 2), Rat(-3, 2) * c}; };
    r.range = {std::nullopt, Rat(-1), {}, "c < -1"};
    r.boundaries = {{Rat(-1), "vii0-boost"}};
    r.leaf = LeafCase::SimpleFamily;
    r.leaf_sign = 1;
    add(std::move(r));
  }
  return rows;
}

}  // namespace

const std::vector<TableRow>& builtin_tables() {
  static const std::vector<TableRow> rows = build_tables();
  return rows;
}

namespace {

const TableRow* find_row(const std::vector<TableRow>& rows, const std::string& key) {
  for (const auto& r : rows)
    if (r.key == key) return &r;
  return nullptr;
}

/// Whether the normal form of a probe belongs to the row.
bool row_claims(const TableRow& row, const NormalForm& nf) {
  if (nf.leaf != row.leaf || nf.sign != row.leaf_sign) return false;
  if (row.parametric()) return nf.parameter && row.range.contains(*nf.parameter);
  if (row.leaf_parameter) return nf.parameter && *nf.parameter == *row.leaf_parameter;
  return !nf.parameter.has_value();
}

void check_probe(const std::vector<TableRow>& rows, const TableRow& row,
                 const AdYMatrix& A, const std::pair<Rat, Rat>& q_expect,
                 const std::string& label, RegenReport& rep) {
  ++rep.samples_checked;
  auto fail = [&](const std::string& what) {
    rep.diffs.push_back(row.key + " [" + label + "]: " + what);
  };

  if (!jacobi_check(to_structure_constants(A)).empty()) {
    fail("structure constants violate the Jacobi identity");
    return;
  }
  auto q = curvature_direct(A);
  if (q != q_expect)
    fail("curvature mismatch: computed (" + q.first.str() + ", " + q.second.str() +
         ") vs stored (" + q_expect.first.str() + ", " + q_expect.second.str() + ")");

  NormalForm nf = normalize(A);
  if (!row_claims(row, nf))
    fail("normal form " + leaf_name(nf.leaf) +
         (nf.parameter ? " c=" + nf.parameter->str() : "") + " not claimed by the row");
  if (nf.bianchi != row.bianchi)
    fail("Bianchi type " + to_label(nf.bianchi) + " vs stored " + to_label(row.bianchi));
  BianchiType indep = bianchi_from_constants(to_structure_constants(A));
  if (indep != row.bianchi)
    fail("independent Bianchi classification " + to_label(indep) + " vs stored " +
         to_label(row.bianchi));

  // leaf coverage: exactly one row claims this probe
  int claimants = 0;
  for (const auto& other : rows)
    if (row_claims(other, nf)) ++claimants;
  if (claimants != 1)
    fail("probe claimed by " + std::to_string(claimants) + " rows (expected exactly 1)");
}

}  // namespace

RegenReport regenerate_against(const std::vector<TableRow>& rows, int samples_per_range) {
  RegenReport rep;
  for (const auto& row : rows) {
    ++rep.rows_checked;
    if (row.fixed) {
      check_probe(rows, row, *row.fixed, row.q_fixed, "fixed", rep);
      NormalForm nf = normalize(*row.fixed);
      if (!(nf.matrix == *row.fixed))
        rep.diffs.push_back(row.key + " [fixed]: stored matrix is not the canonical representative");
    }
    if (row.parametric()) {
      for (const auto& c : row.range.samples(samples_per_range))
        check_probe(rows, row, row.family(c), row.q_of(c), "c=" + c.str(), rep);
      for (const auto& b : row.boundaries) {
        const TableRow* target = find_row(rows, b.row_key);
        if (!target) {
          rep.diffs.push_back(row.key + ": dangling boundary row '" + b.row_key + "'");
          continue;
        }
        // family expression must extend continuously onto the boundary row
        AdYMatrix A = row.family(b.value);
        auto q_family = row.q_of(b.value);
        if (target->fixed && !(A == *target->fixed))
          rep.diffs.push_back(row.key + ": boundary c=" + b.value.str() +
                              " matrix differs from row '" + b.row_key + "'");
        check_probe(rows, *target, A, q_family, "boundary c=" + b.value.str(), rep);
      }
    }
  }
  return rep;
}

RegenReport regenerate_tables(int samples_per_range) {
  return regenerate_against(builtin_tables(), samples_per_range);
}

namespace {

std::string ady_cell(const TableRow& r) {
  std::string s = r.ady_display;
  if (r.parametric()) s += ", " + r.range.display;
  return s;
}

}  // namespace

std::string render_tables_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::string& table, const std::string& title) {
    os << title << "\n";
    std::size_t wg = 5, wb = 7, wa = 4;
    for (const auto& r : rows)
      if (r.table == table) {
        wg = std::max(wg, r.group_name.size());
        wb = std::max(wb, to_label(r.bianchi).size());
        wa = std::max(wa, ady_cell(r).size());
      }
    os << std::left << std::setw(static_cast<int>(wg) + 2) << "group"
       << std::setw(static_cast<int>(wb) + 2) << "bianchi"
       << std::setw(static_cast<int>(wa) + 2) << "ad_Y"
       << std::setw(18) << "Q1" << "Q2\n";
    for (const auto& r : rows) {
      if (r.table != table) continue;
      os << std::left << std::setw(static_cast<int>(wg) + 2) << r.group_name
         << std::setw(static_cast<int>(wb) + 2) << to_label(r.bianchi)
         << std::setw(static_cast<int>(wa) + 2) << ady_cell(r)
         << std::setw(18) << r.q1_display << r.q2_display << "\n";
    }
    os << "\n";
  };
  emit("solvable", "Path structures on three dimensional solvable Lie groups");
  emit("simple", "Path structures on three dimensional simple Lie groups");
  return os.str();
}

std::string render_tables_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  os << "group,bianchi,adY,Q1,Q2\n";
  for (const auto& r : rows)
    os << quote(r.group_name) << "," << to_label(r.bianchi) << "," << quote(ady_cell(r))
       << "," << quote(r.q1_display) << "," << quote(r.q2_display) << "\n";
  return os.str();
}

std::optional<std::string> curvature_annotation(const NormalForm& nf) {
  if (nf.leaf == LeafCase::SimpleFamily && nf.parameter && nf.parameter->is_zero())
    return "note: one curvature vanishes here; a commonly quoted value of -1 (resp. 1) "
           "for the other disagrees with the closed form and is treated as a typo; "
           "the formula value " + std::string(nf.sign > 0 ? "-3/2" : "3/2") + " is reported";
  return std::nullopt;
}

}  // namespace cartanpath
