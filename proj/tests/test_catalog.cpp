#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cartanpath/catalog.hpp"

using namespace cartanpath;

namespace {
const TableRow& row(const std::string& key) {
  for (const auto& r : builtin_tables())
    if (r.key == key) return r;
  REQUIRE(false);
  return builtin_tables().front();
}
}

TEST_CASE("table shape: 13 solvable + 9 simple rows") {
  const auto& rows = builtin_tables();
  CHECK(rows.size() == 22);
  int solvable = 0, simple = 0;
  for (const auto& r : rows) (r.table == "solvable" ? solvable : simple) += 1;
  CHECK(solvable == 13);
  CHECK(simple == 9);
}

TEST_CASE("spot values") {
  CHECK(row("heisenberg").q_fixed == std::pair{Rat(0), Rat(0)});
  CHECK(row("vii0-boost").q_fixed == std::pair{Rat(-3, 2), Rat(3, 2)});
  CHECK(row("iv-ef").q_fixed == std::pair{Rat(-1, 96), Rat(1, 96)});
  CHECK(row("vi0-boost").q_fixed == std::pair{Rat(3, 2), Rat(-3, 2)});
  // the high branch of the sign -1 family: Q = (3/2, -3c/2)
  auto q = row("sl2-fam-minus-high").q_of(Rat(3));
  CHECK(q == std::pair{Rat(3, 2), Rat(-9, 2)});
  // every fixed row's stored curvature is reproduced by the direct formula
  for (const auto& r : builtin_tables())
    if (r.fixed) CHECK(curvature_direct(*r.fixed) == r.q_fixed);
}

TEST_CASE("family ranges") {
  const auto& vi = row("vi-fam-e").range;
  CHECK(vi.contains(Rat(-1, 8)));
  CHECK(vi.contains(Rat(5)));
  CHECK_FALSE(vi.contains(Rat(0)));
  CHECK_FALSE(vi.contains(Rat(-1, 4)));
  CHECK_FALSE(vi.contains(Rat(-1)));
  CHECK(vi.samples(5).size() >= 5);
  for (const auto& c : vi.samples(5)) CHECK(vi.contains(c));

  const auto& low = row("sl2-fam-minus-low").range;
  auto s = low.samples(5);
  CHECK(s.size() >= 5);
  for (const auto& c : s) {
    CHECK(c > Rat(0));
    CHECK(c < Rat(1));
  }
}

TEST_CASE("family samples land in the stated Bianchi column") {
  // modulus samples for the solvable families, across the boundary
  struct Expect {
    Rat c;
    BianchiType type;
  };
  const Expect expect[] = {
      {Rat(-1, 2), BianchiType::VII}, {Rat(-1, 4), BianchiType::IV},
      {Rat(-1, 8), BianchiType::VI},  {Rat(1), BianchiType::VI},
      {Rat(2), BianchiType::VI},
  };
  for (const auto& ex : expect) {
    CHECK(bianchi_type(row("vi-fam-e").family(ex.c)) == ex.type);
    CHECK(bianchi_type(row("vi-fam-ef").family(ex.c)) == ex.type);
  }
}

TEST_CASE("regeneration reproduces every row exactly") {
  auto rep = regenerate_tables();
  for (const auto& diff : rep.diffs) MESSAGE(diff);
  CHECK(rep.ok());
  CHECK(rep.rows_checked == 22);
  CHECK(rep.samples_checked >= 22 + 5 * 8);  // every row + 5 samples per family
}

TEST_CASE("a corrupted row produces a diff") {
  auto rows = builtin_tables();
  for (auto& r : rows)
    if (r.key == "heisenberg") r.q_fixed = {Rat(1), Rat(0)};
  auto rep = regenerate_against(rows);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.diffs.size() == 1);
  CHECK(rep.diffs.front().find("heisenberg") != std::string::npos);
  CHECK(rep.diffs.front().find("curvature mismatch") != std::string::npos);
}

TEST_CASE("renderers") {
  const auto& rows = builtin_tables();
  std::string csv = render_tables_csv(rows);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 23);  // header + 22 data rows
  CHECK(csv.find("group,bianchi,adY,Q1,Q2") == 0);
  CHECK(csv.find("\"-1/96\"") != std::string::npos);

  std::string text = render_tables_text(rows);
  CHECK(text.find("solvable Lie groups") != std::string::npos);
  CHECK(text.find("simple Lie groups") != std::string::npos);
  CHECK(text.find("VII_0") != std::string::npos);
}

TEST_CASE("curvature annotation fires only on the one-null-curvature boundary") {
  auto nf = normalize(AdYMatrix(Rat(1), Rat(-1), Rat(0), Rat(-1), Rat(0), Rat(0)));
  auto note = curvature_annotation(nf);
  REQUIRE(note.has_value());
  CHECK(note->find("3/2") != std::string::npos);
  CHECK_FALSE(curvature_annotation(normalize(*row("heisenberg").fixed)).has_value());
  CHECK_FALSE(
      curvature_annotation(normalize(row("sl2-fam-plus").family(Rat(2)))).has_value());
}
