#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanpath/path_structure.hpp"
#include "cartanpath/selfcheck.hpp"
#include "cartanpath/strict.hpp"

using namespace cartanpath;

namespace {
AdYMatrix ady(long a11, long a12, long a21, long a22, long a31, long a32) {
  return AdYMatrix(Rat(a11), Rat(a12), Rat(a21), Rat(a22), Rat(a31), Rat(a32));
}
}

TEST_CASE("constraint validation") {
  CHECK_NOTHROW(AdYMatrix(Rat(1, 4), Rat(1, 4), Rat(-1, 4), Rat(-1, 4), Rat(1), Rat(1)));
  CHECK_NOTHROW(ady(0, 0, 0, 0, 0, 0));
  CHECK_THROWS_AS(ady(1, 0, 0, 0, 0, 0), ConstraintError);
  auto vs = check_ady_constraints(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].index == 1);
  CHECK(vs[0].residual == Rat(1));
}

TEST_CASE("to_structure_constants") {
  // A = 0 gives the Heisenberg constants
  StructureConstants heis = to_structure_constants(ady(0, 0, 0, 0, 0, 0));
  CHECK(heis.basis_bracket(0, 1) == Vec3{Rat(0), Rat(0), Rat(-1)});
  CHECK(is_zero(heis.basis_bracket(0, 2)));
  CHECK(is_zero(heis.basis_bracket(1, 2)));

  // the diagonal form has split (non-definite, non-degenerate) Killing form
  Mat3 k = killing_form(to_structure_constants(ady(1, 0, 0, -1, 0, 0)));
  CHECK_FALSE(det(k).is_zero());
  CHECK(k.at(0, 0) == Rat(0));
  CHECK(k.at(0, 1) == Rat(-2));
  CHECK(k.at(2, 2) == Rat(2));

  TestRng rng(41);
  for (int i = 0; i < 200; ++i)
    CHECK(jacobi_check(to_structure_constants(rng.valid_ady())).empty());
}

TEST_CASE("reorder involution") {
  AdYMatrix fam = AdYMatrix(Rat(1), Rat(1), Rat(5, 7), Rat(-1), Rat(0), Rat(0));
  AdYMatrix expect(Rat(1), Rat(-5, 7), Rat(-1), Rat(-1), Rat(0), Rat(0));
  CHECK(reorder(fam) == expect);

  AdYMatrix zero = ady(0, 0, 0, 0, 0, 0);
  CHECK(reorder(zero) == zero);

  TestRng rng(43);
  for (int i = 0; i < 100; ++i) {
    AdYMatrix A = rng.valid_ady();
    CHECK(reorder(reorder(A)) == A);
  }
}

TEST_CASE("reorder is the basis swap (X1,X2,Y) -> (X2,X1,-Y)") {
  TestRng rng(47);
  Mat3 swap = Mat3::zero();
  swap.at(0, 1) = Rat(1);
  swap.at(1, 0) = Rat(1);
  swap.at(2, 2) = Rat(-1);
  for (int i = 0; i < 60; ++i) {
    AdYMatrix A = rng.valid_ady();
    CHECK(to_structure_constants(reorder(A)) ==
          change_basis(to_structure_constants(A), swap));
  }
}

TEST_CASE("scale_action") {
  AdYMatrix A = ady(2, 0, 0, -2, 0, 0);
  CHECK(scale_action(A, Rat(1), Rat(1)) == A);
  // l1 l2 = 1/2 normalizes the diagonal form
  CHECK(scale_action(A, Rat(1, 2), Rat(1)) == ady(1, 0, 0, -1, 0, 0));
  CHECK_THROWS_AS(scale_action(A, Rat(0), Rat(1)), std::domain_error);

  TestRng rng(53);
  for (int i = 0; i < 60; ++i) {
    AdYMatrix B = rng.valid_ady();
    Rat l1 = rng.rat(4, 3, true), l2 = rng.rat(4, 3, true);
    Rat m1 = rng.rat(4, 3, true), m2 = rng.rat(4, 3, true);
    CHECK(scale_action(scale_action(B, l1, l2), m1, m2) ==
          scale_action(B, l1 * m1, l2 * m2));
  }
}

TEST_CASE("normalize: fixed leaves") {
  auto nf = normalize(ady(0, 0, 0, 0, 0, 0));
  CHECK(nf.leaf == LeafCase::Heisenberg);
  CHECK(nf.bianchi == BianchiType::II);

  nf = normalize(ady(3, 0, 0, -3, 0, 0));
  CHECK(nf.leaf == LeafCase::Sl2Diag);
  CHECK(nf.matrix == ady(1, 0, 0, -1, 0, 0));
  CHECK(nf.witness_residual <= 1e-12);

  nf = normalize(ady(0, 0, 0, 0, 1, 0));
  CHECK(nf.leaf == LeafCase::AffRE);
  CHECK(nf.bianchi == BianchiType::III);
  nf = normalize(ady(0, 0, 0, 0, 1, 1));
  CHECK(nf.leaf == LeafCase::AffREF);
  CHECK(nf.bianchi == BianchiType::III);

  nf = normalize(ady(0, 1, 0, 0, 0, 0));
  CHECK(nf.leaf == LeafCase::EuclidVII0);
  nf = normalize(ady(0, -1, 0, 0, 0, 0));
  CHECK(nf.leaf == LeafCase::PoincareVI0);
}

TEST_CASE("normalize: solvable families and the Bianchi IV boundary") {
  Rat c(-1, 4);
  auto nf = normalize(AdYMatrix(-c, -c, c, c, Rat(1), Rat(1)));
  CHECK(nf.leaf == LeafCase::SolvFamilyEF);
  CHECK(*nf.parameter == c);
  CHECK(nf.bianchi == BianchiType::IV);
  CHECK(nf.matrix == AdYMatrix(Rat(1, 4), Rat(1, 4), Rat(-1, 4), Rat(-1, 4), Rat(1), Rat(1)));

  nf = normalize(AdYMatrix(Rat(0), Rat(0), Rat(-1, 2), Rat(0), Rat(1), Rat(0)));
  CHECK(nf.leaf == LeafCase::SolvFamilyE);
  CHECK(*nf.parameter == Rat(-1, 2));
  CHECK(nf.bianchi == BianchiType::VII);

  nf = normalize(AdYMatrix(Rat(0), Rat(0), Rat(-1, 8), Rat(0), Rat(1), Rat(0)));
  CHECK(nf.bianchi == BianchiType::VI);

  // scale moves the family parameter by 1/e^2
  nf = normalize(AdYMatrix(Rat(0), Rat(0), Rat(-2), Rat(0), Rat(4), Rat(0)));
  CHECK(nf.leaf == LeafCase::SolvFamilyE);
  CHECK(*nf.parameter == Rat(-1, 8));
}

TEST_CASE("normalize: simple family and its reorder convention") {
  // (1,1; c,-1) keeps sign +1 and modulus c
  auto nf = normalize(AdYMatrix(Rat(1), Rat(1), Rat(-2), Rat(-1), Rat(0), Rat(0)));
  CHECK(nf.leaf == LeafCase::SimpleFamily);
  CHECK(nf.sign == 1);
  CHECK(*nf.parameter == Rat(-2));
  CHECK(nf.bianchi == BianchiType::IX);

  nf = normalize(AdYMatrix(Rat(1), Rat(1), Rat(2), Rat(-1), Rat(0), Rat(0)));
  CHECK(nf.bianchi == BianchiType::VIII);

  // sign -1 with negative modulus reorders onto the +1 branch
  nf = normalize(AdYMatrix(Rat(1), Rat(-1), Rat(-3), Rat(-1), Rat(0), Rat(0)));
  CHECK(nf.sign == 1);
  CHECK(*nf.parameter == Rat(3));
  CHECK(nf.reordered);

  // the solvable boundaries of the family
  nf = normalize(AdYMatrix(Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(0)));
  CHECK(nf.bianchi == BianchiType::VII0);
  nf = normalize(AdYMatrix(Rat(1), Rat(-1), Rat(1), Rat(-1), Rat(0), Rat(0)));
  CHECK(nf.bianchi == BianchiType::VI0);

  // general member: scale-invariant modulus sign(b) * b*c / a^2
  nf = normalize(AdYMatrix(Rat(2), Rat(8), Rat(3), Rat(-2), Rat(0), Rat(0)));
  CHECK(nf.sign == 1);
  CHECK(*nf.parameter == Rat(6));  // 8*3/4
  CHECK(nf.witness_residual <= 1e-12);
}

TEST_CASE("bianchi_type on the rotational forms follows the Killing form") {
  CHECK(bianchi_type(ady(0, 1, 1, 0, 0, 0)) == BianchiType::VIII);
  // negative-definite Killing form: the rotation with opposite signs
  CHECK(bianchi_type(ady(0, 1, -1, 0, 0, 0)) == BianchiType::IX);
  // both-positive rotation block is split, not compact
  CHECK(bianchi_type(ady(0, -1, 1, 0, 0, 0)) == BianchiType::VIII);
  CHECK(bianchi_type(ady(0, 0, 0, 0, 1, 1)) == BianchiType::III);
}

TEST_CASE("bianchi_type agrees with the independent classifier") {
  TestRng rng(59);
  for (int i = 0; i < 300; ++i) {
    AdYMatrix A = rng.valid_ady();
    CHECK(bianchi_type(A) == bianchi_from_constants(to_structure_constants(A)));
  }
}

TEST_CASE("normalize is constant on orbits") {
  TestRng rng(61);
  for (int i = 0; i < 200; ++i) {
    AdYMatrix A = rng.valid_ady();
    AdYMatrix B = scale_action(A, rng.rat(4, 3, true), rng.rat(4, 3, true));
    if (rng.integer(0, 1)) B = reorder(B);
    NormalForm na = normalize(A), nb = normalize(B);
    CHECK(na.same_orbit_data(nb));
    auto qa = curvature_direct(A), qb = curvature_direct(B);
    CHECK((qa.first * qa.second).sign() == (qb.first * qb.second).sign());
  }
}

TEST_CASE("exact scale witnesses for the rational-witness leaves") {
  // where the normalization needs no square root, the witness can be
  // reconstructed exactly and must reach the canonical matrix on the nose
  TestRng rng(139);
  for (int i = 0; i < 300; ++i) {
    AdYMatrix A = rng.valid_ady();
    NormalForm nf = normalize(A);
    AdYMatrix w = nf.reordered ? reorder(A) : A;
    switch (nf.leaf) {
      case LeafCase::Heisenberg:
        CHECK(w == nf.matrix);
        break;
      case LeafCase::Sl2Diag:
        CHECK(scale_action(w, w.a().inverse(), Rat(1)) == nf.matrix);
        break;
      case LeafCase::AffRE:
      case LeafCase::SolvFamilyE:
        CHECK(scale_action(w, w.e().inverse(), Rat(1)) == nf.matrix);
        break;
      case LeafCase::AffREF:
      case LeafCase::SolvFamilyEF:
        CHECK(scale_action(w, w.e().inverse(), w.f().inverse()) == nf.matrix);
        break;
      default:
        break;  // square-root witnesses are covered by the residual check
    }
  }
}

TEST_CASE("normalize canonical representative is a fixed point") {
  TestRng rng(67);
  for (int i = 0; i < 100; ++i) {
    NormalForm nf = normalize(rng.valid_ady());
    NormalForm again = normalize(nf.matrix);
    CHECK(again.matrix == nf.matrix);
    CHECK(again.same_orbit_data(nf));
    CHECK_FALSE(again.reordered);
  }
}
