#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanpath/linalg.hpp"
#include "cartanpath/selfcheck.hpp"

using namespace cartanpath;

namespace {
Mat3 rand_mat(TestRng& rng) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = rng.rat(5, 3);
  return m;
}
}  // namespace

TEST_CASE("determinant and inverse") {
  Mat3 m = Mat3::diagonal(Rat(2), Rat(3), Rat(-1));
  m.at(0, 1) = Rat(7);
  CHECK(det(m) == Rat(-6));
  Mat3 inv = inverse(m);
  CHECK(inv * m == Mat3::identity());
  CHECK(m * inv == Mat3::identity());

  Mat3 singular{};
  singular.at(0, 0) = Rat(1);
  singular.at(1, 0) = Rat(2);
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("inverse on random invertible matrices") {
  TestRng rng(11);
  int done = 0;
  while (done < 50) {
    Mat3 m = rand_mat(rng);
    if (det(m).is_zero()) continue;
    CHECK(m * inverse(m) == Mat3::identity());
    ++done;
  }
}

TEST_CASE("solve") {
  Mat3 m = Mat3::identity();
  m.at(0, 1) = Rat(1, 2);
  Vec3 b{Rat(1), Rat(2), Rat(3)};
  Vec3 x = solve(m, b);
  CHECK(m * x == b);
}

TEST_CASE("transpose and symmetry") {
  Mat3 m{};
  m.at(0, 1) = Rat(5);
  CHECK_FALSE(is_symmetric(m));
  CHECK(is_symmetric(m + transpose(m)));
  CHECK(trace(Mat3::diagonal(Rat(1), Rat(2), Rat(3))) == Rat(6));
}
