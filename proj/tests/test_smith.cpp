#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shiftcover/polynomial.hpp"
#include "shiftcover/smith.hpp"

using namespace shiftcover;

namespace {

void check_smith(const IntMat& m) {
  const SmithResult res = smith_normal_form(m);
  REQUIRE(res.u * m * res.v == res.d);
  // transforms are unimodular
  Int du = determinant(res.u);
  Int dv = determinant(res.v);
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  // diagonal, nonnegative, divisibility chain
  for (std::size_t i = 0; i < res.d.rows(); ++i)
    for (std::size_t j = 0; j < res.d.cols(); ++j)
      if (i != j) REQUIRE(res.d(i, j) == 0);
  for (std::size_t k = 0; k < res.factors.size(); ++k) {
    REQUIRE(res.factors[k] >= 0);
    if (k > 0) {
      if (res.factors[k - 1] == 0)
        REQUIRE(res.factors[k] == 0);
      else
        REQUIRE(res.factors[k] % res.factors[k - 1] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith form of known matrices") {
  REQUIRE(smith_invariant_factors(IntMat{{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
  REQUIRE(smith_invariant_factors(IntMat::identity(3)) == std::vector<Int>{1, 1, 1});
  REQUIRE(smith_invariant_factors(IntMat{{0, -1}, {-1, 0}}) == std::vector<Int>{1, 1});
  REQUIRE(smith_invariant_factors(IntMat(2, 2)) == std::vector<Int>{0, 0});
  // presentation matrix of Z/2 + Z/4
  REQUIRE(smith_invariant_factors(IntMat{{2, 0}, {0, 4}}) == std::vector<Int>{2, 4});
  REQUIRE(smith_invariant_factors(IntMat{{2, 1}, {1, 2}}) == std::vector<Int>{1, 3});
  // rank-deficient
  REQUIRE(smith_invariant_factors(IntMat{{2, 4}, {1, 2}}) == std::vector<Int>{1, 0});
}

TEST_CASE("smith form of rectangular matrices") {
  const IntMat wide{{2, 4, 6}, {4, 8, 12}};
  REQUIRE(smith_invariant_factors(wide) == std::vector<Int>{2, 0});
  check_smith(wide);
  check_smith(wide.transpose());
}

TEST_CASE("smith transforms verify on random matrices") {
  std::mt19937 rng(911823);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    check_smith(m);
  }
}

TEST_CASE("smith factors are invariant under unimodular changes") {
  // row/column operations must not change the factors
  const IntMat m{{6, 4}, {2, 8}};
  const auto base = smith_invariant_factors(m);
  IntMat rowop = m;
  for (std::size_t j = 0; j < 2; ++j) rowop(0, j) += 3 * m(1, j);
  REQUIRE(smith_invariant_factors(rowop) == base);
  IntMat swap{{m(1, 0), m(1, 1)}, {m(0, 0), m(0, 1)}};
  REQUIRE(smith_invariant_factors(swap) == base);
}
