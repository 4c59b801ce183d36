#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "shiftcover/knot_data.hpp"
#include "shiftcover/transfer.hpp"

using namespace shiftcover;

namespace {

const WordMap kTrefoil{{2}, {2, -1}};
const WordMap kFigure8{{1, 2, 1}, {2, 1}};

}  // namespace

TEST_CASE("closed invariant of small spaces") {
  const FiniteGroup s3 = symmetric_group(3);
  // a point: one hom, invariant 1/#G
  REQUIRE(closed_invariant(free_presentation(0), s3) == Rat(1, 6));
  // a circle: #G homs, invariant 1
  REQUIRE(closed_invariant(free_presentation(1), s3) == Rat(1));
  // the torus: commuting pairs / #G = 3 = number of conjugacy classes
  REQUIRE(closed_invariant(Presentation{2, {{1, 2, -1, -2}}}, s3) == Rat(3));
  const FiniteGroup c5 = cyclic_group(5);
  REQUIRE(closed_invariant(Presentation{2, {{1, 2, -1, -2}}}, c5) == Rat(5));
  REQUIRE(relative_invariant(free_presentation(2), s3) == Int(36));
}

TEST_CASE("identity cobordism gives identity matrices") {
  const FiniteGroup s3 = symmetric_group(3);
  const CobordismData idc = twisted_product(2, identity_word_map(2), Theory::relative);
  const TransferMatrix rel = transfer_matrix_relative(idc, s3);
  REQUIRE(rel.entries == IntMat::identity(36));
  REQUIRE(rel.col_basis == rel.row_basis);
  const TransferMatrix cls = transfer_matrix(idc, s3);
  REQUIRE(cls.entries == IntMat::identity(11));
}

TEST_CASE("twisted product matrices are permutations") {
  const FiniteGroup s3 = symmetric_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix rel = transfer_matrix_relative(cob, s3);
  REQUIRE(rel.entries.rows() == 36);
  for (std::size_t j = 0; j < 36; ++j) {
    Int colsum(0);
    for (std::size_t i = 0; i < 36; ++i) {
      REQUIRE((rel.entries(i, j) == 0 || rel.entries(i, j) == 1));
      colsum += rel.entries(i, j);
    }
    REQUIRE(colsum == 1);
  }
  // column gamma has its 1 in row gamma-compose-phi
  for (std::size_t j = 0; j < 36; ++j) {
    const Images& gamma = rel.col_basis[j];
    Images target(2);
    for (int i = 0; i < 2; ++i)
      target[static_cast<std::size_t>(i)] =
          evaluate_word(s3, gamma, kTrefoil[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < 36; ++i)
      REQUIRE(rel.entries(i, j) == Int(rel.row_basis[i] == target ? 1 : 0));
  }

  const TransferMatrix cls = transfer_matrix(cob, s3);
  REQUIRE(cls.entries.rows() == 11);
  for (std::size_t j = 0; j < 11; ++j) {
    Int colsum(0);
    for (std::size_t i = 0; i < 11; ++i) colsum += cls.entries(i, j);
    REQUIRE(colsum == 1);
  }
}

TEST_CASE("column sums of a relative matrix count extensions") {
  const FiniteGroup s3 = symmetric_group(3);
  // total F2, incoming boundary reads x1, outgoing reads x2: every incoming
  // hom extends in #G ways
  CobordismData cob;
  cob.total = free_presentation(2);
  cob.domain = free_presentation(1);
  cob.codomain = free_presentation(1);
  cob.in_map = {{1}};
  cob.out_map = {{2}};
  const TransferMatrix m = transfer_matrix_relative(cob, s3);
  REQUIRE(m.entries.rows() == 6);
  REQUIRE(m.entries.cols() == 6);
  for (std::size_t j = 0; j < 6; ++j) {
    Int colsum(0);
    for (std::size_t i = 0; i < 6; ++i) colsum += m.entries(i, j);
    REQUIRE(colsum == 6);
  }
}

TEST_CASE("boundary map violating domain relators is inconsistent data") {
  const FiniteGroup s3 = symmetric_group(3);
  CobordismData cob;
  cob.total = free_presentation(1);
  cob.domain = Presentation{1, {{1, 1}}};  // forces order <= 2
  cob.codomain = free_presentation(1);
  cob.in_map = {{1}};
  cob.out_map = {{1}};
  REQUIRE_THROWS_AS(transfer_matrix_relative(cob, s3), ConsistencyError);
}

TEST_CASE("trefoil mapping torus counts match the transfer trace") {
  const FiniteGroup s3 = symmetric_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::closed);
  const TransferMatrix m = transfer_matrix(cob, s3);
  // the trefoil complement fibers over the circle: its group has 12 homs
  REQUIRE(cover_count(m, 1, s3) == Int(12));
  for (int d = 1; d <= 3; ++d) {
    const Presentation mt = mapping_torus_presentation(2, kTrefoil, d);
    REQUIRE(cover_count(m, d, s3) == Int(enumerate_homs(mt, s3).size()));
  }
  // the relative trace counts homs of the branched quotient instead
  const CobordismData rcob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix r = transfer_matrix_relative(rcob, s3);
  for (int d = 1; d <= 3; ++d) {
    const Presentation bq = branched_quotient_presentation(2, kTrefoil, d);
    REQUIRE(cover_count(r, d, s3) == Int(enumerate_homs(bq, s3).size()));
  }
}

TEST_CASE("trefoil branched cover counts over cyclic(3)") {
  const FiniteGroup c3 = cyclic_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix m = transfer_matrix_relative(cob, c3);
  REQUIRE(m.entries.rows() == 9);
  const std::vector<Int> counts = branched_cover_counts(m, c3, 1, 12);
  const std::vector<Int> expected{1, 3, 1, 3, 1, 9, 1, 3, 1, 3, 1, 9};
  REQUIRE(counts == expected);
}

TEST_CASE("figure eight branched cover counts over cyclic(5)") {
  const FiniteGroup c5 = cyclic_group(5);
  const CobordismData cob = twisted_product(2, kFigure8, Theory::relative);
  const TransferMatrix m = transfer_matrix_relative(cob, c5);
  const std::vector<Int> counts = branched_cover_counts(m, c5, 1, 10);
  const std::vector<Int> expected{1, 5, 1, 5, 1, 5, 1, 5, 1, 25};
  REQUIRE(counts == expected);
}

TEST_CASE("branched divisibility failure is reported") {
  const FiniteGroup c3 = cyclic_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix m = transfer_matrix_relative(cob, c3);
  // trace at degree 1 is 1, not divisible by 3^(mu-1) for mu = 2
  REQUIRE_THROWS_AS(branched_cover_counts(m, c3, 2, 3), ConsistencyError);
}

TEST_CASE("composition matches the composite twisted product") {
  const FiniteGroup s3 = symmetric_group(3);
  const WordMap phi = kTrefoil;
  const WordMap psi{{-2}, {1, 2}};
  const TransferMatrix m_phi =
      transfer_matrix_relative(twisted_product(2, phi, Theory::relative), s3);
  const TransferMatrix m_psi =
      transfer_matrix_relative(twisted_product(2, psi, Theory::relative), s3);
  // gluing phi first and psi second composes the actions inner-to-outer
  const WordMap glued = compose_word_maps(phi, psi);
  const TransferMatrix m_glued =
      transfer_matrix_relative(twisted_product(2, glued, Theory::relative), s3);
  const TransferMatrix prod = compose(m_psi, m_phi);
  REQUIRE(prod.entries == m_glued.entries);
  REQUIRE(prod.col_basis == m_glued.col_basis);
  REQUIRE(prod.row_basis == m_glued.row_basis);

  // same statement in the closed theory
  const TransferMatrix c_phi = transfer_matrix(twisted_product(2, phi, Theory::closed), s3);
  const TransferMatrix c_psi = transfer_matrix(twisted_product(2, psi, Theory::closed), s3);
  const TransferMatrix c_glued = transfer_matrix(twisted_product(2, glued, Theory::closed), s3);
  REQUIRE(compose(c_psi, c_phi).entries == c_glued.entries);
}

TEST_CASE("compose rejects mismatched bases") {
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup c3 = cyclic_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix over_s3 = transfer_matrix_relative(cob, s3);
  const TransferMatrix over_c3 = transfer_matrix_relative(cob, c3);
  REQUIRE_THROWS_AS(compose(over_s3, over_c3), ShapeError);
  const TransferMatrix cls = transfer_matrix(cob, s3);
  REQUIRE_THROWS_AS(compose(cls, over_s3), ShapeError);
}

TEST_CASE("representative choice does not change the closed matrix") {
  const FiniteGroup s3 = symmetric_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::closed);
  const TransferMatrix least = transfer_matrix(cob, s3, kDefaultWorkBudget, RepChoice::lex_least);
  const TransferMatrix greatest =
      transfer_matrix(cob, s3, kDefaultWorkBudget, RepChoice::lex_greatest);
  REQUIRE(least.entries == greatest.entries);
  // the labels themselves differ (different representatives chosen)
  REQUIRE(least.col_basis != greatest.col_basis);
}

TEST_CASE("periodic point counts satisfy the characteristic recursion") {
  const IntMat full{{1, 1}, {1, 1}};
  const std::vector<Int> counts = periodic_point_counts(full, 10);
  REQUIRE(counts[0] == 2);
  REQUIRE(counts[9] == 1024);
  REQUIRE(verify_recursion(counts, char_poly(full)).ok);

  std::mt19937 rng(7781);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    REQUIRE(verify_recursion(periodic_point_counts(m, static_cast<int>(n) + 6), char_poly(m)).ok);
  }
}

TEST_CASE("recursion violations are located") {
  const IntMat full{{2}};
  std::vector<Int> counts = periodic_point_counts(full, 6);
  counts[4] += 1;  // degree 5
  const RecursionCheck rc = verify_recursion(counts, char_poly(full));
  REQUIRE_FALSE(rc.ok);
  REQUIRE(rc.first_violation == 5);
  REQUIRE_THROWS_AS(verify_recursion(counts, IntPoly({Int(2), Int(3)})), ShapeError);
}

TEST_CASE("transfer budget is enforced") {
  const FiniteGroup s4 = symmetric_group(4);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  WorkBudget tiny(100);
  REQUIRE_THROWS_AS(transfer_matrix_relative(cob, s4, tiny), BudgetError);
}

TEST_CASE("edge records are kept on request") {
  const FiniteGroup c3 = cyclic_group(3);
  const CobordismData cob = twisted_product(2, kTrefoil, Theory::relative);
  const TransferMatrix m = transfer_matrix_relative(cob, c3, kDefaultWorkBudget, true);
  REQUIRE(m.has_edges);
  REQUIRE(m.edges.size() == 9);  // one edge per hom of the total space
  IntMat rebuilt(9, 9);
  for (const auto& e : m.edges)
    rebuilt(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col)) += 1;
  REQUIRE(rebuilt == m.entries);
}
