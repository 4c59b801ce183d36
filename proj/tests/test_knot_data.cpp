#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "shiftcover/knot_data.hpp"
#include "shiftcover/transfer.hpp"

using namespace shiftcover;

TEST_CASE("builtin fibered knots validate and act as expected on homology") {
  const FiberedKnotData trefoil = builtin_fibered("trefoil");
  REQUIRE(trefoil.rank == 2);
  REQUIRE(trefoil.mu == 1);
  const IntMat tre_ab = abelianization_matrix(trefoil.monodromy);
  REQUIRE(tre_ab == IntMat{{0, -1}, {1, 1}});
  REQUIRE(char_poly(tre_ab) == IntPoly({Int(1), Int(-1), Int(1)}));
  REQUIRE(tre_ab.pow(6) == IntMat::identity(2));

  const FiberedKnotData fig8 = builtin_fibered("figure8");
  const IntMat fig_ab = abelianization_matrix(fig8.monodromy);
  REQUIRE(fig_ab == IntMat{{2, 1}, {1, 1}});
  REQUIRE(char_poly(fig_ab) == IntPoly({Int(1), Int(-3), Int(1)}));

  REQUIRE_THROWS_AS(builtin_fibered("unknot"), ParseError);
}

TEST_CASE("monodromy validation") {
  FiberedKnotData k;
  k.rank = 0;
  REQUIRE_THROWS_AS(validate_monodromy(k), WordError);
  k.rank = 2;
  k.monodromy = {{2}};
  REQUIRE_THROWS_AS(validate_monodromy(k), WordError);
  k.monodromy = {{2}, {2, -1}};
  k.mu = 0;
  REQUIRE_THROWS_AS(validate_monodromy(k), WordError);
  k.mu = 1;
  REQUIRE_NOTHROW(validate_monodromy(k));
  // not invertible on homology
  k.monodromy = {{1, 2}, {1, 2}};
  REQUIRE_THROWS_AS(validate_monodromy(k), ConsistencyError);
  // word beyond the rank
  k.monodromy = {{3}, {2}};
  REQUIRE_THROWS_AS(validate_monodromy(k), WordError);
}

TEST_CASE("twisted product of a fibered knot") {
  const FiberedKnotData k = builtin_fibered("trefoil");
  const CobordismData cob = fibered_to_cobordism(k, Theory::relative);
  REQUIRE(cob.theory == Theory::relative);
  REQUIRE(cob.total.gen_count == 2);
  REQUIRE(cob.in_map == identity_word_map(2));
  REQUIRE(cob.out_map == k.monodromy);
}

TEST_CASE("artin generators satisfy the braid relations") {
  const WordMap s1 = artin_generator_map(3, 1);
  const WordMap s2 = artin_generator_map(3, 2);
  const WordMap s1i = artin_generator_map(3, -1);
  REQUIRE(compose_word_maps(s1, s1i) == identity_word_map(3));
  REQUIRE(compose_word_maps(s1i, s1) == identity_word_map(3));
  // sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
  const WordMap lhs = compose_word_maps(s1, compose_word_maps(s2, s1));
  const WordMap rhs = compose_word_maps(s2, compose_word_maps(s1, s2));
  REQUIRE(lhs == rhs);
  // distant generators commute
  const WordMap a = artin_generator_map(4, 1);
  const WordMap b = artin_generator_map(4, 3);
  REQUIRE(compose_word_maps(a, b) == compose_word_maps(b, a));
}

TEST_CASE("braid words validate") {
  REQUIRE_THROWS_AS(validate_braid(BraidWord{1, {}}), WordError);
  REQUIRE_THROWS_AS(validate_braid(BraidWord{2, {0}}), WordError);
  REQUIRE_THROWS_AS(validate_braid(BraidWord{3, {3}}), WordError);
  REQUIRE_THROWS_AS(validate_braid(BraidWord{3, {-3}}), WordError);
  REQUIRE_NOTHROW(validate_braid(BraidWord{3, {1, -2, 1}}));
  REQUIRE(braid_to_artin(BraidWord{3, {}}) == identity_word_map(3));
}

TEST_CASE("the cube of sigma1 acts like the trefoil monodromy on homology") {
  const BraidWord b{2, {1, 1, 1}};
  const WordMap action = braid_to_artin(b);
  REQUIRE(abelianization_matrix(action) == IntMat{{0, 1}, {1, 0}});
  const Presentation p = braid_closure_presentation(b);
  REQUIRE(p.gen_count == 2);
  REQUIRE(p.relators.size() == 1);
}

TEST_CASE("trefoil hom counts: braid closure against mapping torus") {
  const BraidWord braid{2, {1, 1, 1}};
  const Presentation closure = braid_closure_presentation(braid);
  const FiberedKnotData k = builtin_fibered("trefoil");
  const Presentation torus = mapping_torus_presentation(k.rank, k.monodromy, 1);

  // 3 constant + 9 Fox colorings counts homs to the symmetric group
  const FiniteGroup s3 = symmetric_group(3);
  REQUIRE(enumerate_homs(closure, s3).size() == 12);
  REQUIRE(enumerate_homs(torus, s3).size() == 12);
  // 6 diagonal homs and 6 coloring homs; 9 homs land in transpositions
  int transposition_homs = 0;
  for (const Images& h : enumerate_homs(closure, s3)) {
    bool all = true;
    for (int v : h) all = all && s3.element_order(v) == 2;
    if (all) ++transposition_homs;
  }
  REQUIRE(transposition_homs == 9);

  // only diagonal homs into a cyclic group
  const FiniteGroup c5 = cyclic_group(5);
  REQUIRE(enumerate_homs(closure, c5).size() == 5);
  REQUIRE(enumerate_homs(torus, c5).size() == 5);

  // determinant 3 admits no nonconstant 5-coloring: diagonal homs only
  const FiniteGroup d5 = dihedral_group(5);
  REQUIRE(enumerate_homs(closure, d5).size() == 10);
  REQUIRE(enumerate_homs(torus, d5).size() == 10);
}

TEST_CASE("figure eight hom counts: braid closure against mapping torus") {
  const BraidWord braid{3, {-1, 2, -1, 2}};
  const Presentation closure = braid_closure_presentation(braid);
  const FiberedKnotData k = builtin_fibered("figure8");
  const Presentation torus = mapping_torus_presentation(k.rank, k.monodromy, 1);

  // determinant 5 is prime to 3: no nonconstant 3-coloring
  const FiniteGroup s3 = symmetric_group(3);
  REQUIRE(enumerate_homs(closure, s3).size() == 6);
  REQUIRE(enumerate_homs(torus, s3).size() == 6);

  const FiniteGroup c5 = cyclic_group(5);
  REQUIRE(enumerate_homs(closure, c5).size() == 5);
  REQUIRE(enumerate_homs(torus, c5).size() == 5);

  // 25 Fox 5-colorings, 20 of them nonconstant, plus 10 diagonal homs
  const FiniteGroup d5 = dihedral_group(5);
  REQUIRE(enumerate_homs(closure, d5).size() == 30);
  REQUIRE(enumerate_homs(torus, d5).size() == 30);
}

TEST_CASE("knot files parse") {
  const std::string text =
      "# genus one fibered knot\n"
      "fibered rank=2 mu=1 name=trefoil\n"
      "2\n"
      "2 -1\n";
  const FiberedKnotData k = parse_knot(text);
  REQUIRE(k.name == "trefoil");
  REQUIRE(k.rank == 2);
  REQUIRE(k.mu == 1);
  REQUIRE(k.monodromy == WordMap{{2}, {2, -1}});

  const FiberedKnotData bare = parse_knot("fibered rank=2\n2\n2 -1\n");
  REQUIRE(bare.name.empty());
  REQUIRE(bare.mu == 1);
}

TEST_CASE("malformed knot files are rejected") {
  REQUIRE_THROWS_AS(parse_knot(""), ParseError);
  REQUIRE_THROWS_AS(parse_knot("2\n2 -1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_knot("fibered mu=1\n2\n2 -1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_knot("fibered rank\n"), ParseError);
  REQUIRE_THROWS_AS(parse_knot("fibered rank=two\n"), ParseError);
  REQUIRE_THROWS_AS(parse_knot("fibered rank=2 genus=1\n2\n2 -1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_knot("fibered rank=2\n2\nx -1\n"), ParseError);
  // parses but fails monodromy validation
  REQUIRE_THROWS_AS(parse_knot("fibered rank=2\n1 2\n1 2\n"), ConsistencyError);
}
