#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "shiftcover/finite_group.hpp"

using namespace shiftcover;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const int n = g.order;
  for (int x = 0; x < n; ++x) {
    REQUIRE(g.mul(0, x) == x);
    REQUIRE(g.mul(x, 0) == x);
    REQUIRE(g.mul(x, g.inverse(x)) == 0);
    REQUIRE(g.mul(g.inverse(x), x) == 0);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

}  // namespace

TEST_CASE("named group orders") {
  REQUIRE(cyclic_group(1).order == 1);
  REQUIRE(cyclic_group(8).order == 8);
  REQUIRE(dihedral_group(1).order == 2);
  REQUIRE(dihedral_group(2).order == 4);
  REQUIRE(dihedral_group(4).order == 8);
  REQUIRE(symmetric_group(1).order == 1);
  REQUIRE(symmetric_group(4).order == 24);
  REQUIRE(named_group("symmetric(3)").order == 6);
  REQUIRE_THROWS_AS(named_group("alternating(4)"), ParseError);
  REQUIRE_THROWS_AS(named_group("cyclic(x)"), ParseError);
  REQUIRE_THROWS_AS(named_group("cyclic(3"), ParseError);
}

TEST_CASE("group axioms hold for the named families") {
  check_group_axioms(cyclic_group(6));
  check_group_axioms(dihedral_group(2));
  check_group_axioms(dihedral_group(5));
  check_group_axioms(symmetric_group(3));
  check_group_axioms(symmetric_group(4));
}

TEST_CASE("identity is element 0 and BFS indexing is deterministic") {
  const FiniteGroup s3 = symmetric_group(3);
  std::vector<int> id{0, 1, 2};
  REQUIRE(s3.perm_images[0] == id);
  // regenerating gives the same tables
  const FiniteGroup again = symmetric_group(3);
  REQUIRE(again.table == s3.table);
  REQUIRE(again.perm_images == s3.perm_images);
}

TEST_CASE("element orders in cyclic(6)") {
  const FiniteGroup c6 = cyclic_group(6);
  std::multiset<int> orders;
  for (int x = 0; x < 6; ++x) orders.insert(c6.element_order(x));
  REQUIRE(orders == std::multiset<int>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("symmetric(3) conjugacy data") {
  const FiniteGroup s3 = symmetric_group(3);
  const ConjClassTable t = conjugacy_classes(s3);
  REQUIRE(t.representative.size() == 3);
  std::multiset<int> sizes(t.class_size.begin(), t.class_size.end());
  REQUIRE(sizes == std::multiset<int>{1, 2, 3});
  REQUIRE(t.class_of[0] == 0);
  REQUIRE(t.class_size[0] == 1);
  // centralizer orders: 6 for the identity, 2 per transposition, 3 per 3-cycle
  std::multiset<int> cents(t.centralizer_order.begin(), t.centralizer_order.end());
  REQUIRE(cents == std::multiset<int>{6, 2, 2, 2, 3, 3});
  // class equation: sizes sum to the order, size * centralizer = order
  REQUIRE(std::accumulate(t.class_size.begin(), t.class_size.end(), 0) == 6);
  for (int x = 0; x < 6; ++x)
    REQUIRE(t.class_size[t.class_of[x]] * t.centralizer_order[x] == 6);
}

TEST_CASE("dihedral(4) conjugacy classes") {
  const ConjClassTable t = conjugacy_classes(dihedral_group(4));
  REQUIRE(t.representative.size() == 5);
  std::multiset<int> sizes(t.class_size.begin(), t.class_size.end());
  REQUIRE(sizes == std::multiset<int>{1, 1, 2, 2, 2});
}

TEST_CASE("abelian groups are all singleton classes") {
  const FiniteGroup c5 = cyclic_group(5);
  const ConjClassTable t = conjugacy_classes(c5);
  REQUIRE(t.representative.size() == 5);
  for (int s : t.class_size) REQUIRE(s == 1);
  for (int c : t.centralizer_order) REQUIRE(c == 5);
}

TEST_CASE("permutation group from explicit generators") {
  // <(01), (23)> inside S4: Klein four group
  const FiniteGroup v4 = group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  REQUIRE(v4.order == 4);
  for (int x = 0; x < 4; ++x) REQUIRE(v4.mul(x, x) == 0);
}

TEST_CASE("order bound enforced") {
  std::vector<int> rot(60);
  for (int i = 0; i < 60; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % 60;
  REQUIRE_THROWS_AS(group_from_permutations(60, {rot}, 50), LimitError);
  REQUIRE(group_from_permutations(60, {rot}, 60).order == 60);
}

TEST_CASE("group file formats") {
  const FiniteGroup perm = parse_group("# comment\nperm 3\n1 0 2\n1 2 0\n");
  REQUIRE(perm.order == 6);
  const FiniteGroup c3 = parse_group("table 3\n0 1 2\n1 2 0\n2 0 1\n");
  REQUIRE(c3.order == 3);
  REQUIRE(c3.mul(1, 2) == 0);
  const FiniteGroup trivial = parse_group("perm 1\n");
  REQUIRE(trivial.order == 1);
}

TEST_CASE("bad group files are rejected") {
  REQUIRE_THROWS_AS(parse_group(""), ParseError);
  REQUIRE_THROWS_AS(parse_group("perm 3\n1 0 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group("perm 3\n1 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group("table 2\n0 1\n1 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_group("grid 2\n0 1\n1 0\n"), ParseError);
  // latin square with identity but not associative: exists at order 5
  REQUIRE_THROWS_AS(parse_group("table 5\n"
                                "0 1 2 3 4\n"
                                "1 0 3 4 2\n"
                                "2 4 0 1 3\n"
                                "3 2 4 0 1\n"
                                "4 3 1 2 0\n"),
                    ConsistencyError);
  // identity not at index 0
  REQUIRE_THROWS_AS(parse_group("table 2\n1 0\n0 1\n"), ConsistencyError);
}
