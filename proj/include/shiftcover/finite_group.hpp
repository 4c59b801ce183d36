#pragma once

#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"

namespace shiftcover {

// Apply q first, then p: (p*q)(i) = p(q(i)).
inline std::vector<int> compose_perms(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

// A finite group as its full multiplication table. Elements are indices
// 0..order-1 with the identity always at index 0. When the group was built
// from permutation generators the realizing permutations are kept for
// reference; they play no role in the algebra.
struct FiniteGroup {
  int order = 1;
  std::vector<int> table;  // order*order, row-major: table[a*order+b] = a*b
  std::vector<int> inverse_of;
  int perm_degree = 0;                        // 0 when no permutation realization kept
  std::vector<std::vector<int>> perm_images;  // element index -> permutation

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inverse(int a) const { return inverse_of[static_cast<std::size_t>(a)]; }
  // g x g^-1
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }

  int element_order(int x) const {
    int n = 1;
    int cur = x;
    while (cur != 0) {
      cur = mul(cur, x);
      ++n;
    }
    return n;
  }
};

namespace detail {

inline void validate_generator(const std::vector<int>& g, int degree) {
  if (static_cast<int>(g.size()) != degree)
    throw ParseError("permutation generator has " + std::to_string(g.size()) +
                     " images, expected " + std::to_string(degree));
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (int v : g) {
    if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
      throw ParseError("permutation generator is not a bijection on 0.." +
                       std::to_string(degree - 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Exhaustive table validation. Associativity costs order^3 and is checked
// only up to the stated bound; identity, inverses and cancellation are
// always checked.
inline void validate_table(const FiniteGroup& g, int assoc_bound = 200) {
  const int n = g.order;
  for (int x = 0; x < n; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      throw ConsistencyError("table element 0 is not a two-sided identity");
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(n), false), col(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      row[static_cast<std::size_t>(g.mul(a, b))] = true;
      col[static_cast<std::size_t>(g.mul(b, a))] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!row[static_cast<std::size_t>(v)] || !col[static_cast<std::size_t>(v)])
        throw ConsistencyError("table row or column " + std::to_string(a) +
                               " is not a permutation");
  }
  for (int a = 0; a < n; ++a) {
    const int b = g.inverse(a);
    if (g.mul(a, b) != 0 || g.mul(b, a) != 0)
      throw ConsistencyError("element " + std::to_string(a) + " has no two-sided inverse");
  }
  if (n <= assoc_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw ConsistencyError("table is not associative at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

}  // namespace detail

// Closes the generators under composition, breadth-first from the identity,
// generators applied in input order, new elements of each BFS level appended
// in lexicographic order of their permutation images. This fixes the element
// indexing deterministically. Throws LimitError past order_bound.
inline FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                           int order_bound = kDefaultGroupOrderBound) {
  if (degree < 1) throw ParseError("permutation degree must be at least 1");
  for (const auto& g : gens) detail::validate_generator(g, degree);

  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);

  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<int> level{0};
  while (!level.empty()) {
    std::set<std::vector<int>> fresh;
    for (int e : level)
      for (const auto& s : gens) {
        std::vector<int> c = compose_perms(elements[static_cast<std::size_t>(e)], s);
        if (!index.count(c)) fresh.insert(std::move(c));
      }
    level.clear();
    for (const auto& c : fresh) {
      if (static_cast<int>(elements.size()) >= order_bound)
        throw LimitError("group closure exceeds the order bound " + std::to_string(order_bound));
      const int idx = static_cast<int>(elements.size());
      index.emplace(c, idx);
      elements.push_back(c);
      level.push_back(idx);
    }
  }

  FiniteGroup g;
  g.order = static_cast<int>(elements.size());
  g.perm_degree = degree;
  g.perm_images = elements;
  g.table.resize(static_cast<std::size_t>(g.order) * g.order);
  g.inverse_of.resize(static_cast<std::size_t>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      auto it = index.find(compose_perms(elements[static_cast<std::size_t>(a)],
                                         elements[static_cast<std::size_t>(b)]));
      if (it == index.end()) throw ConsistencyError("closure is not closed; internal error");
      g.table[static_cast<std::size_t>(a) * g.order + b] = it->second;
    }
    g.inverse_of[static_cast<std::size_t>(a)] =
        index.at(invert_perm(elements[static_cast<std::size_t>(a)]));
  }
  return g;
}

inline FiniteGroup group_from_table(int order, const std::vector<int>& entries) {
  if (order < 1) throw ParseError("group order must be at least 1");
  if (static_cast<int>(entries.size()) != order * order)
    throw ParseError("multiplication table needs " + std::to_string(order * order) + " entries");
  for (int v : entries)
    if (v < 0 || v >= order) throw ParseError("table entry " + std::to_string(v) + " out of range");
  FiniteGroup g;
  g.order = order;
  g.table = entries;
  g.inverse_of.assign(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse_of[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (g.inverse_of[static_cast<std::size_t>(a)] < 0)
      throw ConsistencyError("element " + std::to_string(a) + " has no two-sided inverse");
  }
  detail::validate_table(g);
  return g;
}

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ParseError("cyclic(n) needs n >= 1");
  if (n == 1) return group_from_permutations(1, {});
  std::vector<int> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  return group_from_permutations(n, {rot});
}

// Order 2n. For n >= 3 this is the symmetry group of the n-gon; the
// degenerate small cases are realized as <(01)> and <(01),(23)>.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) throw ParseError("dihedral(n) needs n >= 1");
  if (n == 1) return group_from_permutations(2, {{1, 0}});
  if (n == 2) return group_from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return group_from_permutations(n, {rot, refl});
}

inline FiniteGroup symmetric_group(int n) {
  if (n < 1) throw ParseError("symmetric(n) needs n >= 1");
  if (n == 1) return group_from_permutations(1, {});
  std::vector<int> swap01(static_cast<std::size_t>(n)), rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    swap01[static_cast<std::size_t>(i)] = i;
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return group_from_permutations(n, {swap01, rot});
}

// Accepts "cyclic(n)", "dihedral(n)", "symmetric(n)".
inline FiniteGroup named_group(const std::string& spec) {
  const auto open = spec.find('(');
  const auto close = spec.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 1 != spec.size())
    throw ParseError("bad group name '" + spec + "', expected name(n)");
  const std::string name = spec.substr(0, open);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(open + 1, close - open - 1), &used);
    if (used != close - open - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad group parameter in '" + spec + "'");
  }
  if (name == "cyclic") return cyclic_group(n);
  if (name == "dihedral") return dihedral_group(n);
  if (name == "symmetric") return symmetric_group(n);
  throw ParseError("unknown group family '" + name + "'");
}

// Conjugacy data. Classes are numbered in order of their least element, so
// class 0 is always the class of the identity.
struct ConjClassTable {
  std::vector<int> class_of;          // element -> class id
  std::vector<int> representative;    // class id -> least element in the class
  std::vector<int> class_size;        // class id -> size
  std::vector<int> centralizer_order; // element -> |centralizer|
};

inline ConjClassTable conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order;
  ConjClassTable t;
  t.class_of.assign(static_cast<std::size_t>(n), -1);
  t.centralizer_order.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int cent = 0;
    for (int a = 0; a < n; ++a)
      if (g.mul(a, x) == g.mul(x, a)) ++cent;
    t.centralizer_order[static_cast<std::size_t>(x)] = cent;
    if (t.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int cls = static_cast<int>(t.representative.size());
    t.representative.push_back(x);
    int size = 0;
    for (int a = 0; a < n; ++a) {
      const int y = g.conjugate(a, x);
      if (t.class_of[static_cast<std::size_t>(y)] < 0) {
        t.class_of[static_cast<std::size_t>(y)] = cls;
        ++size;
      }
    }
    t.class_size.push_back(size);
  }
  return t;
}

// File format, '#' comment lines allowed:
//   perm <degree>          |   table <order>
//   <degree ints per line> |   <order rows of order ints>
// one line per generator.
inline FiniteGroup read_group(std::istream& in, int order_bound = kDefaultGroupOrderBound) {
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    header = line;
    break;
  }
  if (header.empty()) throw ParseError("empty group input");
  std::istringstream hs(header);
  std::string kind;
  long long count = 0;
  if (!(hs >> kind >> count)) throw ParseError("bad group header '" + header + "'");
  std::string extra;
  if (hs >> extra) throw ParseError("trailing tokens in group header '" + header + "'");

  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> row;
    int v = 0;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw ParseError("bad integer in group line '" + line + "'");
    rows.push_back(std::move(row));
  }

  if (kind == "perm") {
    if (count < 1) throw ParseError("bad permutation degree");
    return group_from_permutations(static_cast<int>(count), rows, order_bound);
  }
  if (kind == "table") {
    if (count < 1) throw ParseError("bad group order");
    if (count > order_bound)
      throw LimitError("group order exceeds the order bound " + std::to_string(order_bound));
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return group_from_table(static_cast<int>(count), flat);
  }
  throw ParseError("unknown group format '" + kind + "'");
}

inline FiniteGroup parse_group(const std::string& text, int order_bound = kDefaultGroupOrderBound) {
  std::istringstream in(text);
  return read_group(in, order_bound);
}

}  // namespace shiftcover
