#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/finite_group.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/presentation.hpp"
#include "shiftcover/transfer.hpp"

namespace shiftcover {

// Directed multigraph with hom-tuple vertex labels. The adjacency matrix
// follows the transfer matrix convention: adjacency(i, j) counts edges from
// vertex j to vertex i (columns index sources), so a graph built from a
// transfer matrix round-trips to exactly that matrix.
struct DirectedMultigraph {
  std::vector<Images> vertex_labels;
  IntMat adjacency;

  struct Edge {
    int from = 0;
    int to = 0;
    Images label;  // the total-space hom realizing the edge, when retained
  };
  std::vector<Edge> edges;
  bool has_edge_labels = false;
};

// Covering-space graph of a relative transfer matrix: one vertex per
// boundary hom, adjacency(w, v) parallel edges v -> w. When the matrix kept
// its per-hom edge records the edges carry them as labels, one edge per hom
// of the total space.
inline DirectedMultigraph graph_hat(const TransferMatrix& m) {
  if (m.theory != Theory::relative)
    throw ShapeError("the covering graph is built from a relative transfer matrix");
  require_endomorphism(m);
  DirectedMultigraph g;
  g.vertex_labels = m.col_basis;
  g.adjacency = m.entries;
  if (m.has_edges) {
    g.has_edge_labels = true;
    for (const TransferMatrix::EdgeRecord& e : m.edges)
      g.edges.push_back({e.col, e.row, e.total_hom});
  } else {
    for (std::size_t i = 0; i < g.adjacency.rows(); ++i)
      for (std::size_t j = 0; j < g.adjacency.cols(); ++j)
        for (Int c = 0; c < g.adjacency(i, j); ++c)
          g.edges.push_back({static_cast<int>(j), static_cast<int>(i), {}});
  }
  return g;
}

// Quotient by the conjugation action of G on vertex labels: vertices become
// orbits (labeled by their lexicographically least member), and the edge
// count from orbit [v] to orbit [w] sums the edge counts from the
// representative of [v] to every member of [w]. Well-defined because
// conjugation permutes edges along with endpoints.
inline DirectedMultigraph graph_folded(const DirectedMultigraph& g, const FiniteGroup& grp) {
  if (g.adjacency.rows() != g.adjacency.cols() ||
      g.adjacency.rows() != g.vertex_labels.size())
    throw ShapeError("folding needs a square labeled multigraph");
  const std::vector<std::vector<int>> orbits = hom_classes(g.vertex_labels, grp);
  std::vector<int> orbit_of(g.vertex_labels.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int idx : orbits[o]) orbit_of[static_cast<std::size_t>(idx)] = static_cast<int>(o);

  DirectedMultigraph folded;
  for (const auto& orbit : orbits)
    folded.vertex_labels.push_back(g.vertex_labels[static_cast<std::size_t>(orbit.front())]);
  folded.adjacency = IntMat(orbits.size(), orbits.size());
  for (std::size_t src = 0; src < orbits.size(); ++src) {
    const std::size_t rep = static_cast<std::size_t>(orbits[src].front());
    for (std::size_t w = 0; w < g.vertex_labels.size(); ++w)
      folded.adjacency(static_cast<std::size_t>(orbit_of[w]), src) += g.adjacency(w, rep);
  }
  for (std::size_t i = 0; i < folded.adjacency.rows(); ++i)
    for (std::size_t j = 0; j < folded.adjacency.cols(); ++j)
      for (Int c = 0; c < folded.adjacency(i, j); ++c)
        folded.edges.push_back({static_cast<int>(j), static_cast<int>(i), {}});
  return folded;
}

// Deterministic DOT output: vertices in basis order, one line per edge.
inline void write_dot(std::ostream& out, const DirectedMultigraph& g,
                      const std::string& name = "cover") {
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t v = 0; v < g.vertex_labels.size(); ++v)
    out << "  v" << v << " [label=\"" << format_images(g.vertex_labels[v]) << "\"];\n";
  std::vector<DirectedMultigraph::Edge> edges = g.edges;
  std::stable_sort(edges.begin(), edges.end(),
                   [](const DirectedMultigraph::Edge& a, const DirectedMultigraph::Edge& b) {
                     return std::pair(a.from, a.to) < std::pair(b.from, b.to);
                   });
  for (const auto& e : edges) {
    out << "  v" << e.from << " -> v" << e.to;
    if (g.has_edge_labels) out << " [label=\"" << format_images(e.label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace shiftcover
