#ifndef LQ_GRAPH_HPP
#define LQ_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lq/ideal.hpp"

namespace lq {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
  explicit SimpleGraph(std::size_t n);
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  /// Sorted, each pair (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

SimpleGraph path(std::size_t n);
SimpleGraph cycle(std::size_t n);
SimpleGraph complete(std::size_t n);
SimpleGraph complement(const SimpleGraph& g);
/// Removes `v`; the remaining vertices keep their relative order.
SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v);
SimpleGraph antipath(std::size_t n);
SimpleGraph anticycle(std::size_t n);

/// Edge ideal over `ring` (vertex i <-> variable i).
MonomialIdeal edge_ideal(const SimpleGraph& g, RingPtr ring);
/// Edge ideal over x1..xn.
MonomialIdeal edge_ideal(const SimpleGraph& g);

struct ChordalityResult {
  bool chordal = false;
  /// Maximum cardinality search visit order. Reversed, it is a perfect
  /// elimination ordering whenever the graph is chordal.
  std::vector<Vertex> mcs_order;
  /// Perfect elimination ordering (present iff chordal).
  std::optional<std::vector<Vertex>> elimination_order;
};

ChordalityResult chordality(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);
/// True iff `order` is a perfect elimination ordering of `g`.
bool is_perfect_elimination_order(const SimpleGraph& g, const std::vector<Vertex>& order);

/// I(G) has a linear resolution iff the complement of G is chordal.
bool has_linear_resolution_by_froeberg(const SimpleGraph& g);

enum class AnticycleRole { X, Z1, Y, Z2 };

/// Role names for the anticycle on n+3 vertices.
///
/// Cycle order is x, z1, y1, ..., yn, z2 (and back to x), so vertex 0 is x,
/// vertex 1 is z1, vertices 2..n+1 are y1..yn and vertex n+2 is z2. In the
/// anticycle x is adjacent to exactly the y's, while z1, z2 are its two
/// non-neighbours.
class AnticycleLabeling {
public:
  explicit AnticycleLabeling(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t num_vertices() const { return n_ + 3; }

  Vertex x() const { return 0; }
  Vertex z1() const { return 1; }
  /// 1-based y index, y(1)..y(n).
  Vertex y(std::size_t i) const;
  Vertex z2() const { return n_ + 2; }

  AnticycleRole role(Vertex v) const;
  /// For a y vertex, its 1-based index.
  std::size_t y_index(Vertex v) const;
  std::string name(Vertex v) const;
  std::vector<std::string> names() const;

  SimpleGraph graph() const { return anticycle(num_vertices()); }
  RingPtr ring() const;

private:
  std::size_t n_;
};

/// Reads `u v` lines (0-based) with an optional `n <count>` header; `#` starts a comment.
SimpleGraph parse_edge_list(const std::string& text);
std::string format_edge_list(const SimpleGraph& g);

}  // namespace lq

#endif  // LQ_GRAPH_HPP
