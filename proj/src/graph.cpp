#include "lq/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lq {

SimpleGraph::SimpleGraph(std::size_t n) : adj_(n) {}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

SimpleGraph path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return SimpleGraph(n, edges);
}

SimpleGraph complete(std::size_t n) { return complement(SimpleGraph(n)); }

SimpleGraph complement(const SimpleGraph& g) {
  const auto n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex out of range");
  auto shift = [v](Vertex u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  return SimpleGraph(g.num_vertices() - 1, edges);
}

SimpleGraph antipath(std::size_t n) { return complement(path(n)); }
SimpleGraph anticycle(std::size_t n) { return complement(cycle(n)); }

MonomialIdeal edge_ideal(const SimpleGraph& g, RingPtr ring) {
  if (ring->num_vars() != g.num_vertices()) throw std::invalid_argument("ring size must equal vertex count");
  std::vector<Monomial> gens;
  gens.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) gens.push_back(Monomial::from_vars(ring, {u, v}));
  return minimalize(ring, gens);
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
  return edge_ideal(g, Ring::standard(std::max<std::size_t>(g.num_vertices(), 1)));
}

bool is_perfect_elimination_order(const SimpleGraph& g, const std::vector<Vertex>& order) {
  const auto n = g.num_vertices();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  // Each vertex's later neighbours must form a clique. It suffices that the
  // earliest of them is adjacent to all the others.
  for (auto v : order) {
    std::vector<Vertex> later;
    for (auto u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    if (later.size() < 2) continue;
    auto first = *std::min_element(later.begin(), later.end(),
                                   [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    for (auto u : later)
      if (u != first && !g.adjacent(first, u)) return false;
  }
  return true;
}

ChordalityResult chordality(const SimpleGraph& g) {
  const auto n = g.num_vertices();
  ChordalityResult result;
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  // O(n^2) selection is fine at the sizes this library targets.
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    visited[best] = true;
    result.mcs_order.push_back(best);
    for (auto u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  std::vector<Vertex> peo(result.mcs_order.rbegin(), result.mcs_order.rend());
  if (is_perfect_elimination_order(g, peo)) {
    result.chordal = true;
    result.elimination_order = std::move(peo);
  }
  return result;
}

bool is_chordal(const SimpleGraph& g) { return chordality(g).chordal; }

bool has_linear_resolution_by_froeberg(const SimpleGraph& g) { return is_chordal(complement(g)); }

AnticycleLabeling::AnticycleLabeling(std::size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("anticycle labeling needs n >= 2");
}

Vertex AnticycleLabeling::y(std::size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("y index out of range");
  return i + 1;
}

AnticycleRole AnticycleLabeling::role(Vertex v) const {
  if (v >= num_vertices()) throw std::out_of_range("vertex out of range");
  if (v == x()) return AnticycleRole::X;
  if (v == z1()) return AnticycleRole::Z1;
  if (v == z2()) return AnticycleRole::Z2;
  return AnticycleRole::Y;
}

std::size_t AnticycleLabeling::y_index(Vertex v) const {
  if (role(v) != AnticycleRole::Y) throw std::invalid_argument("vertex is not a y vertex");
  return v - 1;
}

std::string AnticycleLabeling::name(Vertex v) const {
  switch (role(v)) {
    case AnticycleRole::X: return "x";
    case AnticycleRole::Z1: return "z1";
    case AnticycleRole::Z2: return "z2";
    case AnticycleRole::Y: return "y" + std::to_string(y_index(v));
  }
  return {};
}

std::vector<std::string> AnticycleLabeling::names() const {
  std::vector<std::string> out;
  for (Vertex v = 0; v < num_vertices(); ++v) out.push_back(name(v));
  return out;
}

RingPtr AnticycleLabeling::ring() const { return Ring::make(names()); }

SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t max_vertex = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&] { throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": malformed"); };
    if (first == "n") {
      std::size_t count;
      if (!(ls >> count) || declared || !edges.empty()) fail();
      declared = count;
    } else {
      std::size_t u, v;
      std::istringstream fs(first);
      if (!(fs >> u) || !fs.eof() || !(ls >> v)) fail();
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u + 1, v + 1});
    }
    std::string rest;
    if (ls >> rest) fail();
  }
  const auto n = declared.value_or(max_vertex);
  return SimpleGraph(n, edges);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace lq
