#include "lq/orderings.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lq {

namespace {

// Walks every nondecreasing tuple of 2k path positions and keeps the ones
// with positions[r] + 2 <= positions[k + r].
void enumerate_antipath_tuples(std::size_t length, unsigned k, std::vector<std::size_t>& prefix,
                               std::vector<std::vector<std::size_t>>& out) {
  const std::size_t total = 2 * std::size_t{k};
  if (prefix.size() == total) {
    for (std::size_t r = 0; r < k; ++r)
      if (prefix[r] + 2 > prefix[k + r]) return;
    out.push_back(prefix);
    return;
  }
  const std::size_t start = prefix.empty() ? 0 : prefix.back();
  for (std::size_t p = start; p < length; ++p) {
    // Early cut: a j-slot must sit at least two past its i-slot.
    const std::size_t slot = prefix.size();
    if (slot >= k && prefix[slot - k] + 2 > p) continue;
    prefix.push_back(p);
    enumerate_antipath_tuples(length, k, prefix, out);
    prefix.pop_back();
  }
}

VarPriority path_first_priority(std::size_t num_vars, const std::vector<std::size_t>& path_vars) {
  std::vector<std::size_t> order = path_vars;
  std::vector<bool> used(num_vars, false);
  for (auto v : path_vars) used.at(v) = true;
  for (std::size_t v = 0; v < num_vars; ++v)
    if (!used[v]) order.push_back(v);
  return VarPriority(std::move(order));
}

std::vector<Monomial> parse_all(const RingPtr& ring, std::initializer_list<std::string_view> items) {
  std::vector<Monomial> out;
  out.reserve(items.size());
  for (auto s : items) out.push_back(parse_monomial(ring, s));
  return out;
}

}  // namespace

std::vector<Monomial> antipath_power_generators(std::size_t n, unsigned k) {
  if (n < 3) throw std::invalid_argument("antipath needs at least 3 vertices to have an edge");
  std::vector<std::size_t> path_vars(n);
  for (std::size_t i = 0; i < n; ++i) path_vars[i] = i;
  return antipath_power_generators(Ring::standard(n), path_vars, k);
}

std::vector<Monomial> antipath_power_generators(const RingPtr& ring, const std::vector<std::size_t>& path_vars,
                                                unsigned k) {
  if (k == 0) throw std::invalid_argument("power k must be at least 1");
  if (path_vars.size() < 3) throw std::invalid_argument("antipath needs at least 3 vertices to have an edge");
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> prefix;
  enumerate_antipath_tuples(path_vars.size(), k, prefix, tuples);

  std::vector<Monomial> gens;
  gens.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::vector<std::size_t> vars;
    vars.reserve(t.size());
    for (auto p : t) vars.push_back(path_vars[p]);
    gens.push_back(Monomial::from_vars(ring, vars));
  }
  // Sorted tuples are distinct multisets, so there is nothing to dedupe.
  std::sort(gens.begin(), gens.end(), LexLess{path_first_priority(ring->num_vars(), path_vars)});
  return gens;
}

std::string_view to_string(StageTag tag) {
  switch (tag) {
    case StageTag::S1: return "1";
    case StageTag::S2a: return "2a";
    case StageTag::S2b: return "2b";
    case StageTag::S2c: return "2c";
    case StageTag::S2d: return "2d";
    case StageTag::S3a: return "3a";
    case StageTag::S3b: return "3b";
  }
  return "?";
}

StagedOrdering anticycle_square_ordering(std::size_t n) {
  if (n < 2) throw std::invalid_argument("the staged ordering needs n >= 2");
  AnticycleLabeling lab(n);
  auto ring = lab.ring();
  const auto x = lab.x(), z1 = lab.z1(), z2 = lab.z2();
  auto y = [&](std::size_t i) { return lab.y(i); };

  StagedOrdering out{lab, ring, {}, {}};
  auto emit = [&](StageTag tag, std::vector<std::size_t> vars) {
    out.ordering.push_back(Monomial::from_vars(ring, vars));
    out.stages.push_back(tag);
  };

  // S1: the antipath H = G \ {x} runs along the cycle z1, y1, ..., yn, z2.
  std::vector<std::size_t> h_path{z1};
  for (std::size_t i = 1; i <= n; ++i) h_path.push_back(y(i));
  h_path.push_back(z2);
  for (auto& m : antipath_power_generators(ring, h_path, 2)) {
    out.ordering.push_back(std::move(m));
    out.stages.push_back(StageTag::S1);
  }

  for (std::size_t i = 1; i <= n; ++i) emit(StageTag::S2a, {x, y(i), z1, z2});

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (!(i == n && j == n)) emit(StageTag::S2b, {x, y(i), y(j), z2});

  for (std::size_t j = n; j >= 1; --j)
    for (std::size_t i = j; i >= 1; --i)
      if (!(i == 1 && j == 1)) emit(StageTag::S2c, {x, y(i), y(j), z1});

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k)
        if (i + 2 <= k) emit(StageTag::S2d, {x, y(i), y(j), y(k)});

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (!(i == 1 && j == 1)) emit(StageTag::S3a, {x, x, y(i), y(j)});

  emit(StageTag::S3b, {x, x, y(1), y(1)});
  return out;
}

namespace {

bool is_product_of_two_edges(const Monomial& m, const SimpleGraph& g) {
  if (degree(m) != 4) return false;
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < m.num_vars(); ++v)
    for (Exponent e = 0; e < m[v]; ++e) vars.push_back(v);
  // Three ways to split four factors into two pairs.
  static constexpr std::array<std::array<int, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& s : splits) {
    auto a = vars[s[0]], b = vars[s[1]], c = vars[s[2]], d = vars[s[3]];
    if (a != b && c != d && g.adjacent(a, b) && g.adjacent(c, d)) return true;
  }
  return false;
}

}  // namespace

StageTag classify_stage(const Monomial& m, const AnticycleLabeling& labeling) {
  if (m.num_vars() != labeling.num_vertices())
    throw std::invalid_argument("monomial ring does not match the anticycle labeling");
  if (!is_product_of_two_edges(m, labeling.graph()))
    throw std::invalid_argument(to_string(m) + " is not a generator of the square of the anticycle edge ideal");
  const auto ex = m[labeling.x()];
  const bool has_z1 = m[labeling.z1()] > 0;
  const bool has_z2 = m[labeling.z2()] > 0;
  if (ex == 0) return StageTag::S1;
  if (ex == 1) {
    if (has_z1 && has_z2) return StageTag::S2a;
    if (has_z2) return StageTag::S2b;
    if (has_z1) return StageTag::S2c;
    return StageTag::S2d;
  }
  const auto y1 = labeling.y(1);
  return m[y1] == 2 ? StageTag::S3b : StageTag::S3a;
}

CounterexampleFixture counterexample_fixture(FixtureOrder which) {
  auto ring = Ring::standard(6);
  CounterexampleFixture fx;
  if (which == FixtureOrder::Lex) {
    fx.ordering = parse_all(ring, {
        "x1^2*x3^2", "x1^2*x3*x4", "x1^2*x3*x5", "x1^2*x4^2", "x1^2*x4*x5", "x1^2*x5^2",
        "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x3*x6", "x1*x2*x4^2", "x1*x2*x4*x5", "x1*x2*x4*x6",
        "x1*x2*x5^2", "x1*x2*x5*x6", "x1*x3^2*x5", "x1*x3^2*x6", "x1*x3*x4*x5", "x1*x3*x4*x6",
        "x1*x3*x5^2", "x1*x3*x5*x6", "x1*x4^2*x6", "x1*x4*x5*x6", "x2^2*x4^2", "x2^2*x4*x5",
        "x2^2*x4*x6", "x2^2*x5^2", "x2^2*x5*x6", "x2^2*x6^2", "x2*x3*x4*x5", "x2*x3*x4*x6",
        "x2*x3*x5^2", "x2*x3*x5*x6", "x2*x3*x6^2", "x2*x4^2*x6", "x2*x4*x5*x6", "x2*x4*x6^2",
        "x3^2*x5^2", "x3^2*x5*x6", "x3^2*x6^2", "x3*x4*x5*x6", "x3*x4*x6^2", "x4^2*x6^2",
    });
    fx.failure_index = 9;
  } else {
    fx.ordering = parse_all(ring, {
        "x1^2*x3^2", "x1^2*x3*x4", "x1*x2*x3*x4", "x1^2*x4^2", "x1*x2*x4^2", "x2^2*x4^2",
        "x1^2*x3*x5", "x1*x2*x3*x5", "x1*x3^2*x5", "x1^2*x4*x5", "x1*x2*x4*x5", "x2^2*x4*x5",
        "x1*x3*x4*x5", "x2*x3*x4*x5", "x1^2*x5^2", "x1*x2*x5^2", "x2^2*x5^2", "x1*x3*x5^2",
        "x2*x3*x5^2", "x3^2*x5^2", "x1*x2*x3*x6", "x1*x3^2*x6", "x1*x2*x4*x6", "x2^2*x4*x6",
        "x1*x3*x4*x6", "x2*x3*x4*x6", "x1*x4^2*x6", "x2*x4^2*x6", "x1*x2*x5*x6", "x2^2*x5*x6",
        "x1*x3*x5*x6", "x2*x3*x5*x6", "x3^2*x5*x6", "x1*x4*x5*x6", "x2*x4*x5*x6", "x3*x4*x5*x6",
        "x2^2*x6^2", "x2*x3*x6^2", "x3^2*x6^2", "x2*x4*x6^2", "x3*x4*x6^2", "x4^2*x6^2",
    });
    fx.failure_index = 21;
  }
  fx.failure_colon = parse_all(ring, {"x1*x3", "x4", "x5"});
  return fx;
}

std::vector<Monomial> theorem_n3_fixture() {
  auto ring = AnticycleLabeling(3).ring();
  return parse_all(ring, {
      // (1)
      "z1^2*y2^2", "z1^2*y2*y3", "z1^2*y2*z2", "z1^2*y3^2", "z1^2*y3*z2", "z1^2*z2^2", "z1*y1*y2*y3",
      "z1*y1*y2*z2", "z1*y1*y3^2", "z1*y1*y3*z2", "z1*y1*z2^2", "z1*y2^2*z2", "z1*y2*y3*z2",
      "z1*y2*z2^2", "y1^2*y3^2", "y1^2*y3*z2", "y1^2*z2^2", "y1*y2*y3*z2", "y1*y2*z2^2", "y2^2*z2^2",
      // (2a)
      "x*z1*y1*z2", "x*z1*y2*z2", "x*z1*y3*z2",
      // (2b)
      "x*y1^2*z2", "x*y1*y2*z2", "x*y1*y3*z2", "x*y2^2*z2", "x*y2*y3*z2",
      // (2c)
      "x*z1*y3^2", "x*z1*y2*y3", "x*z1*y1*y3", "x*z1*y2^2", "x*z1*y1*y2",
      // (2d)
      "x*y1^2*y3", "x*y1*y2*y3", "x*y1*y3^2",
      // (3a)
      "x^2*y1*y2", "x^2*y1*y3", "x^2*y2^2", "x^2*y2*y3", "x^2*y3^2",
      // (3b)
      "x^2*y1^2",
  });
}

}  // namespace lq
