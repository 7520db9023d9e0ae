#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lq/graph.hpp"
#include "lq/ideal.hpp"
#include "lq/lq_check.hpp"
#include "lq/orderings.hpp"

using namespace lq;

namespace {

std::set<std::vector<Exponent>> exponent_set(const std::vector<Monomial>& ms) {
  std::set<std::vector<Exponent>> out;
  for (const auto& m : ms) out.insert(m.exponents());
  return out;
}

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Can `m` be split into k edges of the antipath on n vertices (|u - v| >= 2)?
bool factors_into_antipath_edges(std::vector<Exponent> m, unsigned k) {
  if (k == 0) return std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 2; v < m.size(); ++v)
      if (m[u] && m[v]) {
        --m[u], --m[v];
        if (factors_into_antipath_edges(m, k - 1)) return true;
        ++m[u], ++m[v];
      }
  return false;
}

}  // namespace

TEST_CASE("antipath power generators: examples") {
  auto g = antipath_power_generators(4, 2);
  CHECK(g.size() == 6);
  CHECK(to_string(g.front()) == "x1^2*x3^2");
  for (std::size_t n = 3; n <= 9; ++n) CHECK(antipath_power_generators(n, 1).size() == choose(n, 2) - (n - 1));
  auto ring = Ring::standard(4);
  CHECK_FALSE(minimalize(g).contains(parse_monomial(ring, "x2^2*x3^2")));
  auto g6 = minimalize(antipath_power_generators(6, 2));
  CHECK(g6.contains(parse_monomial(Ring::standard(6), "x1^2*x3^2")));
  CHECK_FALSE(g6.contains(parse_monomial(Ring::standard(6), "x2^2*x3^2")));
  CHECK_THROWS_AS(antipath_power_generators(2, 2), std::invalid_argument);
}

TEST_CASE("closed form matches brute force powers") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      auto closed = antipath_power_generators(n, k);
      auto brute = power(edge_ideal(antipath(n)), k);
      CHECK(exponent_set(closed) == exponent_set(brute.gens()));
      CHECK(std::is_sorted(closed.begin(), closed.end(), LexLess{VarPriority::identity(n)}));
      for (const auto& m : closed) CHECK(factors_into_antipath_edges(m.exponents(), k));
    }
  }
}

TEST_CASE("staged ordering for n = 3 equals the printed data") {
  auto staged = anticycle_square_ordering(3);
  auto printed = theorem_n3_fixture();
  CHECK(staged.ordering == printed);
  CHECK(staged.ring->var_names() == std::vector<std::string>{"x", "z1", "y1", "y2", "y3", "z2"});
}

TEST_CASE("stage sizes") {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto staged = anticycle_square_ordering(n);
    std::map<StageTag, std::size_t> sizes;
    for (auto t : staged.stages) ++sizes[t];
    // Multisets {i <= j} of y indices, and {i <= j <= k} with k - i >= 2.
    const std::size_t pairs = choose(n + 1, 2);
    std::size_t triples = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        for (std::size_t k = j; k <= n; ++k) triples += (i + 2 <= k);
    CHECK(sizes[StageTag::S1] == antipath_power_generators(n + 2, 2).size());
    CHECK(sizes[StageTag::S2a] == n);
    CHECK(sizes[StageTag::S2b] == pairs - 1);
    CHECK(sizes[StageTag::S2c] == pairs - 1);
    CHECK(sizes[StageTag::S2d] == triples);
    CHECK(sizes[StageTag::S3a] == pairs - 1);
    CHECK(sizes[StageTag::S3b] == 1);
  }
  std::map<StageTag, std::size_t> n3;
  for (auto t : anticycle_square_ordering(3).stages) ++n3[t];
  CHECK(n3[StageTag::S1] == 20);
  CHECK(n3[StageTag::S2d] == 3);
}

TEST_CASE("staged ordering is the full generating set and has linear quotients") {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto staged = anticycle_square_ordering(n);
    auto brute = power(edge_ideal(staged.labeling.graph(), staged.ring), 2);
    CHECK(staged.ordering.size() == brute.size());
    CHECK(exponent_set(staged.ordering) == exponent_set(brute.gens()));
    CHECK(staged.stages.size() == staged.ordering.size());
    CHECK(accepted(verify_ordering(staged.ordering)));
  }
}

TEST_CASE("stage classification") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto staged = anticycle_square_ordering(n);
    for (std::size_t i = 0; i < staged.ordering.size(); ++i)
      CHECK(classify_stage(staged.ordering[i], staged.labeling) == staged.stages[i]);
    // Stages appear as contiguous blocks in the listed order.
    CHECK(std::is_sorted(staged.stages.begin(), staged.stages.end()));
  }
  AnticycleLabeling lab(3);
  auto ring = lab.ring();
  CHECK(classify_stage(parse_monomial(ring, "x^2*y1^2"), lab) == StageTag::S3b);
  CHECK(classify_stage(parse_monomial(ring, "x^2*y2*y3"), lab) == StageTag::S3a);
  CHECK(classify_stage(parse_monomial(ring, "x*y1*z1*z2"), lab) == StageTag::S2a);
  CHECK(classify_stage(parse_monomial(ring, "x*z1*y2*z2"), lab) == StageTag::S2a);
  CHECK(classify_stage(parse_monomial(ring, "z1^2*z2^2"), lab) == StageTag::S1);
  CHECK(classify_stage(parse_monomial(ring, "x*y1*y3*y3"), lab) == StageTag::S2d);
  CHECK(classify_stage(parse_monomial(ring, "z1^2*y2^2"), lab) == StageTag::S1);
  CHECK(classify_stage(parse_monomial(ring, "x*z1*y2*y3"), lab) == StageTag::S2c);
  CHECK_THROWS_AS(classify_stage(parse_monomial(ring, "x^2*z1*z2"), lab), std::invalid_argument);
  CHECK_THROWS_AS(classify_stage(parse_monomial(ring, "x*y1"), lab), std::invalid_argument);
  CHECK(to_string(StageTag::S2c) == "2c");
}

TEST_CASE("counterexample fixtures") {
  auto lex = counterexample_fixture(FixtureOrder::Lex);
  auto rev = counterexample_fixture(FixtureOrder::Revlex);
  CHECK(lex.ordering.size() == 42);
  CHECK(rev.ordering.size() == 42);
  CHECK(exponent_set(lex.ordering) == exponent_set(rev.ordering));
  CHECK(lex.ordering != rev.ordering);
  auto sq = power(edge_ideal(anticycle(6)), 2);
  CHECK(exponent_set(lex.ordering) == exponent_set(sq.gens()));
}
