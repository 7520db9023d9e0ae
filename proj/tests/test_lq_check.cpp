#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lq/graph.hpp"
#include "lq/lq_check.hpp"
#include "lq/orderings.hpp"
#include "theorem_cases.hpp"

using namespace lq;

namespace {

std::vector<Monomial> parse_list(const RingPtr& ring, std::initializer_list<std::string_view> items) {
  std::vector<Monomial> out;
  for (auto s : items) out.push_back(parse_monomial(ring, s));
  return out;
}

// Naive checker: take every m_j : m_i, drop the ones divisible by another,
// and require what is left to be variables.
bool naive_has_lq(const std::vector<Monomial>& ms) {
  for (std::size_t i = 1; i < ms.size(); ++i) {
    std::vector<Monomial> quotients;
    for (std::size_t j = 0; j < i; ++j) quotients.push_back(colon(ms[j], ms[i]));
    for (const auto& q : quotients) {
      bool minimal = true;
      for (const auto& p : quotients)
        if (!(p == q) && divides(p, q)) minimal = false;
      if (minimal && degree(q) != 1) return false;
    }
  }
  return true;
}

// Betti oracle from the Hilbert series: with H_I(t) = sum_D dim(I_D) t^D,
// K(t) = H_I(t) (1 - t)^N = sum_{i,j} (-1)^i beta_{i,j} t^j. For a linear
// resolution each j carries a single i = j - d, so beta_{i,i+d} = (-1)^i [t^{i+d}] K.
std::vector<long long> hilbert_numerator(const MonomialIdeal& ideal, std::size_t top) {
  const std::size_t nv = ideal.ring()->num_vars();
  std::vector<long long> dims(top + 1, 0);
  std::vector<Exponent> e(nv, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left,
                                                                       std::size_t total) {
    if (v + 1 == nv) {
      e[v] = static_cast<Exponent>(left);
      if (ideal.contains(Monomial(ideal.ring(), e))) ++dims[total];
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      e[v] = static_cast<Exponent>(a);
      rec(v + 1, left - a, total);
    }
  };
  for (std::size_t d = 0; d <= top; ++d) rec(0, d, d);
  // Multiply by (1 - t)^N, truncated at degree `top`.
  for (std::size_t k = 0; k < nv; ++k)
    for (std::size_t j = top; j >= 1; --j) dims[j] -= dims[j - 1];
  return dims;
}

void check_betti_against_hilbert(const MonomialIdeal& ideal, const std::vector<Monomial>& ordering) {
  auto verdict = verify_ordering(ordering);
  REQUIRE(accepted(verdict));
  auto table = betti_from_lq(std::get<LqCertificate>(verdict));
  const std::size_t d = table.generator_degree();
  const std::size_t nv = ideal.ring()->num_vars();
  auto k = hilbert_numerator(ideal, d + nv);
  for (std::size_t j = 0; j < d; ++j) CHECK(k[j] == 0);
  for (std::size_t i = 0; i + d <= d + nv; ++i) {
    long long expected = (i % 2 ? -1 : 1) * k[i + d];
    CHECK(static_cast<long long>(table(i, i + d)) == expected);
  }
}

}  // namespace

TEST_CASE("printed counterexample orderings fail where expected") {
  for (auto which : {FixtureOrder::Lex, FixtureOrder::Revlex}) {
    auto fx = counterexample_fixture(which);
    auto ring = fx.ordering.front().ring();
    CHECK(fx.failure_index == (which == FixtureOrder::Lex ? 9u : 21u));
    CHECK(to_string(fx.ordering[fx.failure_index - 1]) == "x1*x2*x3*x6");
    auto verdict = verify_ordering(fx.ordering);
    REQUIRE_FALSE(accepted(verdict));
    const auto& f = std::get<LqFailure>(verdict);
    CHECK(f.index == fx.failure_index);
    CHECK(f.colon.gens() == parse_list(ring, {"x1*x3", "x4", "x5"}));
    CHECK(f.colon.gens() == fx.failure_colon);
    CHECK(f.witnesses == parse_list(ring, {"x1*x3"}));
    CHECK_FALSE(naive_has_lq(fx.ordering));
    auto failures = all_failures(fx.ordering);
    REQUIRE_FALSE(failures.empty());
    CHECK(failures.front().index == fx.failure_index);
  }
}

TEST_CASE("single generator and trivial inputs") {
  auto ring = Ring::standard(3);
  auto one = parse_list(ring, {"x1*x2"});
  auto v = verify_ordering(one);
  REQUIRE(accepted(v));
  CHECK(std::get<LqCertificate>(v).colon_vars.empty());
  auto t = betti_from_lq(std::get<LqCertificate>(v));
  CHECK(t(0, 2) == 1);
  CHECK(t(1, 3) == 0);
  CHECK(t.length() == 1);
  CHECK_THROWS_AS(verify_ordering(parse_list(ring, {"x1", "x1*x2"})), InvalidOrdering);
  CHECK_THROWS_AS(verify_ordering(parse_list(ring, {"x1", "x1"})), InvalidOrdering);
}

TEST_CASE("pairwise criterion") {
  auto thm = theorem_n3_fixture();
  CHECK(verify_pairwise(thm).ok);
  auto lex = counterexample_fixture(FixtureOrder::Lex);
  auto p = verify_pairwise(lex.ordering);
  CHECK_FALSE(p.ok);
  REQUIRE(p.violation);
  // x1^2*x3^2 : x1*x2*x3*x6 = x1*x3, and no earlier quotient is a variable dividing it.
  CHECK(*p.violation == std::pair<std::size_t, std::size_t>{1, 9});
  auto rev = verify_pairwise(counterexample_fixture(FixtureOrder::Revlex).ordering);
  REQUIRE(rev.violation);
  CHECK(rev.violation->second == 21);
}

TEST_CASE("both checkers agree with the naive checker on random orderings") {
  std::mt19937 rng(31);
  int accepted_count = 0, rejected_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 4;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    auto ideal = power(edge_ideal(SimpleGraph(n, edges)), 1 + rng() % 2);
    auto ms = ideal.gens();
    std::shuffle(ms.begin(), ms.end(), rng);
    bool naive = naive_has_lq(ms);
    CHECK(accepted(verify_ordering(ms)) == naive);
    CHECK(verify_pairwise(ms).ok == naive);
    CHECK(all_failures(ms).empty() == naive);
    (naive ? accepted_count : rejected_count)++;
  }
  CHECK(accepted_count > 10);
  CHECK(rejected_count > 10);
}

TEST_CASE("certificate invariants") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto ms = anticycle_square_ordering(n).ordering;
    auto v = verify_ordering(ms);
    REQUIRE(accepted(v));
    const auto& cert = std::get<LqCertificate>(v);
    REQUIRE(cert.colon_vars.size() + 1 == ms.size());
    for (std::size_t i = 1; i < ms.size(); ++i) {
      const auto& vars = cert.colon_vars[i - 1];
      CHECK(std::is_sorted(vars.begin(), vars.end()));
      CHECK_FALSE(vars.empty());
      for (auto var : vars) {
        bool realized = false;
        for (std::size_t k = 0; k < i && !realized; ++k) {
          auto q = colon(ms[k], ms[i]);
          realized = q.is_variable() && q.variable_index() == var;
        }
        CHECK(realized);
      }
      for (std::size_t k = 0; k < i; ++k) {
        auto q = colon(ms[k], ms[i]);
        CHECK(std::any_of(vars.begin(), vars.end(), [&](std::size_t var) { return q[var] > 0; }));
      }
    }
    CHECK(cert.var_counts().size() == ms.size() - 1);
  }
}

TEST_CASE("Betti numbers from linear quotients") {
  auto a6sq = power(edge_ideal(anticycle(6)), 2);
  auto thm = theorem_n3_fixture();
  auto t = betti_from_lq(std::get<LqCertificate>(verify_ordering(thm)));
  CHECK(t.generator_degree() == 4);
  CHECK(t(0, 4) == 42);
  CHECK(t(1, 4) == 0);
  CHECK(t(0, 5) == 0);
  CHECK(t.length() <= 6);
  CHECK(betti_from_lq(std::get<LqCertificate>(verify_ordering(anticycle_square_ordering(3).ordering))) == t);

  auto ring = Ring::standard(3);
  CHECK_THROWS_AS(betti_from_lq(LqCertificate{parse_list(ring, {"x1", "x2*x3"}), {{0}}}), std::invalid_argument);
  CHECK_THROWS_AS(betti_from_lq(LqCertificate{}), std::invalid_argument);
}

TEST_CASE("Betti numbers match the Hilbert series oracle") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto staged = anticycle_square_ordering(n);
    check_betti_against_hilbert(power(edge_ideal(staged.labeling.graph(), staged.ring), 2), staged.ordering);
  }
  // Antipath powers use the lex order of the closed form.
  for (std::size_t n = 4; n <= 6; ++n)
    check_betti_against_hilbert(power(edge_ideal(antipath(n)), 2), antipath_power_generators(n, 2));
}

TEST_CASE("colon ideals match the case tables") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto report = testing::check_case_tables(n);
    CHECK(report.checked > 0);
    for (const auto& p : report.problems) FAIL_CHECK(p);
  }
}
