#include "lq/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lq {

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> minimal_sorted)
    : ring_(std::move(ring)), gens_(std::move(minimal_sorted)) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> ms) {
  for (const auto& m : ms)
    if (!same_ring(m.ring(), ring)) throw RingMismatch();

  // A divisor of m has degree <= deg(m), with equality only for m itself,
  // so after sorting by degree each candidate is tested against strictly
  // smaller survivors only.
  std::vector<std::pair<std::size_t, const Monomial*>> by_degree;
  by_degree.reserve(ms.size());
  for (const auto& m : ms) by_degree.emplace_back(degree(m), &m);
  const LexLess lex{VarPriority::identity(ring->num_vars())};
  std::sort(by_degree.begin(), by_degree.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex(*a.second, *b.second);
  });

  std::vector<Monomial> kept;
  std::size_t lower_end = 0;  // kept[0, lower_end) have degree < current
  std::size_t current_degree = 0;
  for (std::size_t idx = 0; idx < by_degree.size(); ++idx) {
    const auto& [deg, m] = by_degree[idx];
    if (idx == 0 || deg != current_degree) {
      lower_end = kept.size();
      current_degree = deg;
    }
    if (lower_end < kept.size() && kept.back() == *m) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < lower_end && !dominated; ++j) dominated = divides(kept[j], *m);
    if (!dominated) kept.push_back(*m);
  }
  std::sort(kept.begin(), kept.end(), lex);
  return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal minimalize(std::span<const Monomial> ms) {
  if (ms.empty()) throw std::invalid_argument("cannot infer the ring of an empty list");
  return minimalize(ms.front().ring(), ms);
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw std::invalid_argument("power k must be at least 1");
  MonomialIdeal acc = ideal;
  for (unsigned round = 1; round < k; ++round) {
    std::vector<Monomial> products;
    products.reserve(acc.size() * ideal.size());
    for (const auto& a : acc.gens())
      for (const auto& g : ideal.gens()) products.push_back(mul(a, g));
    acc = minimalize(ideal.ring(), products);
  }
  return acc;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  return colon_by_monomial(ideal.ring(), ideal.gens(), m);
}

MonomialIdeal colon_by_monomial(const RingPtr& ring, std::span<const Monomial> gens, const Monomial& m) {
  if (!same_ring(ring, m.ring())) throw RingMismatch();
  std::vector<Monomial> quotients;
  quotients.reserve(gens.size());
  for (const auto& g : gens) quotients.push_back(colon(g, m));
  return minimalize(ring, quotients);
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  return a.gens() == b.gens();
}

}  // namespace lq
