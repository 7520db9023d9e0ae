#include "lq/lq_check.hpp"

#include <algorithm>

namespace lq {

std::vector<std::size_t> LqCertificate::var_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(colon_vars.size());
  for (const auto& vars : colon_vars) counts.push_back(vars.size());
  return counts;
}

void require_minimal_generators(std::span<const Monomial> ms) {
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = 0; b < ms.size(); ++b) {
      if (a == b) continue;
      if (!same_ring(ms[a].ring(), ms[b].ring())) throw RingMismatch();
      if (divides(ms[a], ms[b])) {
        const bool dup = ms[a] == ms[b];
        throw InvalidOrdering((dup ? "duplicate generator " : "generator ") + to_string(ms[a]) +
                              (dup ? "" : " divides " + to_string(ms[b])));
      }
    }
  }
}

namespace {

// Minimal generators of (m_1..m_{i-1}) : (m_i), with i 0-based here.
MonomialIdeal prefix_colon(std::span<const Monomial> ms, std::size_t i) {
  return colon_by_monomial(ms[i].ring(), ms.first(i), ms[i]);
}

std::vector<Monomial> nonlinear(const MonomialIdeal& q) {
  std::vector<Monomial> out;
  for (const auto& g : q.gens())
    if (!g.is_variable()) out.push_back(g);
  return out;
}

}  // namespace

LqVerdict verify_ordering(std::span<const Monomial> ms) {
  require_minimal_generators(ms);
  LqCertificate cert;
  cert.ordering.assign(ms.begin(), ms.end());
  for (std::size_t i = 1; i < ms.size(); ++i) {
    auto q = prefix_colon(ms, i);
    auto bad = nonlinear(q);
    if (!bad.empty()) return LqFailure{i + 1, std::move(q), std::move(bad)};
    std::vector<std::size_t> vars;
    vars.reserve(q.size());
    for (const auto& g : q.gens()) vars.push_back(g.variable_index());
    std::sort(vars.begin(), vars.end());
    cert.colon_vars.push_back(std::move(vars));
  }
  return cert;
}

std::vector<LqFailure> all_failures(std::span<const Monomial> ms) {
  require_minimal_generators(ms);
  std::vector<LqFailure> out;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    auto q = prefix_colon(ms, i);
    auto bad = nonlinear(q);
    if (!bad.empty()) out.push_back(LqFailure{i + 1, std::move(q), std::move(bad)});
  }
  return out;
}

PairwiseResult verify_pairwise(std::span<const Monomial> ms) {
  require_minimal_generators(ms);
  std::vector<Monomial> quotients;
  std::vector<bool> linear_var;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    quotients.clear();
    linear_var.assign(ms[i].num_vars(), false);
    for (std::size_t j = 0; j < i; ++j) {
      quotients.push_back(colon(ms[j], ms[i]));
      if (quotients.back().is_variable()) linear_var[quotients.back().variable_index()] = true;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = quotients[j];
      if (q.is_variable()) continue;
      bool covered = false;
      for (std::size_t v = 0; v < q.num_vars() && !covered; ++v) covered = linear_var[v] && q[v] > 0;
      if (!covered) return PairwiseResult{false, std::make_pair(j + 1, i + 1)};
    }
  }
  return PairwiseResult{};
}

std::uint64_t BettiTable::operator()(std::size_t i, std::size_t j) const {
  if (j != i + degree_ || i >= strand_.size()) return 0;
  return strand_[i];
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

BettiTable betti_from_lq(const LqCertificate& cert) {
  if (cert.ordering.empty()) throw std::invalid_argument("betti table of the zero ideal is empty");
  if (cert.colon_vars.size() + 1 != cert.ordering.size())
    throw std::invalid_argument("certificate has the wrong number of colon entries");
  const auto d = degree(cert.ordering.front());
  for (const auto& m : cert.ordering)
    if (degree(m) != d) throw std::invalid_argument("generators must all have the same degree");

  std::vector<std::size_t> r{0};
  for (auto c : cert.var_counts()) r.push_back(c);
  const auto top = *std::max_element(r.begin(), r.end());
  std::vector<std::uint64_t> strand(top + 1, 0);
  for (auto rt : r)
    for (std::size_t i = 0; i <= rt; ++i) strand[i] += binomial(rt, i);
  return BettiTable(d, std::move(strand));
}

}  // namespace lq
