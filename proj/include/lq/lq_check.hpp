#ifndef LQ_LQ_CHECK_HPP
#define LQ_LQ_CHECK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "lq/ideal.hpp"

namespace lq {

/// The input list is not a minimal generating set (duplicate or divisible entry).
class InvalidOrdering : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Proof that an ordering has linear quotients.
///
/// `colon_vars[t]` lists (ascending) the variables generating
/// (m_1, ..., m_{t+1}) : (m_{t+2}), i.e. entry t belongs to the generator
/// at 1-based position t + 2. The first generator has no entry.
struct LqCertificate {
  std::vector<Monomial> ordering;
  std::vector<std::vector<std::size_t>> colon_vars;

  /// r_2, ..., r_r: the number of variables in each colon ideal.
  std::vector<std::size_t> var_counts() const;
};

/// First position whose colon ideal is not generated by variables.
struct LqFailure {
  std::size_t index = 0;  // 1-based
  MonomialIdeal colon;
  std::vector<Monomial> witnesses;  // non-linear minimal generators of `colon`
};

using LqVerdict = std::variant<LqCertificate, LqFailure>;

inline bool accepted(const LqVerdict& v) { return std::holds_alternative<LqCertificate>(v); }

/// Throws InvalidOrdering unless `ms` is duplicate-free and no entry divides another.
void require_minimal_generators(std::span<const Monomial> ms);

/// Computes every colon ideal (m_1..m_{i-1}) : (m_i) and stops at the first
/// one that is not generated by variables.
LqVerdict verify_ordering(std::span<const Monomial> ms);

/// Every failing index, in increasing order. Empty iff the ordering is accepted.
std::vector<LqFailure> all_failures(std::span<const Monomial> ms);

struct PairwiseResult {
  bool ok = true;
  /// First violating pair (j, i), 1-based, j < i; minimal i, then minimal j.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Pair criterion: for all j < i, m_j : m_i is a variable or is divisible by
/// a variable of the form m_k : m_i with k < i.
PairwiseResult verify_pairwise(std::span<const Monomial> ms);

/// Graded Betti numbers of an equigenerated ideal with linear quotients.
/// Only the linear strand beta_{i, i+d} can be nonzero.
class BettiTable {
public:
  BettiTable(std::size_t degree, std::vector<std::uint64_t> linear_strand)
      : degree_(degree), strand_(std::move(linear_strand)) {}

  std::size_t generator_degree() const { return degree_; }
  /// Largest homological degree with a nonzero entry, plus one.
  std::size_t length() const { return strand_.size(); }
  const std::vector<std::uint64_t>& linear_strand() const { return strand_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::size_t degree_;
  std::vector<std::uint64_t> strand_;
};

/// beta_{i, i+d} = sum_t C(r_t, i), r_1 = 0. Throws std::invalid_argument
/// for mixed-degree or empty orderings.
BettiTable betti_from_lq(const LqCertificate& cert);

}  // namespace lq

#endif  // LQ_LQ_CHECK_HPP
