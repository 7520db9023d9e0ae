#ifndef LQ_IDEAL_HPP
#define LQ_IDEAL_HPP

#include <span>
#include <vector>

#include "lq/monomial.hpp"

namespace lq {

/// Monomial ideal stored as its minimal generating set.
///
/// Generators are kept in canonical order (lex, identity priority) so that
/// printing and serialization are deterministic. An ideal with no
/// generators is the zero ideal.
class MonomialIdeal {
public:
  /// The zero ideal of `ring`.
  explicit MonomialIdeal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// True if some generator divides `m`.
  bool contains(const Monomial& m) const;

private:
  friend MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> ms);
  MonomialIdeal(RingPtr ring, std::vector<Monomial> minimal_sorted);

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal, deduplicated subset of `ms`.
MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> ms);
/// As above, taking the ring from the first element. Throws on empty input.
MonomialIdeal minimalize(std::span<const Monomial> ms);

/// Minimal generators of the k-th power. Throws for k == 0.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k);

/// I : (m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);
/// (g_1, ..., g_s) : (m) for an arbitrary generator list.
MonomialIdeal colon_by_monomial(const RingPtr& ring, std::span<const Monomial> gens, const Monomial& m);

/// Generator-set equality.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace lq

#endif  // LQ_IDEAL_HPP
