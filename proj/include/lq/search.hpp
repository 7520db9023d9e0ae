#ifndef LQ_SEARCH_HPP
#define LQ_SEARCH_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lq/ideal.hpp"

namespace lq {

enum class SearchStatus { Found, NoneExists, Inconclusive };

std::string_view to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<Monomial> ordering;  // set iff status == Found
  SearchStats stats;
};

/// The ideal is outside what a search mode supports (generator or variable count).
class SearchTooLarge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ExhaustiveOptions {
  std::uint64_t node_budget = 10'000'000;
  /// Remember chosen sets already shown to be dead ends.
  bool memoize = true;
};

inline constexpr std::size_t kMaxExhaustiveGenerators = 64;
inline constexpr std::size_t kMaxSearchVariables = 64;

/// Backtracking search for a linear quotients ordering of `ideal`.
///
/// A generator m may follow the chosen set S iff (S) : (m) is generated by
/// variables; this depends on S only as a set, so failed sets are memoized
/// by bitmask. Children are tried in the ideal's canonical order, making
/// node counts reproducible. Exhausting the tree yields NoneExists; running
/// out of budget yields Inconclusive.
///
/// Throws SearchTooLarge above 64 generators or 64 variables.
SearchOutcome search_exhaustive(const MonomialIdeal& ideal, const ExhaustiveOptions& options = {});

/// Repeatedly appends the lex-first admissible generator under `tie_break`.
/// Getting stuck gives Inconclusive, never NoneExists.
SearchOutcome search_greedy(const MonomialIdeal& ideal, const VarPriority& tie_break);

/// True iff `m` may follow `chosen`: every minimal generator of
/// (chosen) : (m) is a variable.
bool admissible(std::span<const Monomial> chosen, const Monomial& m);

}  // namespace lq

#endif  // LQ_SEARCH_HPP
