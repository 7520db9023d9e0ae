#include "lq/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_set>

namespace lq {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneExists: return "none_exists";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool admissible(std::span<const Monomial> chosen, const Monomial& m) {
  if (chosen.empty()) return true;
  const auto q = colon_by_monomial(m.ring(), chosen, m);
  return std::all_of(q.gens().begin(), q.gens().end(), [](const Monomial& g) { return g.is_variable(); });
}

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask support_mask(const Monomial& m) {
  Mask s = 0;
  for (std::size_t v = 0; v < m.num_vars(); ++v)
    if (m[v] > 0) s |= bit(v);
  return s;
}

// (g : m) is either a variable, recorded as its bit in `var_bit`, or a
// monomial of higher degree, recorded by its support in `support`. The
// colon (S) : (m) is generated by variables iff every non-linear g : m
// shares a variable with some linear one.
struct ColonTable {
  std::size_t r = 0;
  std::vector<Mask> var_bit;  // [m * r + g]
  std::vector<Mask> support;  // [m * r + g]

  explicit ColonTable(const std::vector<Monomial>& gens) : r(gens.size()), var_bit(r * r, 0), support(r * r, 0) {
    for (std::size_t m = 0; m < r; ++m) {
      for (std::size_t g = 0; g < r; ++g) {
        if (g == m) continue;
        const auto c = colon(gens[g], gens[m]);
        if (c.is_variable())
          var_bit[m * r + g] = bit(c.variable_index());
        else
          support[m * r + g] = support_mask(c);
      }
    }
  }

  bool admissible(Mask chosen, std::size_t m) const {
    Mask linear = 0;
    for (Mask s = chosen; s; s &= s - 1) linear |= var_bit[m * r + static_cast<std::size_t>(std::countr_zero(s))];
    for (Mask s = chosen; s; s &= s - 1) {
      const Mask sup = support[m * r + static_cast<std::size_t>(std::countr_zero(s))];
      if (sup && !(sup & linear)) return false;
    }
    return true;
  }
};

void check_variable_count(const MonomialIdeal& ideal) {
  if (ideal.ring()->num_vars() > kMaxSearchVariables)
    throw SearchTooLarge("search supports at most 64 variables");
}

class Backtracker {
public:
  Backtracker(const MonomialIdeal& ideal, const ExhaustiveOptions& opts)
      : gens_(ideal.gens()), table_(gens_), opts_(opts) {
    full_ = gens_.size() == 64 ? ~Mask{0} : bit(gens_.size()) - 1;
  }

  SearchOutcome run() {
    SearchOutcome out;
    const bool found = descend(0);
    out.stats = stats_;
    if (found) {
      out.status = SearchStatus::Found;
      for (auto idx : path_) out.ordering.push_back(gens_[idx]);
    } else {
      out.status = budget_hit_ ? SearchStatus::Inconclusive : SearchStatus::NoneExists;
    }
    return out;
  }

private:
  bool descend(Mask chosen) {
    if (chosen == full_) return true;
    if (opts_.memoize && dead_.contains(chosen)) {
      ++stats_.memo_hits;
      return false;
    }
    if (stats_.nodes >= opts_.node_budget) {
      budget_hit_ = true;
      return false;
    }
    ++stats_.nodes;
    for (std::size_t m = 0; m < gens_.size(); ++m) {
      if (chosen & bit(m)) continue;
      if (!table_.admissible(chosen, m)) continue;
      path_.push_back(m);
      if (descend(chosen | bit(m))) return true;
      path_.pop_back();
      if (budget_hit_) return false;
    }
    if (opts_.memoize) dead_.insert(chosen);
    return false;
  }

  const std::vector<Monomial>& gens_;
  ColonTable table_;
  ExhaustiveOptions opts_;
  Mask full_ = 0;
  std::vector<std::size_t> path_;
  std::unordered_set<Mask> dead_;
  SearchStats stats_;
  bool budget_hit_ = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SearchOutcome search_exhaustive(const MonomialIdeal& ideal, const ExhaustiveOptions& options) {
  if (ideal.size() > kMaxExhaustiveGenerators)
    throw SearchTooLarge("exhaustive search supports at most 64 generators (" + std::to_string(ideal.size()) +
                         " given); use greedy search instead");
  check_variable_count(ideal);
  const auto t0 = std::chrono::steady_clock::now();
  auto out = Backtracker(ideal, options).run();
  out.stats.seconds = seconds_since(t0);
  return out;
}

SearchOutcome search_greedy(const MonomialIdeal& ideal, const VarPriority& tie_break) {
  check_variable_count(ideal);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Monomial> candidates = ideal.gens();
  std::sort(candidates.begin(), candidates.end(), LexLess{tie_break});

  // Per remaining candidate: variables realized so far as colons, and the
  // supports of non-linear colons not yet covered by one of them.
  struct State {
    Mask linear = 0;
    std::vector<Mask> uncovered;
  };
  std::vector<State> state(candidates.size());
  std::vector<bool> used(candidates.size(), false);

  SearchOutcome out;
  for (std::size_t step = 0; step < candidates.size(); ++step) {
    ++out.stats.nodes;
    std::size_t pick = candidates.size();
    for (std::size_t c = 0; c < candidates.size() && pick == candidates.size(); ++c) {
      if (used[c]) continue;
      auto& st = state[c];
      std::erase_if(st.uncovered, [&](Mask sup) { return (sup & st.linear) != 0; });
      if (st.uncovered.empty()) pick = c;
    }
    if (pick == candidates.size()) {
      out.status = SearchStatus::Inconclusive;
      out.ordering.clear();
      out.stats.seconds = seconds_since(t0);
      return out;
    }
    used[pick] = true;
    out.ordering.push_back(candidates[pick]);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      const auto q = colon(candidates[pick], candidates[c]);
      if (q.is_variable())
        state[c].linear |= bit(q.variable_index());
      else
        state[c].uncovered.push_back(support_mask(q));
    }
  }
  out.status = SearchStatus::Found;
  out.stats.seconds = seconds_since(t0);
  return out;
}

}  // namespace lq
