#ifndef LQ_IO_HPP
#define LQ_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lq/ideal.hpp"
#include "lq/lq_check.hpp"
#include "lq/search.hpp"

namespace lq {

/// Malformed input file.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct MonomialList {
  RingPtr ring;
  std::vector<Monomial> monomials;
};

/// Ordering file:
///
///     ring: x1 x2 x3 x4
///     x1*x3
///     x1*x4   # trailing comments are ignored
///
/// Blank lines and `#` comments are skipped.
MonomialList parse_ordering_text(std::string_view text);

/// Writes the ordering file format. When `annotations` is non-empty it must
/// parallel `ms`; each entry is appended as a trailing comment.
std::string format_ordering_text(const Ring& ring, std::span<const Monomial> ms,
                                 const std::vector<std::string>& annotations = {});

/// Accepts the ordering file format, ideal JSON ({"ring", "gens"}) or any
/// JSON object carrying "ring" and "ordering" (certificates, search results).
MonomialList read_monomial_list(std::string_view text);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

/// Certificate / failure report. Both shapes carry "ok", "colon",
/// "witnesses" and "per_index_var_counts"; failures add "index".
nlohmann::json verdict_to_json(const Ring& ring, const LqVerdict& verdict);

nlohmann::json search_to_json(const Ring& ring, const SearchOutcome& outcome);

nlohmann::json betti_to_json(const BettiTable& table);

std::vector<std::string> to_strings(std::span<const Monomial> ms);

}  // namespace lq

#endif  // LQ_IO_HPP
