#include "lq/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lq {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RingPtr ring_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("\"ring\" must be an array of variable names");
  return Ring::make(j.get<std::vector<std::string>>());
}

}  // namespace

std::vector<std::string> to_strings(std::span<const Monomial> ms) {
  std::vector<std::string> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

MonomialList parse_ordering_text(std::string_view text) {
  MonomialList out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (!out.ring) {
        constexpr std::string_view header = "ring:";
        if (!line.starts_with(header)) throw ParseError("expected 'ring: <names>' header");
        std::istringstream names{std::string(line.substr(header.size()))};
        std::vector<std::string> vars;
        for (std::string v; names >> v;) vars.push_back(v);
        out.ring = Ring::make(std::move(vars));
      } else {
        out.monomials.push_back(parse_monomial(out.ring, line));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!out.ring) throw ParseError("missing 'ring:' header");
  return out;
}

std::string format_ordering_text(const Ring& ring, std::span<const Monomial> ms,
                                 const std::vector<std::string>& annotations) {
  if (!annotations.empty() && annotations.size() != ms.size())
    throw std::invalid_argument("annotations must parallel the monomial list");
  std::ostringstream out;
  out << "ring:";
  for (const auto& n : ring.var_names()) out << ' ' << n;
  out << '\n';
  std::size_t width = 0;
  for (const auto& m : ms) width = std::max(width, to_string(m).size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto s = to_string(ms[i]);
    out << s;
    if (!annotations.empty()) out << std::string(width - s.size() + 2, ' ') << "# " << annotations[i];
    out << '\n';
  }
  return out.str();
}

MonomialList read_monomial_list(std::string_view text) {
  const auto body = trim(text);
  if (!body.starts_with('{')) return parse_ordering_text(text);
  try {
    const auto j = json::parse(body);
    if (j.contains("gens")) {
      auto ideal = ideal_from_json(j);
      return MonomialList{ideal.ring(), ideal.gens()};
    }
    if (!j.contains("ring") || !j.contains("ordering"))
      throw ParseError("JSON input needs \"ring\" and either \"gens\" or \"ordering\"");
    MonomialList out{ring_from_json(j.at("ring")), {}};
    for (const auto& s : j.at("ordering")) out.monomials.push_back(parse_monomial(out.ring, s.get<std::string>()));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.exponents());
  return json{{"ring", ideal.ring()->var_names()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const json& j) {
  try {
    auto ring = ring_from_json(j.at("ring"));
    std::vector<Monomial> gens;
    for (const auto& e : j.at("gens")) gens.emplace_back(ring, e.get<std::vector<Exponent>>());
    return minimalize(ring, gens);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid ideal JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json verdict_to_json(const Ring& ring, const LqVerdict& verdict) {
  json j;
  j["ring"] = ring.var_names();
  if (const auto* cert = std::get_if<LqCertificate>(&verdict)) {
    j["ok"] = true;
    j["ordering"] = to_strings(cert->ordering);
    j["colon"] = json::array();
    j["witnesses"] = json::array();
    j["per_index_var_counts"] = cert->var_counts();
    json per_index = json::array();
    for (const auto& vars : cert->colon_vars) {
      json names = json::array();
      for (auto v : vars) names.push_back(ring.name(v));
      per_index.push_back(std::move(names));
    }
    j["per_index"] = std::move(per_index);
  } else {
    const auto& f = std::get<LqFailure>(verdict);
    j["ok"] = false;
    j["index"] = f.index;
    j["colon"] = to_strings(f.colon.gens());
    j["witnesses"] = to_strings(f.witnesses);
    j["per_index_var_counts"] = json::array();
  }
  return j;
}

json search_to_json(const Ring& ring, const SearchOutcome& outcome) {
  return json{
      {"status", std::string(to_string(outcome.status))},
      {"ring", ring.var_names()},
      {"ordering", to_strings(outcome.ordering)},
      {"stats", {{"nodes", outcome.stats.nodes}, {"memo_hits", outcome.stats.memo_hits},
                 {"seconds", outcome.stats.seconds}}},
  };
}

json betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (std::size_t i = 0; i < table.length(); ++i)
    if (table.linear_strand()[i] != 0)
      entries.push_back({{"i", i}, {"j", i + table.generator_degree()}, {"value", table.linear_strand()[i]}});
  return json{{"degree", table.generator_degree()}, {"betti", std::move(entries)}};
}

}  // namespace lq
