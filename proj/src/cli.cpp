#include "lq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lq/graph.hpp"
#include "lq/io.hpp"
#include "lq/lq_check.hpp"
#include "lq/orderings.hpp"
#include "lq/search.hpp"

namespace lq::cli {

using nlohmann::json;

namespace {

/// Input or flag problem; reported with exit code kUsage.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// ---- graph sources shared by gens / search / chordal ----

struct GraphFlags {
  std::size_t path = 0, cycle = 0, anticycle = 0, antipath = 0;
  std::string graph_file;
  bool complement = false;
  bool plain_names = false;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f) {
  cmd->add_option("--path", f.path, "path on N vertices");
  cmd->add_option("--cycle", f.cycle, "cycle on N vertices");
  cmd->add_option("--anticycle", f.anticycle, "complement of the N-cycle");
  cmd->add_option("--antipath", f.antipath, "complement of the path on N vertices");
  cmd->add_option("--graph", f.graph_file, "edge list file ('-' for stdin)");
  cmd->add_flag("--complement", f.complement, "take the complement of the chosen graph");
  cmd->add_flag("--plain-names", f.plain_names, "name variables x1..xn even for anticycles");
}

bool any_graph_flag(const GraphFlags& f) {
  return f.path || f.cycle || f.anticycle || f.antipath || !f.graph_file.empty();
}

struct BuiltGraph {
  SimpleGraph graph;
  RingPtr ring;
};

BuiltGraph build_graph(const GraphFlags& f, std::istream& in) {
  const int chosen = (f.path > 0) + (f.cycle > 0) + (f.anticycle > 0) + (f.antipath > 0) + !f.graph_file.empty();
  if (chosen != 1) throw UsageError("choose exactly one of --path, --cycle, --anticycle, --antipath, --graph");
  auto g = [&]() -> SimpleGraph {
    try {
      if (f.path) return path(f.path);
      if (f.cycle) return cycle(f.cycle);
      if (f.anticycle) return anticycle(f.anticycle);
      if (f.antipath) return antipath(f.antipath);
      return parse_edge_list(read_input(f.graph_file, in));
    } catch (const std::logic_error& e) {
      throw UsageError(e.what());
    }
  }();
  if (f.complement) g = complement(g);
  if (g.num_vertices() == 0) throw UsageError("graph has no vertices");
  RingPtr ring;
  if (f.anticycle >= 5 && !f.complement && !f.plain_names)
    ring = AnticycleLabeling(f.anticycle - 3).ring();
  else
    ring = Ring::standard(g.num_vertices());
  return {std::move(g), std::move(ring)};
}

// ---- verify ----

void print_verdict(std::ostream& out, const Ring& ring, const LqVerdict& verdict) {
  if (const auto* cert = std::get_if<LqCertificate>(&verdict)) {
    out << "result: linear quotients ordering of " << cert->ordering.size() << " generators\n";
    out << std::left << std::setw(7) << "index" << std::setw(24) << "generator" << "colon variables\n";
    for (std::size_t t = 0; t < cert->ordering.size(); ++t) {
      std::vector<std::string> names;
      if (t > 0)
        for (auto v : cert->colon_vars[t - 1]) names.push_back(ring.name(v));
      out << std::setw(7) << t + 1 << std::setw(24) << to_string(cert->ordering[t])
          << (t == 0 ? "-" : "(" + join(names, ", ") + ")") << '\n';
    }
  } else {
    const auto& f = std::get<LqFailure>(verdict);
    out << "result: not a linear quotients ordering\n";
    out << "first failure at index " << f.index << "\n";
    out << "colon: (" << join(to_strings(f.colon.gens()), ", ") << ")\n";
    out << "witnesses: " << join(to_strings(f.witnesses), ", ") << '\n';
  }
}

int cmd_verify(const std::string& file, bool as_json, bool all, bool pairwise, std::ostream& out,
               std::istream& in) {
  MonomialList list;
  try {
    list = read_monomial_list(read_input(file, in));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  LqVerdict verdict = [&] {
    try {
      return verify_ordering(list.monomials);
    } catch (const InvalidOrdering& e) {
      throw UsageError(std::string("not a minimal generating set: ") + e.what());
    }
  }();
  const bool ok = accepted(verdict);
  std::optional<PairwiseResult> pw;
  if (pairwise) pw = verify_pairwise(list.monomials);
  std::vector<LqFailure> failures;
  if (all && !ok) failures = all_failures(list.monomials);

  if (as_json) {
    auto j = verdict_to_json(*list.ring, verdict);
    if (pw) {
      j["pairwise"] = {{"ok", pw->ok}};
      if (pw->violation) j["pairwise"]["pair"] = {pw->violation->first, pw->violation->second};
    }
    if (all) {
      json arr = json::array();
      for (const auto& f : failures)
        arr.push_back({{"index", f.index}, {"colon", to_strings(f.colon.gens())}, {"witnesses", to_strings(f.witnesses)}});
      j["all_failures"] = std::move(arr);
    }
    out << j.dump(2) << '\n';
  } else {
    print_verdict(out, *list.ring, verdict);
    if (pw) {
      out << "pairwise criterion: " << (pw->ok ? "holds" : "fails");
      if (pw->violation) out << " at pair (" << pw->violation->first << ", " << pw->violation->second << ")";
      out << '\n';
    }
    if (all && !ok) {
      out << "all failing indices:\n";
      for (const auto& f : failures)
        out << "  " << f.index << ": (" << join(to_strings(f.colon.gens()), ", ") << ")\n";
    }
  }
  return ok ? kOk : kRefuted;
}

// ---- gens / order ----

int cmd_gens(const GraphFlags& gf, unsigned k, bool as_json, std::ostream& out, std::istream& in) {
  if (k == 0) throw UsageError("--power must be at least 1");
  auto built = build_graph(gf, in);
  std::vector<Monomial> gens;
  if (gf.antipath && !gf.complement) {
    if (gf.antipath < 3) throw UsageError("the antipath needs at least 3 vertices");
    gens = antipath_power_generators(gf.antipath, k);
  } else {
    gens = power(edge_ideal(built.graph, built.ring), k).gens();
  }
  if (as_json) {
    out << json{{"ring", built.ring->var_names()}, {"ordering", to_strings(gens)}, {"count", gens.size()}}.dump(2)
        << '\n';
  } else {
    out << format_ordering_text(*built.ring, gens);
  }
  return kOk;
}

int cmd_order(std::size_t vertices, bool as_json, std::ostream& out) {
  if (vertices < 5) throw UsageError("--anticycle-square needs at least 5 vertices");
  const auto staged = anticycle_square_ordering(vertices - 3);
  std::vector<std::string> tags;
  for (auto t : staged.stages) tags.push_back("(" + std::string(to_string(t)) + ")");
  if (as_json) {
    out << json{{"ring", staged.ring->var_names()}, {"ordering", to_strings(staged.ordering)}, {"stages", tags}}.dump(2)
        << '\n';
  } else {
    out << format_ordering_text(*staged.ring, staged.ordering, tags);
  }
  return kOk;
}

// ---- search ----

struct SearchFlags {
  bool exhaustive = false, greedy = false;
  std::string from;
  unsigned power = 1;
  std::uint64_t budget = 10'000'000;
  bool no_memo = false;
  std::string tie_break;
  bool json = false;
};

int cmd_search(const SearchFlags& sf, const GraphFlags& gf, std::ostream& out, std::istream& in) {
  if (sf.exhaustive == sf.greedy) throw UsageError("choose exactly one of --exhaustive, --greedy");
  if (sf.power == 0) throw UsageError("--power must be at least 1");
  std::optional<MonomialIdeal> ideal;
  if (!sf.from.empty()) {
    if (any_graph_flag(gf)) throw UsageError("--from cannot be combined with a graph source");
    try {
      auto list = read_monomial_list(read_input(sf.from, in));
      ideal = minimalize(list.ring, list.monomials);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    if (sf.power > 1) ideal = power(*ideal, sf.power);
  } else {
    auto built = build_graph(gf, in);
    ideal = power(edge_ideal(built.graph, built.ring), sf.power);
  }

  SearchOutcome outcome;
  try {
    if (sf.exhaustive) {
      outcome = search_exhaustive(*ideal, ExhaustiveOptions{sf.budget, !sf.no_memo});
    } else {
      auto priority = VarPriority::identity(ideal->ring()->num_vars());
      if (!sf.tie_break.empty()) {
        std::vector<std::string> names;
        std::istringstream ss(sf.tie_break);
        for (std::string tok; std::getline(ss, tok, ',');)
          if (!tok.empty()) names.push_back(tok);
        try {
          priority = VarPriority::from_names(*ideal->ring(), names);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--tie-break: ") + e.what());
        }
      }
      outcome = search_greedy(*ideal, priority);
    }
  } catch (const SearchTooLarge& e) {
    throw UsageError(e.what());
  }
  if (outcome.status == SearchStatus::Found && !accepted(verify_ordering(outcome.ordering))) {
    throw std::logic_error("search returned an ordering that does not verify");
  }

  if (sf.json) {
    out << search_to_json(*ideal->ring(), outcome).dump(2) << '\n';
  } else {
    out << "# status: " << to_string(outcome.status) << '\n';
    out << "# generators: " << ideal->size() << '\n';
    out << "# nodes: " << outcome.stats.nodes << ", memo hits: " << outcome.stats.memo_hits
        << ", seconds: " << outcome.stats.seconds << '\n';
    if (outcome.status == SearchStatus::Found) out << format_ordering_text(*ideal->ring(), outcome.ordering);
  }
  return outcome.status == SearchStatus::NoneExists ? kRefuted : kOk;
}

// ---- betti ----

int cmd_betti(const std::string& file, bool as_json, std::ostream& out, std::istream& in) {
  const auto text = read_input(file, in);
  MonomialList list;
  try {
    list = read_monomial_list(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  LqVerdict verdict = [&] {
    try {
      return verify_ordering(list.monomials);
    } catch (const InvalidOrdering& e) {
      throw UsageError(e.what());
    }
  }();
  if (!accepted(verdict)) {
    print_verdict(out, *list.ring, verdict);
    return kRefuted;
  }
  BettiTable table = [&] {
    try {
      return betti_from_lq(std::get<LqCertificate>(verdict));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (as_json) {
    out << betti_to_json(table).dump(2) << '\n';
    return kOk;
  }
  const auto& strand = table.linear_strand();
  std::uint64_t total_width = 6;
  for (auto v : strand) total_width = std::max<std::uint64_t>(total_width, std::to_string(v).size() + 2);
  const auto w = static_cast<int>(total_width);
  out << std::right << std::setw(8) << "";
  for (std::size_t i = 0; i < strand.size(); ++i) out << std::setw(w) << i;
  out << '\n' << std::setw(8) << "total:";
  for (auto v : strand) out << std::setw(w) << v;
  out << '\n' << std::setw(8) << (std::to_string(table.generator_degree()) + ":");
  for (auto v : strand) out << std::setw(w) << v;
  out << "\n(row d lists beta_{i,i+d}; every other entry is zero)\n";
  return kOk;
}

// ---- chordal ----

int cmd_chordal(const GraphFlags& gf, bool as_json, std::ostream& out, std::istream& in) {
  const auto built = build_graph(gf, in);
  const auto res = chordality(built.graph);
  const bool linear = has_linear_resolution_by_froeberg(built.graph);
  if (as_json) {
    json j{{"vertices", built.graph.num_vertices()},
           {"edges", built.graph.num_edges()},
           {"chordal", res.chordal},
           {"edge_ideal_linear_resolution", linear}};
    if (res.elimination_order) j["elimination_order"] = *res.elimination_order;
    out << j.dump(2) << '\n';
  } else {
    out << "vertices: " << built.graph.num_vertices() << ", edges: " << built.graph.num_edges() << '\n';
    out << "chordal: " << (res.chordal ? "yes" : "no") << '\n';
    if (res.elimination_order) {
      std::vector<std::string> order;
      for (auto v : *res.elimination_order) order.push_back(std::to_string(v));
      out << "perfect elimination order: " << join(order, " ") << '\n';
    }
    out << "edge ideal has a linear resolution (complement chordal): " << (linear ? "yes" : "no") << '\n';
  }
  return res.chordal ? kOk : kRefuted;
}

// ---- repro ----

int cmd_repro(const std::string& which, bool as_json, std::ostream& out) {
  if (which == "lex6" || which == "revlex6") {
    const auto fx = counterexample_fixture(which == "lex6" ? FixtureOrder::Lex : FixtureOrder::Revlex);
    const auto verdict = verify_ordering(fx.ordering);
    const auto* fail = std::get_if<LqFailure>(&verdict);
    const bool reproduced = fail && fail->index == fx.failure_index && fail->colon.gens() == fx.failure_colon;
    const auto& ring = *fx.ordering.front().ring();
    if (as_json) {
      auto j = verdict_to_json(ring, verdict);
      j["fixture"] = which;
      j["expected_index"] = fx.failure_index;
      j["reproduced"] = reproduced;
      out << j.dump(2) << '\n';
    } else {
      out << "fixture: " << which << " ordering of I(A_6)^2, " << fx.ordering.size() << " generators\n";
      print_verdict(out, ring, verdict);
      out << "expected: failure at index " << fx.failure_index << " with colon ("
          << join(to_strings(fx.failure_colon), ", ") << ") -> " << (reproduced ? "reproduced" : "MISMATCH") << '\n';
    }
    return reproduced ? kRefuted : kMismatch;
  }
  if (which == "theorem6") {
    const auto staged = anticycle_square_ordering(3);
    const auto printed = theorem_n3_fixture();
    const bool same_list = staged.ordering == printed;
    const auto verdict = verify_ordering(staged.ordering);
    const bool reproduced = same_list && accepted(verdict);
    if (as_json) {
      auto j = verdict_to_json(*staged.ring, verdict);
      j["fixture"] = which;
      j["matches_printed_list"] = same_list;
      j["reproduced"] = reproduced;
      out << j.dump(2) << '\n';
    } else {
      out << "fixture: staged ordering of I(A_6)^2, " << staged.ordering.size() << " generators\n";
      out << "matches printed list: " << (same_list ? "yes" : "NO") << '\n';
      print_verdict(out, *staged.ring, verdict);
      out << (reproduced ? "reproduced" : "MISMATCH") << '\n';
    }
    return reproduced ? kOk : kMismatch;
  }
  throw UsageError("unknown fixture '" + which + "' (expected lex6, revlex6 or theorem6)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Edge ideals, linear quotients orderings and their certificates", "lq"};
  app.require_subcommand(1);

  bool as_json = false;

  auto* gens = app.add_subcommand("gens", "print minimal generators of I(G)^k");
  GraphFlags gens_graph;
  unsigned gens_power = 1;
  add_graph_flags(gens, gens_graph);
  gens->add_option("--power", gens_power, "power k")->capture_default_str();
  gens->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "check an ordering for linear quotients");
  std::string verify_from;
  bool verify_all = false, verify_pw = false;
  verify->add_option("--from", verify_from, "ordering file or JSON ('-' for stdin)")->required();
  verify->add_flag("--all-failures", verify_all, "list every failing index");
  verify->add_flag("--pairwise", verify_pw, "also run the pairwise criterion");
  verify->add_flag("--json", as_json, "JSON output");

  auto* order = app.add_subcommand("order", "print the staged ordering of I(A_N)^2");
  std::size_t order_n = 0;
  order->add_option("--anticycle-square", order_n, "number of anticycle vertices (>= 5)")->required();
  order->add_flag("--json", as_json, "JSON output");

  auto* search = app.add_subcommand("search", "search for a linear quotients ordering");
  SearchFlags sf;
  GraphFlags search_graph;
  search->add_flag("--exhaustive", sf.exhaustive, "backtracking search (at most 64 generators)");
  search->add_flag("--greedy", sf.greedy, "greedy lex-first search");
  search->add_option("--from", sf.from, "generators file or JSON ('-' for stdin)");
  add_graph_flags(search, search_graph);
  search->add_option("--power", sf.power, "power k")->capture_default_str();
  search->add_option("--budget", sf.budget, "node budget for exhaustive search")->capture_default_str();
  search->add_flag("--no-memo", sf.no_memo, "disable dead-set memoization");
  search->add_option("--tie-break", sf.tie_break, "greedy variable priority, comma separated names");
  search->add_flag("--json", sf.json, "JSON output");

  auto* betti = app.add_subcommand("betti", "Betti table from a linear quotients certificate");
  std::string betti_from;
  betti->add_option("--from-certificate", betti_from, "certificate JSON or ordering file")->required();
  betti->add_flag("--json", as_json, "JSON output");

  auto* chordal = app.add_subcommand("chordal", "chordality test with elimination-order witness");
  GraphFlags chordal_graph;
  add_graph_flags(chordal, chordal_graph);
  chordal->add_flag("--json", as_json, "JSON output");

  auto* repro = app.add_subcommand("repro", "replay the recorded fixtures");
  std::string repro_which;
  repro->add_option("fixture", repro_which, "lex6 | revlex6 | theorem6")->required();
  repro->add_flag("--json", as_json, "JSON output");

  std::vector<const char*> argv{"lq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gens) return cmd_gens(gens_graph, gens_power, as_json, out, in);
    if (*verify) return cmd_verify(verify_from, as_json, verify_all, verify_pw, out, in);
    if (*order) return cmd_order(order_n, as_json, out);
    if (*search) {
      sf.json = sf.json || as_json;
      return cmd_search(sf, search_graph, out, in);
    }
    if (*betti) return cmd_betti(betti_from, as_json, out, in);
    if (*chordal) return cmd_chordal(chordal_graph, as_json, out, in);
    if (*repro) return cmd_repro(repro_which, as_json, out);
  } catch (const UsageError& e) {
    err << "lq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "lq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lq::cli
