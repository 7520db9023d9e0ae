#include "lq/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace lq {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::all_of(n.begin(), n.end(), is_name_char))
      throw std::invalid_argument("invalid variable name '" + n + "'");
    if (n == "1") throw std::invalid_argument("'1' is reserved for the unit monomial");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::shared_ptr<const Ring> Ring::standard(std::size_t num_vars) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 1; i <= num_vars; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names));
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial::Monomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("monomial needs a ring");
  exps_.assign(ring_->num_vars(), 0);
}

Monomial::Monomial(RingPtr ring, std::vector<Exponent> exponents)
    : ring_(std::move(ring)), exps_(std::move(exponents)) {
  if (!ring_) throw std::invalid_argument("monomial needs a ring");
  if (exps_.size() != ring_->num_vars())
    throw std::invalid_argument("exponent vector length does not match ring");
}

Monomial Monomial::from_vars(RingPtr ring, std::initializer_list<std::size_t> vars) {
  return from_vars(std::move(ring), std::vector<std::size_t>(vars));
}

Monomial Monomial::from_vars(RingPtr ring, const std::vector<std::size_t>& vars) {
  Monomial m(std::move(ring));
  for (auto v : vars) {
    if (v >= m.exps_.size()) throw std::out_of_range("variable index out of range");
    ++m.exps_[v];
  }
  return m;
}

Monomial Monomial::variable(RingPtr ring, std::size_t var) { return from_vars(std::move(ring), {var}); }

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_variable() const { return degree(*this) == 1; }

std::size_t Monomial::variable_index() const {
  if (!is_variable()) throw std::logic_error("monomial is not a variable");
  return static_cast<std::size_t>(std::find(exps_.begin(), exps_.end(), 1u) - exps_.begin());
}

std::size_t degree(const Monomial& m) {
  return std::accumulate(m.exponents().begin(), m.exponents().end(), std::size_t{0});
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t v = 0; v < ea.size(); ++v)
    if (ea[v] > eb[v]) return false;
  return true;
}

namespace {

template <class Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  require_same_ring(a, b);
  std::vector<Exponent> out(a.num_vars());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = op(a[v], b[v]);
  return Monomial(a.ring(), std::move(out));
}

}  // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x + y; });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial colon(const Monomial& m_prime, const Monomial& m) {
  return combine(m_prime, m, [](Exponent x, Exponent y) { return x > y ? x - y : Exponent{0}; });
}

VarPriority::VarPriority(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (auto v : order_) {
    if (v >= order_.size() || seen[v]) throw std::invalid_argument("variable priority is not a permutation");
    seen[v] = true;
  }
}

VarPriority VarPriority::identity(std::size_t num_vars) {
  std::vector<std::size_t> order(num_vars);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return VarPriority(std::move(order));
}

VarPriority VarPriority::from_names(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> order;
  order.reserve(names.size());
  for (const auto& n : names) order.push_back(ring.index_of(n));
  if (order.size() != ring.num_vars()) throw std::invalid_argument("priority must list every variable");
  return VarPriority(std::move(order));
}

Precedence lex_compare(const Monomial& a, const Monomial& b, const VarPriority& p) {
  require_same_ring(a, b);
  if (p.size() != a.num_vars()) throw std::invalid_argument("priority size does not match ring");
  for (auto v : p.order()) {
    if (a[v] != b[v]) return a[v] > b[v] ? Precedence::Earlier : Precedence::Later;
  }
  return Precedence::Equal;
}

Precedence revlex_compare(const Monomial& a, const Monomial& b, const VarPriority& p) {
  require_same_ring(a, b);
  if (p.size() != a.num_vars()) throw std::invalid_argument("priority size does not match ring");
  const auto da = degree(a), db = degree(b);
  if (da != db) return da < db ? Precedence::Earlier : Precedence::Later;
  for (auto it = p.order().rbegin(); it != p.order().rend(); ++it) {
    const auto v = *it;
    if (a[v] != b[v]) return a[v] < b[v] ? Precedence::Earlier : Precedence::Later;
  }
  return Precedence::Equal;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += m.ring()->name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const RingPtr& ring, std::string_view text) {
  text = trim(text);
  Monomial m(ring);
  if (text == "1") return m;
  if (text.empty()) throw std::invalid_argument("empty monomial");
  std::vector<Exponent> exps(ring->num_vars(), 0);
  while (true) {
    auto star = text.find('*');
    auto factor = trim(text.substr(0, star));
    auto caret = factor.find('^');
    auto name = trim(factor.substr(0, caret));
    Exponent e = 1;
    if (caret != std::string_view::npos) {
      auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("bad exponent in '" + std::string(factor) + "'");
    }
    exps[ring->index_of(name)] += e;
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return Monomial(ring, std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lq
