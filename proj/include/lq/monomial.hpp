#ifndef LQ_MONOMIAL_HPP
#define LQ_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lq {

using Exponent = std::uint32_t;

/// Thrown when two values built over different rings are combined.
class RingMismatch : public std::invalid_argument {
public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

/// Ambient polynomial ring: an ordered list of distinctly named variables.
/// Coefficients play no role anywhere in the library, so none are stored.
class Ring {
public:
  explicit Ring(std::vector<std::string> names);

  /// Ring on x1..xn.
  static std::shared_ptr<const Ring> standard(std::size_t num_vars);
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& name(std::size_t var) const { return names_.at(var); }

  /// Index of the variable called `name`, or throws std::invalid_argument.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// True when both pointers name the same ring (identity or equal names).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// A monomial as an exponent vector over a fixed ring.
class Monomial {
public:
  /// The unit monomial of `ring`.
  explicit Monomial(RingPtr ring);
  Monomial(RingPtr ring, std::vector<Exponent> exponents);

  /// Product of the listed variables (with repetition).
  static Monomial from_vars(RingPtr ring, std::initializer_list<std::size_t> vars);
  static Monomial from_vars(RingPtr ring, const std::vector<std::size_t>& vars);
  static Monomial variable(RingPtr ring, std::size_t var);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_vars() const { return exps_.size(); }
  const std::vector<Exponent>& exponents() const { return exps_; }
  Exponent operator[](std::size_t var) const { return exps_[var]; }

  bool is_unit() const;
  /// Index of the variable when this monomial is a single variable.
  bool is_variable() const;
  std::size_t variable_index() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_ && same_ring(a.ring_, b.ring_);
  }

private:
  RingPtr ring_;
  std::vector<Exponent> exps_;
};

std::size_t degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// m' : m, i.e. m' / gcd(m, m').
Monomial colon(const Monomial& m_prime, const Monomial& m);

/// Permutation of variable indices; position 0 has the highest priority.
class VarPriority {
public:
  explicit VarPriority(std::vector<std::size_t> order);
  static VarPriority identity(std::size_t num_vars);
  /// Priority given by variable names, highest first.
  static VarPriority from_names(const Ring& ring, const std::vector<std::string>& names);

  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

private:
  std::vector<std::size_t> order_;
};

enum class Precedence { Earlier, Equal, Later };

/// Lex comparison: scanning variables by priority, the first differing
/// exponent decides and the larger exponent comes Earlier.
Precedence lex_compare(const Monomial& a, const Monomial& b, const VarPriority& p);

/// Graded reverse lex: lower total degree first; on equal degree scan the
/// variables from lowest priority up and the smaller exponent comes Earlier.
Precedence revlex_compare(const Monomial& a, const Monomial& b, const VarPriority& p);

/// Strict-weak-order adaptors for std::sort.
struct LexLess {
  VarPriority priority;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b, priority) == Precedence::Earlier;
  }
};

struct RevlexLess {
  VarPriority priority;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b, priority) == Precedence::Earlier;
  }
};

/// "x1^2*x3*x5"; the unit prints as "1".
std::string to_string(const Monomial& m);

/// Inverse of to_string over the names of `ring`.
Monomial parse_monomial(const RingPtr& ring, std::string_view text);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace lq

#endif  // LQ_MONOMIAL_HPP
