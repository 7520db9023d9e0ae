#ifndef LQ_ORDERINGS_HPP
#define LQ_ORDERINGS_HPP

#include <string_view>
#include <vector>

#include "lq/graph.hpp"
#include "lq/monomial.hpp"

namespace lq {

/// Minimal generators of I(antipath(n))^k over x1..xn, in lex order (x1 first).
///
/// A degree-2k monomial x_{i_1}...x_{i_k} x_{j_1}...x_{j_k} with sorted
/// indices i_1 <= ... <= i_k <= j_1 <= ... <= j_k is a generator exactly
/// when i_r + 2 <= j_r for every r.
std::vector<Monomial> antipath_power_generators(std::size_t n, unsigned k);

/// Same construction for the antipath whose underlying path visits the
/// variables `path_vars` in order. The result is sorted lex with the path
/// variables as the leading priorities.
std::vector<Monomial> antipath_power_generators(const RingPtr& ring, const std::vector<std::size_t>& path_vars,
                                                unsigned k);

enum class StageTag { S1, S2a, S2b, S2c, S2d, S3a, S3b };

std::string_view to_string(StageTag tag);
inline constexpr StageTag kAllStages[] = {StageTag::S1,  StageTag::S2a, StageTag::S2b, StageTag::S2c,
                                          StageTag::S2d, StageTag::S3a, StageTag::S3b};

struct StagedOrdering {
  AnticycleLabeling labeling;
  RingPtr ring;
  std::vector<Monomial> ordering;
  std::vector<StageTag> stages;  // parallel to `ordering`
};

/// Linear quotients ordering of I(anticycle(n + 3))^2, built in stages:
///
///   S1   J^2 where J is the edge ideal of the antipath on z1, y1..yn, z2,
///        lex with z1 > y1 > ... > yn > z2
///   S2a  x y_i z1 z2,  i ascending
///   S2b  x y_i y_j z2, i <= j, (i, j) != (n, n), (i, j) ascending
///   S2c  x y_i y_j z1, i <= j, (i, j) != (1, 1), j descending then i descending
///   S2d  x y_i y_j y_k, i <= j <= k, i + 2 <= k, (i, j, k) ascending
///   S3a  x^2 y_i y_j, i <= j, (i, j) != (1, 1), (i, j) ascending
///   S3b  x^2 y_1^2
///
/// Requires n >= 2.
StagedOrdering anticycle_square_ordering(std::size_t n);

/// Stage of a minimal generator of I(anticycle)^2, read off the exponents
/// of x, z1 and z2. Throws std::invalid_argument if `m` is not a product of
/// two anticycle edges.
StageTag classify_stage(const Monomial& m, const AnticycleLabeling& labeling);

enum class FixtureOrder { Lex, Revlex };

/// A printed ordering of I(A_6)^2 that fails to have linear quotients.
struct CounterexampleFixture {
  std::vector<Monomial> ordering;
  std::size_t failure_index;          // 1-based
  std::vector<Monomial> failure_colon;  // minimal generators, canonical order
};

CounterexampleFixture counterexample_fixture(FixtureOrder which);

/// The staged ordering for n = 3 (anticycle on six vertices) as printed
/// data, over the ring x, z1, y1, y2, y3, z2.
std::vector<Monomial> theorem_n3_fixture();

}  // namespace lq

#endif  // LQ_ORDERINGS_HPP
