#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlcovers/graph.hpp"

namespace wlcovers {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);

/// Number of index-d subgroups of the free group of rank r:
///   N(1, r) = 1,
///   N(d, r) = d (d!)^(r-1) - sum_{i=1}^{d-1} ((d-i)!)^(r-1) N(i, r).
/// Throws std::invalid_argument for d < 1 or r < 1.
BigInt hall_count(std::size_t d, std::size_t r);

/// Memoized table of hall_count for one rank.
class HallTable {
 public:
  explicit HallTable(std::size_t rank);

  const BigInt& at(std::size_t d);
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
  std::vector<BigInt> values_;  // values_[d-1] == N(d, rank)
  std::vector<BigInt> factorial_powers_;  // (k!)^(rank-1)
};

/// d^(r-2) ((d-1)!)^(r-1), a lower bound on the number of connected degree-d
/// covers up to isomorphism. Defined for r >= 2; throws otherwise.
BigInt lower_bound(std::size_t d, std::size_t r);

/// 1 - χ(g) for connected g. Throws std::invalid_argument when disconnected.
std::size_t rank_from_graph(const Graph& g);

struct CountingCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CountingReport {
  std::size_t degree = 0;
  std::size_t rank = 0;
  BigInt subgroup_count;                  // N(d, r)
  std::size_t class_count = 0;            // C
  std::optional<BigInt> class_lower_bound;  // only for r >= 2
  std::uint64_t connected_voltages = 0;
  BigInt expected_connected_voltages;     // (d-1)! N(d, r)
  std::vector<CountingCheck> checks;

  bool passed() const;
};

struct GenerationOptions;

/// Generates the degree-d cover classes of `base` and checks them against
/// the subgroup counts: d C >= N, C >= lower_bound (r >= 2), and that the
/// number of transitive voltage tuples is (d-1)! N.
CountingReport check_counting_consistency(const Graph& base, std::size_t d, const GenerationOptions& options);
CountingReport check_counting_consistency(const Graph& base, std::size_t d);

}  // namespace wlcovers
