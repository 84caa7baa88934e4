#include "wlcovers/counting.hpp"

#include <stdexcept>

#include "wlcovers/dataset.hpp"

namespace wlcovers {

BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

HallTable::HallTable(std::size_t rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("hall_count: rank must be at least 1");
  factorial_powers_.push_back(1);  // (0!)^(r-1)
}

const BigInt& HallTable::at(std::size_t d) {
  if (d < 1) throw std::invalid_argument("hall_count: index must be at least 1");
  while (factorial_powers_.size() <= d) {
    const std::size_t k = factorial_powers_.size();
    factorial_powers_.push_back(boost::multiprecision::pow(factorial(k), static_cast<unsigned>(rank_ - 1)));
  }
  while (values_.size() < d) {
    const std::size_t m = values_.size() + 1;
    if (m == 1) {
      values_.push_back(1);
      continue;
    }
    BigInt value = BigInt(m) * factorial_powers_[m];
    for (std::size_t i = 1; i < m; ++i) value -= factorial_powers_[m - i] * values_[i - 1];
    values_.push_back(std::move(value));
  }
  return values_[d - 1];
}

BigInt hall_count(std::size_t d, std::size_t r) {
  HallTable table(r);
  return table.at(d);
}

BigInt lower_bound(std::size_t d, std::size_t r) {
  if (d < 1) throw std::invalid_argument("lower_bound: degree must be at least 1");
  if (r < 2) throw std::invalid_argument("lower_bound: only stated for rank >= 2 (negative euler characteristic)");
  return boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(r - 2)) *
         boost::multiprecision::pow(factorial(d - 1), static_cast<unsigned>(r - 1));
}

std::size_t rank_from_graph(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw std::invalid_argument("rank_from_graph: graph must be connected and non-empty");
  }
  return static_cast<std::size_t>(1 - euler_characteristic(g));
}

bool CountingReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CountingReport check_counting_consistency(const Graph& base, std::size_t d) {
  return check_counting_consistency(base, d, GenerationOptions{});
}

CountingReport check_counting_consistency(const Graph& base, std::size_t d, const GenerationOptions& options) {
  CountingReport report;
  report.degree = d;
  report.rank = rank_from_graph(base);
  if (report.rank < 1) {
    throw std::invalid_argument("check_counting_consistency: base is a tree; every connected cover is trivial");
  }

  const CoverDataset ds = generate_graphcovers(base, d, options);
  report.subgroup_count = hall_count(d, report.rank);
  report.class_count = ds.representatives.size();
  report.connected_voltages = ds.stats.connected;
  report.expected_connected_voltages = factorial(d - 1) * report.subgroup_count;

  const BigInt scaled = BigInt(d) * report.class_count;
  report.checks.push_back({"d*C >= N", scaled >= report.subgroup_count,
                           scaled.str() + " >= " + report.subgroup_count.str()});
  if (report.rank >= 2) {
    report.class_lower_bound = lower_bound(d, report.rank);
    report.checks.push_back({"C >= lower bound", BigInt(report.class_count) >= *report.class_lower_bound,
                             std::to_string(report.class_count) + " >= " + report.class_lower_bound->str()});
  }
  report.checks.push_back({"transitive tuples = (d-1)! N",
                           BigInt(report.connected_voltages) == report.expected_connected_voltages,
                           std::to_string(report.connected_voltages) +
                               " == " + report.expected_connected_voltages.str()});
  return report;
}

}  // namespace wlcovers
