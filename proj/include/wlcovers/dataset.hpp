#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "wlcovers/counting.hpp"
#include "wlcovers/covers.hpp"

namespace wlcovers {

/// Enumeration refused because (d!)^r exceeds the caller's budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& required, std::uint64_t budget);

  const BigInt& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

/// (d!)^r with r = 1 - χ(base).
BigInt voltage_count(const Graph& base, std::size_t d);

/// True iff the permutations generate a group acting transitively on
/// {0..d-1}; with a connected base this is exactly cover connectivity.
bool is_transitive(const std::vector<Permutation>& perms, std::size_t d);

/// Streams voltage assignments of a connected base in lexicographic order of
/// the permutation tuple (first distinguished edge most significant, each
/// coordinate in lexicographic permutation order). A sub-range of tuple
/// indices [first, last) can be requested for parallel scans.
class VoltageEnumerator {
 public:
  VoltageEnumerator(const Graph& base, std::size_t d);
  VoltageEnumerator(const Graph& base, std::size_t d, std::uint64_t first, std::uint64_t last);

  std::uint64_t total() const { return total_; }
  /// Writes the next assignment into `out`; false once the range is exhausted.
  bool next(VoltageAssignment& out);

 private:
  std::size_t degree_;
  std::vector<Edge> edges_;
  std::uint64_t total_ = 0;
  std::uint64_t position_ = 0;
  std::uint64_t last_ = 0;
  std::vector<Permutation> current_;
};

/// Convenience: every assignment, in enumeration order.
std::vector<VoltageAssignment> enumerate_voltages(const Graph& base, std::size_t d);

/// Lexicographic rank <-> permutation of {0..d-1}.
Permutation unrank_permutation(std::uint64_t rank, std::size_t d);

struct GenerationOptions {
  /// Upper bound on (d!)^r tuples scanned.
  std::uint64_t budget = 10'000'000;
  /// Worker threads; the output does not depend on this.
  std::size_t workers = 1;
  /// When false, non-discrete bases (e.g. cycles) are accepted; cover
  /// classes are then no longer guaranteed to be graph-isomorphism classes.
  bool require_discrete = true;
  /// Stop once this many classes are found.
  std::optional<std::size_t> class_limit;
};

struct CoverClass {
  CoveringMap cover;
  VoltageAssignment voltage;
  std::size_t label = 0;
};

struct DatasetStats {
  std::uint64_t scanned = 0;
  std::uint64_t connected = 0;
  std::uint64_t classes = 0;
};

struct CoverDataset {
  Graph base;
  std::size_t degree = 1;
  std::vector<CoverClass> representatives;
  DatasetStats stats;
};

/// Connected degree-d covers of `base`, one per cover-isomorphism class, in
/// order of first appearance in the voltage enumeration. Throws
/// std::invalid_argument for a disconnected or (by default) non-discrete base
/// and BudgetExceeded when (d!)^r > options.budget.
CoverDataset generate_graphcovers(const Graph& base, std::size_t d, const GenerationOptions& options = {});

struct DatasetCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DatasetReport {
  std::vector<DatasetCheck> checks;

  bool passed() const;
};

struct VerifyOptions {
  /// Cross-check non-isomorphism with graphs_isomorphic up to this order.
  std::size_t max_iso_vertices = 64;
};

/// Re-checks every dataset invariant from scratch.
DatasetReport verify_dataset(const CoverDataset& ds, const VerifyOptions& options = {});

struct ExportOptions {
  bool dot = false;
};

/// Writes base.el, cover_<label>.el (and .dot files on request) and
/// manifest.json into `directory`; returns the manifest. Output bytes depend
/// only on the dataset.
nlohmann::ordered_json export_dataset(const CoverDataset& ds, const std::filesystem::path& directory,
                                      const ExportOptions& options = {});

/// Rebuilds a dataset from an exported manifest. Every cover is rebuilt from
/// its voltage and compared with the edge-list file next to the manifest;
/// a mismatch throws std::runtime_error.
CoverDataset load_dataset(const std::filesystem::path& manifest_path);

}  // namespace wlcovers
