#include "wlcovers/dataset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "wlcovers/cover_iso.hpp"
#include "wlcovers/io.hpp"
#include "wlcovers/refine.hpp"

namespace wlcovers {

BudgetExceeded::BudgetExceeded(const BigInt& required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + required.str() + " voltage tuples, budget is " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

BigInt voltage_count(const Graph& base, std::size_t d) {
  const std::size_t r = rank_from_graph(base);
  return boost::multiprecision::pow(factorial(d), static_cast<unsigned>(r));
}

bool is_transitive(const std::vector<Permutation>& perms, std::size_t d) {
  if (d <= 1) return true;
  std::vector<bool> reached(d, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    // Forward images suffice: in a finite group the inverse is a power.
    for (const Permutation& p : perms) {
      if (!reached[p[x]]) {
        reached[p[x]] = true;
        ++count;
        stack.push_back(p[x]);
      }
    }
  }
  return count == d;
}

Permutation unrank_permutation(std::uint64_t rank, std::size_t d) {
  std::vector<std::size_t> pool(d);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(d + 1, 1);
  for (std::size_t k = 1; k <= d; ++k) fact[k] = fact[k - 1] * k;
  if (rank >= fact[d]) throw std::out_of_range("unrank_permutation: rank out of range");
  Permutation out;
  out.reserve(d);
  for (std::size_t k = d; k > 0; --k) {
    const std::uint64_t slot = rank / fact[k - 1];
    rank %= fact[k - 1];
    out.push_back(pool[slot]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(slot));
  }
  return out;
}

VoltageEnumerator::VoltageEnumerator(const Graph& base, std::size_t d)
    : VoltageEnumerator(base, d, 0, std::numeric_limits<std::uint64_t>::max()) {}

VoltageEnumerator::VoltageEnumerator(const Graph& base, std::size_t d, std::uint64_t first, std::uint64_t last)
    : degree_(d), edges_(spanning_tree_split(base).distinguished_edges) {
  if (d < 1) throw std::invalid_argument("VoltageEnumerator: degree must be at least 1");
  const BigInt total = voltage_count(base, d);
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    throw BudgetExceeded(total, std::numeric_limits<std::uint64_t>::max());
  }
  total_ = static_cast<std::uint64_t>(total);
  last_ = std::min(last, total_);
  position_ = std::min(first, last_);

  // Mixed-radix decomposition of the starting index, most significant first.
  const std::uint64_t radix = static_cast<std::uint64_t>(factorial(d));
  std::vector<std::uint64_t> digits(edges_.size(), 0);
  std::uint64_t rest = position_ == total_ ? 0 : position_;
  for (std::size_t k = edges_.size(); k > 0; --k) {
    digits[k - 1] = rest % radix;
    rest /= radix;
  }
  for (std::uint64_t digit : digits) current_.push_back(unrank_permutation(digit, d));
}

bool VoltageEnumerator::next(VoltageAssignment& out) {
  if (position_ >= last_) return false;
  out.degree = degree_;
  out.distinguished_edges = edges_;
  out.permutations = current_;
  ++position_;
  // Odometer step: last coordinate varies fastest.
  for (std::size_t k = current_.size(); k > 0; --k) {
    if (std::next_permutation(current_[k - 1].begin(), current_[k - 1].end())) break;
  }
  return true;
}

std::vector<VoltageAssignment> enumerate_voltages(const Graph& base, std::size_t d) {
  std::vector<VoltageAssignment> out;
  VoltageEnumerator it(base, d);
  VoltageAssignment va;
  while (it.next(va)) out.push_back(va);
  return out;
}

namespace {

// Sorted cycle lengths of every coordinate. Cover isomorphism conjugates the
// whole tuple by one permutation, so isomorphic covers share this key; it is
// only used to skip comparisons that cannot succeed.
using CycleTypeKey = std::vector<std::vector<std::size_t>>;

CycleTypeKey cycle_type_key(const std::vector<Permutation>& perms) {
  CycleTypeKey key;
  for (const Permutation& p : perms) {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
      std::size_t length = 0;
      for (std::size_t x = start; !seen[x]; x = p[x]) {
        seen[x] = true;
        ++length;
      }
      if (length > 0) lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end());
    key.push_back(std::move(lengths));
  }
  return key;
}

struct ScanResult {
  std::vector<CoverClass> classes;
  std::vector<CycleTypeKey> keys;
  DatasetStats stats;
};

bool matches_any(const std::vector<CoverClass>& classes, const std::vector<CycleTypeKey>& keys,
                 const CoveringMap& candidate, const CycleTypeKey& key) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (keys[i] == key && covers_isomorphic(classes[i].cover, candidate).isomorphic) return true;
  }
  return false;
}

ScanResult scan_range(const Graph& base, std::size_t d, std::uint64_t first, std::uint64_t last,
                      std::optional<std::size_t> class_limit) {
  ScanResult out;
  VoltageEnumerator it(base, d, first, last);
  VoltageAssignment va;
  while (it.next(va)) {
    ++out.stats.scanned;
    if (!is_transitive(va.permutations, d)) continue;
    ++out.stats.connected;
    CoveringMap cover = build_cover(base, va);
    CycleTypeKey key = cycle_type_key(va.permutations);
    if (matches_any(out.classes, out.keys, cover, key)) continue;
    out.classes.push_back({std::move(cover), va, out.classes.size()});
    out.keys.push_back(std::move(key));
    if (class_limit && out.classes.size() >= *class_limit) break;
  }
  return out;
}

}  // namespace

CoverDataset generate_graphcovers(const Graph& base, std::size_t d, const GenerationOptions& options) {
  if (d < 1) throw std::invalid_argument("generate_graphcovers: degree must be at least 1");
  if (base.vertex_count() == 0 || !is_connected(base)) {
    throw std::invalid_argument("generate_graphcovers: base graph must be connected and non-empty");
  }
  if (options.require_discrete && !is_discrete(base)) {
    throw std::invalid_argument("generate_graphcovers: base graph's stable colouring is not discrete");
  }
  const BigInt required = voltage_count(base, d);
  if (required > options.budget) throw BudgetExceeded(required, options.budget);
  const auto total = static_cast<std::uint64_t>(required);

  CoverDataset ds;
  ds.base = base;
  ds.degree = d;

  const std::size_t workers = options.class_limit ? 1 : std::max<std::size_t>(1, options.workers);
  std::vector<ScanResult> partial(std::min<std::uint64_t>(workers, total));
  if (partial.size() <= 1) {
    ScanResult all = scan_range(base, d, 0, total, options.class_limit);
    ds.representatives = std::move(all.classes);
    ds.stats = all.stats;
  } else {
    {
      std::vector<std::jthread> threads;
      const std::uint64_t chunk = (total + partial.size() - 1) / partial.size();
      for (std::size_t w = 0; w < partial.size(); ++w) {
        const std::uint64_t first = std::min(total, w * chunk);
        const std::uint64_t last = std::min(total, first + chunk);
        threads.emplace_back([&, w, first, last] { partial[w] = scan_range(base, d, first, last, std::nullopt); });
      }
    }
    // Ranges are merged in order, so each class keeps its lexicographically
    // first voltage and classes keep their order of first appearance.
    std::vector<CycleTypeKey> merged_keys;
    for (ScanResult& part : partial) {
      ds.stats.scanned += part.stats.scanned;
      ds.stats.connected += part.stats.connected;
      for (std::size_t i = 0; i < part.classes.size(); ++i) {
        CoverClass& c = part.classes[i];
        if (matches_any(ds.representatives, merged_keys, c.cover, part.keys[i])) continue;
        c.label = ds.representatives.size();
        ds.representatives.push_back(std::move(c));
        merged_keys.push_back(std::move(part.keys[i]));
      }
    }
  }
  ds.stats.classes = ds.representatives.size();
  return ds;
}

bool DatasetReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const DatasetCheck& c) { return c.passed; });
}

DatasetReport verify_dataset(const CoverDataset& ds, const VerifyOptions& options) {
  DatasetReport report;
  const auto& reps = ds.representatives;
  const std::size_t expected_vertices = ds.degree * ds.base.vertex_count();
  const std::size_t expected_edges = ds.degree * ds.base.edge_count();

  auto add = [&](std::string name, std::string failure, std::string success) {
    const bool ok = failure.empty();
    report.checks.push_back({std::move(name), ok, ok ? std::move(success) : std::move(failure)});
  };

  std::string failure;
  for (const CoverClass& c : reps) {
    if (!(c.cover.base == ds.base)) {
      failure = "class " + std::to_string(c.label) + " has a different base";
      break;
    }
    const CoverCheck check = validate_covering(c.cover);
    if (!check.ok) {
      failure = "class " + std::to_string(c.label) + ": " + check.message;
      break;
    }
  }
  add("valid covering", failure, std::to_string(reps.size()) + " covers valid");

  failure.clear();
  bool all_connected = true;
  for (const CoverClass& c : reps) {
    if (!is_connected(c.cover.total)) {
      all_connected = false;
      failure = "class " + std::to_string(c.label) + " is disconnected";
      break;
    }
    if (c.cover.total.vertex_count() != expected_vertices || c.cover.total.edge_count() != expected_edges) {
      failure = "class " + std::to_string(c.label) + " has " + std::to_string(c.cover.total.vertex_count()) +
                " vertices and " + std::to_string(c.cover.total.edge_count()) + " edges";
      break;
    }
  }
  add("connected, order d|V|, size d|E|", failure,
      std::to_string(expected_vertices) + " vertices, " + std::to_string(expected_edges) + " edges each");

  failure.clear();
  for (const CoverClass& c : reps) {
    const CoverCheck check = lift_check(c.cover);
    if (!check.ok) {
      failure = "class " + std::to_string(c.label) + ": " + check.message;
      break;
    }
  }
  add("colour lift", failure, "every vertex carries its image's colour in every round");

  failure.clear();
  for (std::size_t a = 0; a < reps.size() && failure.empty(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (!wl_test(reps[a].cover.total, reps[b].cover.total).equivalent) {
        failure = "classes " + std::to_string(a) + " and " + std::to_string(b) + " are WL-distinguished";
        break;
      }
    }
  }
  add("pairwise WL equivalent", failure, "all pairs equivalent");

  failure.clear();
  std::size_t graph_checked = 0;
  // Cover isomorphism is only defined here between connected covers.
  if (!all_connected) failure = "not checked: a representative is disconnected";
  for (std::size_t a = 0; a < reps.size() && failure.empty(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (covers_isomorphic(reps[a].cover, reps[b].cover).isomorphic) {
        failure = "classes " + std::to_string(a) + " and " + std::to_string(b) + " are isomorphic covers";
        break;
      }
      if (expected_vertices <= options.max_iso_vertices) {
        ++graph_checked;
        if (graphs_isomorphic(reps[a].cover.total, reps[b].cover.total, options.max_iso_vertices)) {
          failure = "classes " + std::to_string(a) + " and " + std::to_string(b) + " are isomorphic graphs";
          break;
        }
      }
    }
  }
  add("pairwise non-isomorphic", failure,
      "no cover isomorphisms; " + std::to_string(graph_checked) + " pairs cross-checked as graphs");

  const std::int64_t chi = euler_characteristic(ds.base);
  if (is_connected(ds.base) && chi <= -1) {
    const std::size_t r = static_cast<std::size_t>(1 - chi);
    const BigInt bound = lower_bound(ds.degree, r);
    failure.clear();
    if (BigInt(reps.size()) < bound) {
      failure = std::to_string(reps.size()) + " < " + bound.str();
    }
    add("class count >= lower bound", failure, std::to_string(reps.size()) + " >= " + bound.str());
  }
  return report;
}

nlohmann::ordered_json export_dataset(const CoverDataset& ds, const std::filesystem::path& directory,
                                      const ExportOptions& options) {
  std::filesystem::create_directories(directory);
  write_file(directory / "base.el", serialize_edge_list(ds.base));

  nlohmann::ordered_json manifest;
  manifest["format"] = "graphcovers-manifest/1";
  manifest["base"] = {{"file", "base.el"},
                      {"vertices", ds.base.vertex_count()},
                      {"edges", ds.base.edge_count()},
                      {"euler_characteristic", euler_characteristic(ds.base)}};
  manifest["degree"] = ds.degree;
  manifest["stats"] = {{"scanned", ds.stats.scanned}, {"connected", ds.stats.connected}, {"classes", ds.stats.classes}};
  manifest["representatives"] = nlohmann::ordered_json::array();
  for (const CoverClass& c : ds.representatives) {
    const std::string stem = "cover_" + std::to_string(c.label);
    write_file(directory / (stem + ".el"), serialize_edge_list(c.cover.total));
    nlohmann::ordered_json entry;
    entry["label"] = c.label;
    entry["file"] = stem + ".el";
    if (options.dot) {
      write_file(directory / (stem + ".dot"), to_dot(c.cover.total, stable_coloring(c.cover.total), stem));
      entry["dot"] = stem + ".dot";
    }
    entry["vertices"] = c.cover.total.vertex_count();
    entry["edges"] = c.cover.total.edge_count();
    entry["voltage"] = voltage_to_json(c.voltage);
    manifest["representatives"].push_back(std::move(entry));
  }
  write_file(directory / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

CoverDataset load_dataset(const std::filesystem::path& manifest_path) {
  const auto dir = manifest_path.parent_path();
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, manifest_path.string() + ": " + e.what());
  }
  try {
    CoverDataset ds;
    ds.base = read_graph_file(dir / manifest.at("base").at("file").get<std::string>());
    ds.degree = manifest.at("degree").get<std::size_t>();
    const auto& stats = manifest.at("stats");
    ds.stats = {stats.at("scanned").get<std::uint64_t>(), stats.at("connected").get<std::uint64_t>(),
                stats.at("classes").get<std::uint64_t>()};
    for (const auto& entry : manifest.at("representatives")) {
      CoverClass c;
      c.label = entry.at("label").get<std::size_t>();
      c.voltage = voltage_from_json(entry.at("voltage"), ds.base);
      if (c.voltage.degree != ds.degree) throw std::runtime_error("voltage degree differs from manifest degree");
      c.cover = build_cover(ds.base, c.voltage);
      const Graph on_disk = read_graph_file(dir / entry.at("file").get<std::string>());
      if (!(on_disk == c.cover.total)) {
        throw std::runtime_error("class " + std::to_string(c.label) + ": " +
                                 entry.at("file").get<std::string>() + " does not match its voltage");
      }
      ds.representatives.push_back(std::move(c));
    }
    return ds;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, manifest_path.string() + ": " + e.what());
  }
}

}  // namespace wlcovers
