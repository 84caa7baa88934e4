#include "wlcovers/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "wlcovers/cover_iso.hpp"
#include "wlcovers/counting.hpp"
#include "wlcovers/covers.hpp"
#include "wlcovers/dataset.hpp"
#include "wlcovers/io.hpp"
#include "wlcovers/message_passing.hpp"
#include "wlcovers/refine.hpp"

namespace wlcovers {

namespace {

using Clock = std::chrono::steady_clock;

struct RunRecorder {
  RunManifest manifest;
  Clock::time_point start = Clock::now();

  RunRecorder(std::string command, const std::vector<std::string>& args) {
    manifest.command = std::move(command);
    manifest.arguments = args;
  }

  void input(const std::string& path) { manifest.input_digests.emplace_back(path, sha256_hex(read_file(path))); }
  void output(const std::string& path) { manifest.outputs.push_back(path); }

  void write(const std::filesystem::path& path) {
    manifest.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    write_file(path, manifest.to_json().dump(2) + "\n");
  }
};

std::size_t workers_from_env() {
  if (const char* value = std::getenv("WLCOVERS_WORKERS")) {
    try {
      const long parsed = std::stol(value);
      if (parsed > 0) return static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string format_perm(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out + "]";
}

void print_predictions(std::ostream& out, std::size_t d, std::size_t r) {
  const BigInt n = hall_count(d, r);
  out << "subgroups N(" << d << "," << r << ") = " << n << "\n";
  out << "predicted connected voltages (d-1)! N = " << factorial(d - 1) * n << "\n";
  if (r >= 2) out << "lower bound on classes = " << lower_bound(d, r) << "\n";
  out << "classes >= ceil(N / d) = " << (n + d - 1) / d << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weisfeiler-Leman equivalence classes via graph covers", "wlcovers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::function<int()> action;

  // wl-test
  std::string wl_a, wl_b;
  auto* wl = app.add_subcommand("wl-test", "Run the WL test on two edge-list graphs");
  wl->add_option("A", wl_a, "first graph")->required();
  wl->add_option("B", wl_b, "second graph")->required();
  wl->callback([&] {
    action = [&] {
      const WLVerdict v = wl_test(read_graph_file(wl_a), read_graph_file(wl_b));
      if (v.equivalent) {
        out << "equivalent\n";
        return int{kExitAffirmative};
      }
      out << "distinguished at round " << *v.distinguishing_round << "\n";
      return int{kExitNegative};
    };
  });

  // refine
  std::string refine_in, refine_dot;
  auto* refine = app.add_subcommand("refine", "Colour refinement of one graph");
  refine->add_option("A", refine_in, "graph")->required();
  refine->add_option("--dot", refine_dot, "write DOT with stable colours");
  refine->callback([&] {
    action = [&] {
      RunRecorder run("refine", args);
      const Graph g = read_graph_file(refine_in);
      const RefinementTrace trace = color_refine(g);
      const Coloring& c = trace.stable();
      out << "vertices " << g.vertex_count() << "\n";
      out << "stable_round " << trace.stable_round << "\n";
      out << "classes " << c.class_count() << "\n";
      out << "discrete " << (c.class_count() == g.vertex_count() ? "yes" : "no") << "\n";
      out << "colors";
      for (Color x : c.colors) out << " " << x;
      out << "\n";
      if (!refine_dot.empty()) {
        run.input(refine_in);
        write_file(refine_dot, to_dot(g, c));
        run.output(refine_dot);
        run.write(refine_dot + ".run.json");
      }
      return int{kExitAffirmative};
    };
  });

  // build-cover
  std::string bc_base, bc_voltage, bc_out;
  bool bc_dot = false;
  auto* bc = app.add_subcommand("build-cover", "Build the cover given by a voltage assignment");
  bc->add_option("base", bc_base, "base graph")->required();
  bc->add_option("voltage", bc_voltage, "voltage assignment JSON")->required();
  bc->add_option("-o,--output", bc_out, "output edge list")->required();
  bc->add_flag("--dot", bc_dot, "also write <output>.dot with stable colours");
  bc->callback([&] {
    action = [&] {
      RunRecorder run("build-cover", args);
      const Graph base = read_graph_file(bc_base);
      const VoltageAssignment va = read_voltage_file(bc_voltage, base);
      const CoveringMap cm = build_cover(base, va);
      run.input(bc_base);
      run.input(bc_voltage);
      write_file(bc_out, serialize_edge_list(cm.total));
      run.output(bc_out);
      if (bc_dot) {
        write_file(bc_out + ".dot", to_dot(cm.total, stable_coloring(cm.total)));
        run.output(bc_out + ".dot");
      }
      run.write(bc_out + ".run.json");
      out << "cover: " << cm.total.vertex_count() << " vertices, " << cm.total.edge_count() << " edges, "
          << (is_connected(cm.total) ? "connected" : "disconnected") << "\n";
      return int{kExitAffirmative};
    };
  });

  // ucball
  std::string uc_in, uc_dot;
  std::size_t uc_root = 0, uc_radius = 0;
  auto* uc = app.add_subcommand("ucball", "Ball of the universal cover around a vertex");
  uc->add_option("g", uc_in, "graph")->required();
  uc->add_option("--root", uc_root, "root vertex")->required();
  uc->add_option("--radius", uc_radius, "radius")->required();
  uc->add_option("--dot", uc_dot, "write DOT, labelled by base vertex");
  uc->callback([&] {
    action = [&] {
      RunRecorder run("ucball", args);
      const Graph g = read_graph_file(uc_in);
      const RootedTreeBall ball = universal_cover_ball(g, uc_root, uc_radius);
      out << "nodes " << ball.size() << "\n";
      if (ball.size() <= 4096) out << "code " << rooted_tree_canonical(ball) << "\n";
      if (!uc_dot.empty()) {
        run.input(uc_in);
        write_file(uc_dot, to_dot(ball.to_graph(), Coloring{ball.base_vertex}, "ball"));
        run.output(uc_dot);
        run.write(uc_dot + ".run.json");
      }
      return int{kExitAffirmative};
    };
  });

  // cover-iso
  std::string ci_base, ci_a, ci_b;
  bool ci_witness = false;
  auto* ci = app.add_subcommand("cover-iso", "Test two voltage covers of one base for cover isomorphism");
  ci->add_option("base", ci_base, "base graph")->required();
  ci->add_option("voltA", ci_a, "first voltage JSON")->required();
  ci->add_option("voltB", ci_b, "second voltage JSON")->required();
  ci->add_flag("--witness", ci_witness, "print the vertex bijection");
  ci->callback([&] {
    action = [&] {
      const Graph base = read_graph_file(ci_base);
      const CoveringMap a = build_cover(base, read_voltage_file(ci_a, base));
      const CoveringMap b = build_cover(base, read_voltage_file(ci_b, base));
      if (!is_connected(a.total) || !is_connected(b.total)) {
        err << "cover-iso: both covers must be connected\n";
        return int{kExitError};
      }
      const CoverIsoResult r = covers_isomorphic(a, b);
      out << (r.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
      if (!r.isomorphic) out << r.diagnostic << "\n";
      if (ci_witness && r.witness) {
        for (Vertex v = 0; v < r.witness->size(); ++v) out << v << " " << (*r.witness)[v] << "\n";
      }
      return int{r.isomorphic ? kExitAffirmative : kExitNegative};
    };
  });

  // gen-covers
  std::string gc_base, gc_out;
  std::size_t gc_degree = 0;
  std::uint64_t gc_budget = GenerationOptions{}.budget;
  bool gc_dot = false, gc_non_discrete = false;
  auto* gc = app.add_subcommand("gen-covers", "Generate all connected degree-d covers up to isomorphism");
  gc->add_option("base", gc_base, "base graph")->required();
  gc->add_option("--degree", gc_degree, "cover degree")->required()->check(CLI::PositiveNumber);
  gc->add_option("-o,--output", gc_out, "output directory")->required();
  gc->add_option("--budget", gc_budget, "maximum voltage tuples to scan");
  gc->add_flag("--dot", gc_dot, "also write DOT files");
  gc->add_flag("--allow-non-discrete", gc_non_discrete, "accept bases without a discrete stable colouring");
  gc->callback([&] {
    action = [&] {
      RunRecorder run("gen-covers", args);
      const Graph base = read_graph_file(gc_base);
      GenerationOptions options;
      options.budget = gc_budget;
      options.workers = workers_from_env();
      options.require_discrete = !gc_non_discrete;
      CoverDataset ds;
      try {
        ds = generate_graphcovers(base, gc_degree, options);
      } catch (const BudgetExceeded& e) {
        err << "gen-covers: " << e.what() << "\n";
        print_predictions(err, gc_degree, rank_from_graph(base));
        return int{kExitError};
      }
      run.input(gc_base);
      export_dataset(ds, gc_out, {gc_dot});
      run.output((std::filesystem::path(gc_out) / "manifest.json").string());
      run.write(std::filesystem::path(gc_out) / "run.json");
      out << "scanned " << ds.stats.scanned << "\n";
      out << "connected " << ds.stats.connected << "\n";
      out << "classes " << ds.stats.classes << "\n";
      for (const CoverClass& c : ds.representatives) {
        out << "class " << c.label << ":";
        for (const Permutation& p : c.voltage.permutations) out << " " << format_perm(p);
        out << "\n";
      }
      return int{kExitAffirmative};
    };
  });

  // verify
  std::string vf_manifest;
  auto* vf = app.add_subcommand("verify", "Re-check an exported dataset");
  vf->add_option("manifest", vf_manifest, "manifest.json")->required();
  vf->callback([&] {
    action = [&] {
      const CoverDataset ds = load_dataset(vf_manifest);
      const DatasetReport report = verify_dataset(ds);
      for (const DatasetCheck& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      return int{report.passed() ? kExitAffirmative : kExitNegative};
    };
  });

  // count
  std::size_t ct_degree = 0, ct_rank = 0;
  std::string ct_base;
  bool ct_verify = false;
  std::uint64_t ct_budget = GenerationOptions{}.budget;
  auto* ct = app.add_subcommand("count", "Subgroup counts and cover-count bounds");
  ct->add_option("--degree", ct_degree, "cover degree / subgroup index")->required()->check(CLI::PositiveNumber);
  auto* rank_opt = ct->add_option("--rank", ct_rank, "free group rank")->check(CLI::PositiveNumber);
  auto* base_opt = ct->add_option("--base", ct_base, "base graph (rank = 1 - euler characteristic)");
  rank_opt->excludes(base_opt);
  ct->add_flag("--verify", ct_verify, "generate the covers of --base and check the counts")->needs(base_opt);
  ct->add_option("--budget", ct_budget, "maximum voltage tuples to scan");
  ct->callback([&] {
    action = [&] {
      if (ct_base.empty() && ct_rank == 0) {
        err << "count: give --rank or --base\n";
        return int{kExitError};
      }
      std::optional<Graph> base;
      if (!ct_base.empty()) {
        base = read_graph_file(ct_base);
        ct_rank = rank_from_graph(*base);
      }
      if (!ct_verify) {
        print_predictions(out, ct_degree, ct_rank);
        return int{kExitAffirmative};
      }
      GenerationOptions options;
      options.budget = ct_budget;
      options.workers = workers_from_env();
      options.require_discrete = ct_rank >= 2;
      const CountingReport report = check_counting_consistency(*base, ct_degree, options);
      out << "N(" << report.degree << "," << report.rank << ") = " << report.subgroup_count << "\n";
      out << "classes C = " << report.class_count << "\n";
      out << "connected voltages = " << report.connected_voltages << "\n";
      for (const CountingCheck& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      return int{report.passed() ? kExitAffirmative : kExitNegative};
    };
  });

  // mp-check
  std::string mp_manifest, mp_features = "constant";
  std::uint64_t mp_seed = 42;
  std::size_t mp_layers = 2, mp_hidden = 100;
  double mp_tolerance = 1e-6;
  auto* mp = app.add_subcommand("mp-check", "Compare message-passing embeddings of a dataset");
  mp->add_option("manifest", mp_manifest, "manifest.json")->required();
  mp->add_option("--features", mp_features, "constant|degree|random|onehot")
      ->check(CLI::IsMember({"constant", "degree", "random", "onehot"}));
  mp->add_option("--seed", mp_seed, "weight and feature seed");
  mp->add_option("--layers", mp_layers, "message-passing layers")->check(CLI::PositiveNumber);
  mp->add_option("--hidden", mp_hidden, "hidden dimension")->check(CLI::PositiveNumber);
  mp->add_option("--tolerance", mp_tolerance, "L-infinity tolerance");
  mp->callback([&] {
    action = [&] {
      const CoverDataset ds = load_dataset(mp_manifest);
      if (ds.representatives.size() < 2) {
        err << "mp-check: dataset has fewer than two graphs\n";
        return int{kExitError};
      }
      std::vector<Graph> graphs;
      for (const CoverClass& c : ds.representatives) graphs.push_back(c.cover.total);
      const FeatureSpec fs{parse_feature_kind(mp_features), mp_seed};
      MPModelConfig config;
      config.layers = mp_layers;
      config.hidden_dim = mp_hidden;
      config.seed = mp_seed;
      const MPModel model = make_model_for(graphs.front(), fs, config);
      const IndistinguishabilityReport r = indistinguishability_report(graphs, fs, model, mp_tolerance);
      std::ostringstream matrix;
      matrix << std::scientific << std::setprecision(3);
      for (Eigen::Index a = 0; a < r.distances.rows(); ++a) {
        for (Eigen::Index b = 0; b < r.distances.cols(); ++b) matrix << (b ? " " : "") << r.distances(a, b);
        matrix << "\n";
      }
      out << matrix.str();
      const bool predicted_blind = features_are_structural(fs.kind);
      out << "verdict " << (r.indistinguishable ? "indistinguishable" : "distinguishable") << "\n";
      out << "expected " << (predicted_blind ? "indistinguishable" : "distinguishable") << "\n";
      const bool matches = predicted_blind ? r.indistinguishable : r.all_distinct;
      return int{matches ? kExitAffirmative : kExitNegative};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kExitAffirmative} : int{kExitError};
  }
  if (!action) return kExitError;
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace wlcovers
