#include "wlcovers/message_passing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wlcovers {

FeatureKind parse_feature_kind(std::string_view name) {
  if (name == "constant") return FeatureKind::kConstant;
  if (name == "degree") return FeatureKind::kDegree;
  if (name == "random") return FeatureKind::kRandom;
  if (name == "onehot" || name == "one_hot_id") return FeatureKind::kOneHot;
  throw std::invalid_argument("unknown feature kind '" + std::string(name) + "'");
}

std::string_view feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kConstant: return "constant";
    case FeatureKind::kDegree: return "degree";
    case FeatureKind::kRandom: return "random";
    case FeatureKind::kOneHot: return "onehot";
  }
  return "?";
}

bool features_are_structural(FeatureKind kind) {
  return kind == FeatureKind::kConstant || kind == FeatureKind::kDegree;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t feature_dimension(const FeatureSpec& fs, const Graph& g) {
  return fs.kind == FeatureKind::kOneHot ? g.vertex_count() : 1;
}

Eigen::MatrixXd node_features(const Graph& g, const FeatureSpec& fs) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  switch (fs.kind) {
    case FeatureKind::kConstant:
      return Eigen::MatrixXd::Ones(n, 1);
    case FeatureKind::kDegree: {
      Eigen::MatrixXd x(n, 1);
      for (Eigen::Index v = 0; v < n; ++v) x(v, 0) = static_cast<double>(g.degree(static_cast<Vertex>(v)));
      return x;
    }
    case FeatureKind::kRandom: {
      Eigen::MatrixXd x(n, 1);
      for (Eigen::Index v = 0; v < n; ++v) {
        SplitMix64 rng(fs.seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(v + 1)));
        x(v, 0) = rng.normal();
      }
      return x;
    }
    case FeatureKind::kOneHot:
      return Eigen::MatrixXd::Identity(n, n);
  }
  throw std::logic_error("unhandled feature kind");
}

MPModel::MPModel(const MPModelConfig& config) : config_(config) {
  if (config.layers == 0 || config.hidden_dim == 0 || config.input_dim == 0) {
    throw std::invalid_argument("MPModel: dimensions and layer count must be positive");
  }
  SplitMix64 rng(config.seed);
  auto draw = [&rng](std::size_t rows, std::size_t cols) {
    const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Eigen::MatrixXd w(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = (2.0 * rng.uniform() - 1.0) * limit;
    }
    return w;
  };
  std::size_t in = config.input_dim;
  for (std::size_t l = 0; l < config.layers; ++l) {
    self_weights_.push_back(draw(config.hidden_dim, in));
    neighbor_weights_.push_back(draw(config.hidden_dim, in));
    in = config.hidden_dim;
  }
}

Eigen::VectorXd MPModel::embed(const Graph& g, const Eigen::MatrixXd& features) const {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (features.rows() != n) throw std::invalid_argument("MPModel::embed: one feature row per vertex required");
  if (static_cast<std::size_t>(features.cols()) != config_.input_dim) {
    throw std::invalid_argument("MPModel::embed: feature dimension " + std::to_string(features.cols()) +
                                " does not match model input dimension " + std::to_string(config_.input_dim));
  }
  // Rows are vertices.
  Eigen::MatrixXd x = features;
  for (std::size_t l = 0; l < config_.layers; ++l) {
    Eigen::MatrixXd agg = Eigen::MatrixXd::Zero(n, x.cols());
    for (Eigen::Index v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) agg.row(v) += x.row(static_cast<Eigen::Index>(u));
      if (config_.aggregation == Aggregation::kMean && g.degree(static_cast<Vertex>(v)) > 0) {
        agg.row(v) /= static_cast<double>(g.degree(static_cast<Vertex>(v)));
      }
    }
    x = (x * self_weights_[l].transpose() + agg * neighbor_weights_[l].transpose()).cwiseMax(0.0);
  }
  const auto h = static_cast<Eigen::Index>(config_.hidden_dim);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * h);
  if (n == 0) return out;
  out.head(h) = x.colwise().mean().transpose();
  out.tail(h) = x.colwise().maxCoeff().transpose();
  return out;
}

Eigen::VectorXd embed_graph(const Graph& g, const FeatureSpec& fs, const MPModel& m) {
  return m.embed(g, node_features(g, fs));
}

MPModel make_model_for(const Graph& g, const FeatureSpec& fs, MPModelConfig config) {
  config.input_dim = feature_dimension(fs, g);
  return MPModel(config);
}

IndistinguishabilityReport indistinguishability_report(const std::vector<Graph>& graphs, const FeatureSpec& fs,
                                                       const MPModel& m, double tolerance) {
  if (graphs.size() < 2) throw std::invalid_argument("indistinguishability_report: need at least two graphs");
  std::vector<Eigen::VectorXd> embeddings;
  for (const Graph& g : graphs) embeddings.push_back(embed_graph(g, fs, m));

  const auto k = static_cast<Eigen::Index>(graphs.size());
  IndistinguishabilityReport report;
  report.tolerance = tolerance;
  report.distances = Eigen::MatrixXd::Zero(k, k);
  report.min_distance = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a + 1; b < k; ++b) {
      const double dist = (embeddings[static_cast<std::size_t>(a)] - embeddings[static_cast<std::size_t>(b)])
                              .cwiseAbs()
                              .maxCoeff();
      report.distances(a, b) = report.distances(b, a) = dist;
      report.max_distance = std::max(report.max_distance, dist);
      report.min_distance = std::min(report.min_distance, dist);
    }
  }
  report.indistinguishable = report.max_distance < tolerance;
  report.all_distinct = report.min_distance > tolerance;
  return report;
}

}  // namespace wlcovers
