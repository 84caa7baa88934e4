#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wlcovers/graph.hpp"

namespace wlcovers {

enum class FeatureKind { kConstant, kDegree, kRandom, kOneHot };

FeatureKind parse_feature_kind(std::string_view name);
std::string_view feature_kind_name(FeatureKind kind);

/// Node features.
///
///   constant: 1.0, one column
///   degree:   vertex degree, one column
///   random:   standard normal per vertex, drawn from (seed, vertex)
///   one-hot:  |V| columns, identity matrix
struct FeatureSpec {
  FeatureKind kind = FeatureKind::kConstant;
  std::uint64_t seed = 0;
};

std::size_t feature_dimension(const FeatureSpec& fs, const Graph& g);
Eigen::MatrixXd node_features(const Graph& g, const FeatureSpec& fs);

/// Only structure-only features are predicted to be blind to covers.
bool features_are_structural(FeatureKind kind);

/// SplitMix64 stream. Fixed so that weights are reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Box-Muller.
  double normal();

 private:
  std::uint64_t state_;
};

enum class Aggregation { kSum, kMean };

struct MPModelConfig {
  std::size_t input_dim = 1;
  std::size_t hidden_dim = 100;
  std::size_t layers = 2;
  std::uint64_t seed = 42;
  Aggregation aggregation = Aggregation::kSum;
};

/// Untrained message-passing network:
///   x_{l+1}(v) = relu(W_self_l x_l(v) + W_nbr_l AGG_{u in N(v)} x_l(u))
/// followed by [mean-pool || max-pool] over vertices. Weights are
/// Glorot-uniform draws from SplitMix64(seed), self matrix before neighbour
/// matrix, layer by layer, row-major.
class MPModel {
 public:
  explicit MPModel(const MPModelConfig& config);

  const MPModelConfig& config() const { return config_; }
  std::size_t output_dim() const { return 2 * config_.hidden_dim; }

  /// Throws std::invalid_argument when features.cols() != input_dim.
  Eigen::VectorXd embed(const Graph& g, const Eigen::MatrixXd& features) const;

 private:
  MPModelConfig config_;
  std::vector<Eigen::MatrixXd> self_weights_;
  std::vector<Eigen::MatrixXd> neighbor_weights_;
};

Eigen::VectorXd embed_graph(const Graph& g, const FeatureSpec& fs, const MPModel& m);

struct IndistinguishabilityReport {
  /// L∞ distances between graph embeddings.
  Eigen::MatrixXd distances;
  double max_distance = 0.0;
  double min_distance = 0.0;  // over distinct pairs
  double tolerance = 0.0;
  /// All pairwise distances below tolerance.
  bool indistinguishable = false;
  /// All pairwise distances above tolerance.
  bool all_distinct = false;
};

/// Embeds every graph and compares all pairs. Requires at least two graphs.
IndistinguishabilityReport indistinguishability_report(const std::vector<Graph>& graphs, const FeatureSpec& fs,
                                                       const MPModel& m, double tolerance = 1e-6);

/// Model whose input width fits `fs` on `g`.
MPModel make_model_for(const Graph& g, const FeatureSpec& fs, MPModelConfig config = {});

}  // namespace wlcovers
