#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tgraph/foremost.hpp"
#include "tgraph/gen.hpp"
#include "tgraph/temporal_graph.hpp"

namespace tgraph {

enum class Property {
  kP2P,             // vertex 0 reaches vertex 1
  kFirstSource,     // some vertex is a temporal source
  kSource,          // vertex 0 is a temporal source
  kConnectivity,    // every vertex is a temporal source
  kOptimalSpanner,  // build_optimal_spanner succeeds and verifies
  kTwoHopSource,    // two_hop_source_check at vertex 0
};

enum class GraphModel { kFnp, kPoisson };

std::string_view to_string(Property p);
std::string_view to_string(GraphModel m);
std::optional<Property> parse_property(std::string_view s);
std::optional<GraphModel> parse_model(std::string_view s);

struct ExperimentRow {
  Property property = Property::kP2P;
  GraphModel model = GraphModel::kFnp;
  std::size_t n = 0;
  double p = 0.0;
  double factor = 0.0;  // p n / ln n
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
};

/// p = factor * ln n / n.
double p_from_factor(std::size_t n, double factor);
double factor_from_p(std::size_t n, double p);

TemporalGraph sample_model(GraphModel model, std::size_t n, double p,
                           RngStream& rng);

/// Evaluates one property on a sample drawn at parameter p (p is only used
/// to partition windows for kOptimalSpanner).
bool evaluate_property(Property property, const TemporalGraph& g, double p);

/// Successes over trials first_trial .. first_trial + trials - 1, trial i
/// drawing from stream (seed, i). Deterministic for any thread count.
ExperimentRow estimate_probability(Property property, GraphModel model,
                                   std::size_t n, double p, std::uint64_t trials,
                                   std::uint64_t seed,
                                   std::uint64_t first_trial = 0,
                                   unsigned threads = 1);

struct SweepGrid {
  std::vector<double> factors;
  /// Throws ContractError unless factors are strictly increasing and every
  /// derived p is in [0, 1] (fnp) or nonnegative (poisson).
  void validate(std::size_t n, GraphModel model) const;
};

/// Seed used for row `index` of a sweep run with master seed `seed`.
std::uint64_t sweep_row_seed(std::uint64_t seed, std::size_t index);

/// One row per grid factor. Uncoupled rows use sweep_row_seed(seed, i), so
/// each row can be reproduced alone with estimate_probability. Coupled mode
/// draws one sample per trial at the largest p and restricts it to each p,
/// which makes monotone properties monotone along the grid trial by trial.
std::vector<ExperimentRow> threshold_sweep(Property property, GraphModel model,
                                           std::size_t n, const SweepGrid& grid,
                                           std::uint64_t trials,
                                           std::uint64_t seed,
                                           unsigned threads = 1,
                                           bool coupled = false);

struct Crossing {
  std::optional<double> factor;        // first grid factor with estimate >= 0.5
  std::optional<double> interpolated;  // linear interpolation to 0.5
};
Crossing crossing_point(const std::vector<ExperimentRow>& rows);

/// One trajectory run: F(n,1) sample, foremost tree from vertex 0, truncation.
Trajectory trajectory_trial(std::size_t n, std::uint64_t seed,
                            std::uint64_t trial,
                            std::size_t cap = kDefaultCompleteCap);

struct TrajectoryTrialStats {
  double deviation = 0.0;   // max_k |y_hat_k - reference_curve(n, k)|
  double last_error = 0.0;  // |y_hat_{n-1} - 2 ln n / n|
  bool exact = false;       // y_hat == y
  bool below = false;       // y_hat_k <= y_k for all k
};
TrajectoryTrialStats trajectory_stats(const Trajectory& t);

struct TrajectorySummary {
  std::size_t n = 0;
  std::vector<TrajectoryTrialStats> trials;
  double median_deviation = 0.0;
  double exact_rate = 0.0;
};
TrajectorySummary trajectory_experiment(std::size_t n, std::uint64_t trials,
                                        std::uint64_t seed,
                                        std::size_t cap = kDefaultCompleteCap);

}  // namespace tgraph
