#include "tgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "tgraph/core.hpp"
#include "tgraph/spanner.hpp"

namespace tgraph {

namespace {

constexpr std::pair<Property, std::string_view> kPropertyNames[] = {
    {Property::kP2P, "p2p"},
    {Property::kFirstSource, "first_source"},
    {Property::kSource, "source"},
    {Property::kConnectivity, "connectivity"},
    {Property::kOptimalSpanner, "optimal_spanner"},
    {Property::kTwoHopSource, "two_hop_source"},
};

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::uint64_t>(threads, count); ++t)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::string_view to_string(Property p) {
  for (const auto& [id, name] : kPropertyNames)
    if (id == p) return name;
  return "unknown";
}

std::string_view to_string(GraphModel m) {
  return m == GraphModel::kFnp ? "fnp" : "poisson";
}

std::optional<Property> parse_property(std::string_view s) {
  for (const auto& [id, name] : kPropertyNames)
    if (name == s) return id;
  return std::nullopt;
}

std::optional<GraphModel> parse_model(std::string_view s) {
  if (s == "fnp") return GraphModel::kFnp;
  if (s == "poisson") return GraphModel::kPoisson;
  return std::nullopt;
}

double p_from_factor(std::size_t n, double factor) {
  const double nn = static_cast<double>(n);
  return n < 2 ? factor : factor * std::log(nn) / nn;
}

double factor_from_p(std::size_t n, double p) {
  const double nn = static_cast<double>(n);
  return n < 2 ? p : p * nn / std::log(nn);
}

TemporalGraph sample_model(GraphModel model, std::size_t n, double p,
                           RngStream& rng) {
  return model == GraphModel::kFnp ? sample_fnp(n, p, rng)
                                   : sample_poisson(n, p, rng);
}

bool evaluate_property(Property property, const TemporalGraph& g, double p) {
  switch (property) {
    case Property::kP2P:
      if (g.n() < 2) throw ContractError("p2p needs at least 2 vertices");
      return earliest_arrival_sweep(g, 0).reached(1);
    case Property::kSource:
      return is_temporal_source(g, 0);
    case Property::kFirstSource:
      // One sweep from vertex 0 settles most positive cases; the full
      // matrix is only built when it fails.
      return is_temporal_source(g, 0) || ReachMatrix(g).any_source();
    case Property::kConnectivity:
      return is_temporally_connected(g);
    case Property::kOptimalSpanner:
      try {
        return build_optimal_spanner(g, p).verified;
      } catch (const NoGoodSquareError&) {
        return false;
      }
    case Property::kTwoHopSource:
      return two_hop_source_check(g, 0);
  }
  return false;
}

ExperimentRow estimate_probability(Property property, GraphModel model,
                                   std::size_t n, double p, std::uint64_t trials,
                                   std::uint64_t seed, std::uint64_t first_trial,
                                   unsigned threads) {
  if (trials < 1) throw ContractError("trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<char> hit(trials, 0);
  parallel_for(trials, threads, [&](std::uint64_t i) {
    RngStream rng(seed, first_trial + i);
    hit[i] = evaluate_property(property, sample_model(model, n, p, rng), p);
  });
  ExperimentRow row;
  row.property = property;
  row.model = model;
  row.n = n;
  row.p = p;
  row.factor = factor_from_p(n, p);
  row.trials = trials;
  row.successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  row.estimate = static_cast<double>(row.successes) / static_cast<double>(trials);
  row.seed = seed;
  row.wall_time_ms = elapsed_ms(start);
  return row;
}

void SweepGrid::validate(std::size_t n, GraphModel model) const {
  if (factors.empty()) throw ContractError("sweep grid is empty");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0 && !(factors[i - 1] < factors[i]))
      throw ContractError("sweep factors must be strictly increasing");
    const double p = p_from_factor(n, factors[i]);
    if (!(p >= 0.0) || (model == GraphModel::kFnp && p > 1.0))
      throw ContractError("factor " + std::to_string(factors[i]) +
                          " gives p = " + std::to_string(p) + " outside the model range");
  }
}

std::uint64_t sweep_row_seed(std::uint64_t seed, std::size_t index) {
  return derive_stream_seed(seed, 0x7377656570000000ull + index);
}

std::vector<ExperimentRow> threshold_sweep(Property property, GraphModel model,
                                           std::size_t n, const SweepGrid& grid,
                                           std::uint64_t trials,
                                           std::uint64_t seed, unsigned threads,
                                           bool coupled) {
  grid.validate(n, model);
  if (trials < 1) throw ContractError("trials must be at least 1");
  std::vector<ExperimentRow> rows;
  if (!coupled) {
    for (std::size_t i = 0; i < grid.factors.size(); ++i) {
      rows.push_back(estimate_probability(property, model, n,
                                          p_from_factor(n, grid.factors[i]),
                                          trials, sweep_row_seed(seed, i), 0,
                                          threads));
      rows.back().factor = grid.factors[i];
    }
    return rows;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::size_t k = grid.factors.size();
  std::vector<double> ps(k);
  for (std::size_t i = 0; i < k; ++i) ps[i] = p_from_factor(n, grid.factors[i]);
  // hits[trial * k + i]
  std::vector<char> hits(trials * k, 0);
  parallel_for(trials, threads, [&](std::uint64_t t) {
    RngStream rng(seed, t);
    const TemporalGraph full = sample_model(model, n, ps.back(), rng);
    for (std::size_t i = 0; i < k; ++i)
      hits[t * k + i] = evaluate_property(property, restrict_to(full, 0.0, ps[i]), ps[i]);
  });
  for (std::size_t i = 0; i < k; ++i) {
    ExperimentRow row;
    row.property = property;
    row.model = model;
    row.n = n;
    row.p = ps[i];
    row.factor = grid.factors[i];
    row.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) row.successes += hits[t * k + i];
    row.estimate = static_cast<double>(row.successes) / static_cast<double>(trials);
    row.seed = seed;
    row.wall_time_ms = elapsed_ms(start);
    rows.push_back(row);
  }
  return rows;
}

Crossing crossing_point(const std::vector<ExperimentRow>& rows) {
  Crossing c;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].estimate < 0.5) continue;
    c.factor = rows[i].factor;
    if (i == 0) {
      c.interpolated = rows[i].factor;
    } else {
      const auto& lo = rows[i - 1];
      const auto& hi = rows[i];
      const double span = hi.estimate - lo.estimate;
      c.interpolated = span > 0 ? lo.factor + (0.5 - lo.estimate) / span *
                                                  (hi.factor - lo.factor)
                                : hi.factor;
    }
    break;
  }
  return c;
}

Trajectory trajectory_trial(std::size_t n, std::uint64_t seed,
                            std::uint64_t trial, std::size_t cap) {
  RngStream rng(seed, trial);
  const TemporalGraph g = sample_complete(n, rng, cap);
  return truncate_trajectory(make_trajectory(foremost_tree(g, 0)),
                             truncation_caps(n));
}

TrajectoryTrialStats trajectory_stats(const Trajectory& t) {
  TrajectoryTrialStats s;
  const double nn = static_cast<double>(t.n);
  s.deviation = trajectory_deviation(t);
  s.last_error = t.y_hat.empty()
                     ? 0.0
                     : std::abs(t.y_hat.back() - 2.0 * std::log(nn) / nn);
  s.exact = t.exact;
  s.below = true;
  for (std::size_t k = 0; k < t.y.size(); ++k)
    if (t.y_hat[k] > t.y[k]) s.below = false;
  return s;
}

TrajectorySummary trajectory_experiment(std::size_t n, std::uint64_t trials,
                                        std::uint64_t seed, std::size_t cap) {
  if (trials < 1) throw ContractError("trials must be at least 1");
  TrajectorySummary summary;
  summary.n = n;
  for (std::uint64_t t = 0; t < trials; ++t)
    summary.trials.push_back(trajectory_stats(trajectory_trial(n, seed, t, cap)));
  std::vector<double> devs;
  std::size_t exact = 0;
  for (const auto& s : summary.trials) {
    devs.push_back(s.deviation);
    exact += s.exact;
  }
  std::sort(devs.begin(), devs.end());
  const std::size_t m = devs.size();
  summary.median_deviation =
      m % 2 ? devs[m / 2] : 0.5 * (devs[m / 2 - 1] + devs[m / 2]);
  summary.exact_rate = static_cast<double>(exact) / static_cast<double>(m);
  return summary;
}

}  // namespace tgraph
