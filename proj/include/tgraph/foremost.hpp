#pragma once

#include <optional>
#include <vector>

#include "tgraph/temporal_graph.hpp"

namespace tgraph {

enum class TimeDirection { kForward, kBackward };

struct TreeEdge {
  Vertex parent;
  Vertex child;
  double t;
  Slot slot;  // appearance in the graph the tree was built on
};

/// Spanning temporal tree grown from `root`.
///
/// Forward trees are increasing: labels never decrease from the root outward
/// and the label on the edge into u is u's foremost arrival time. Backward
/// trees are decreasing: every vertex reaches the root, and the label on the
/// edge out of u is its latest departure time.
struct ForemostTree {
  Vertex root = 0;
  TimeDirection direction = TimeDirection::kForward;
  double root_time = 0.0;
  std::vector<std::optional<TreeEdge>> parent;  // indexed by child
  std::vector<TreeEdge> attach_order;           // e_1 .. e_{n-1}

  std::size_t n() const { return parent.size(); }
  /// Y_1..Y_{n-1}: labels of the tree edges in insertion order.
  std::vector<double> trajectory() const;
  /// Label on the tree edge at u, or root_time for the root.
  double arrival(Vertex u) const {
    return parent[u] ? parent[u]->t : root_time;
  }
  std::vector<Appearance> appearances() const;
};

/// Greedy foremost tree on a simple graph: repeatedly attaches the cut
/// appearance of minimum (label, slot) that keeps the tree increasing.
/// Throws ContractError on a multi-label graph and NotSourceError when some
/// step finds no eligible cut edge (v is not a temporal source).
ForemostTree foremost_tree(const TemporalGraph& g, Vertex v);

/// Same loop where each cut edge offers its earliest label that keeps the tree
/// increasing. Identical to foremost_tree on simple graphs.
ForemostTree foremost_tree_multilabel(const TemporalGraph& g, Vertex v);

/// foremost_tree_multilabel(reverse_time(g), v) with every edge mapped back to
/// its original appearance. Throws NotSourceError if v is not a temporal sink.
ForemostTree reverse_foremost_tree(const TemporalGraph& g, Vertex v);

/// Growth curve of a foremost tree with waiting times and their truncation.
/// Vectors are indexed by step: element k-1 holds step k, for k = 1..n-1.
struct Trajectory {
  std::size_t n = 0;
  double y0 = 0.0;
  std::vector<double> y;
  std::vector<double> x;
  std::vector<double> caps;
  std::vector<double> x_hat;
  std::vector<double> y_hat;
  /// True iff no waiting time exceeded its cap, so y_hat == y.
  bool exact = true;
};

/// Raw trajectory (y and x only) of a forward tree.
Trajectory make_trajectory(const ForemostTree& tree);

/// c_k = (2 ln min(k, n-k) + ln ln n) / (k (n-k)) for k = 1..n-1.
/// Throws ContractError for n < 3.
std::vector<double> truncation_caps(std::size_t n);

/// Fills caps, x_hat = min(x, c) and their prefix sums y_hat.
Trajectory truncate_trajectory(Trajectory t, const std::vector<double>& caps);

/// sum_{i=1}^{k} 1 / (i (n - i) + 1).
double reference_curve(std::size_t n, std::size_t k);

/// max_k |y_hat_k - reference_curve(n, k)|.
double trajectory_deviation(const Trajectory& t);

}  // namespace tgraph
