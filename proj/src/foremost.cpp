#include "tgraph/foremost.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "tgraph/core.hpp"

namespace tgraph {

std::vector<double> ForemostTree::trajectory() const {
  std::vector<double> y;
  y.reserve(attach_order.size());
  for (const auto& e : attach_order) y.push_back(e.t);
  return y;
}

std::vector<Appearance> ForemostTree::appearances() const {
  std::vector<Appearance> out;
  out.reserve(attach_order.size());
  for (const auto& e : attach_order)
    out.push_back({std::min(e.parent, e.child), std::max(e.parent, e.child), e.t});
  return out;
}

namespace {

// Prim-style growth. Each tree vertex keeps a cursor into its incidence list
// (sorted by label, slot); everything before the cursor is either earlier than
// the vertex's arrival or leads back into the tree. The heap holds at most one
// candidate per tree vertex and stale entries are re-validated on pop.
ForemostTree grow(const TemporalGraph& g, Vertex root) {
  if (root >= g.n())
    throw ContractError("vertex " + std::to_string(root) + " out of range");
  ForemostTree tree;
  tree.root = root;
  tree.root_time = g.window().start;
  tree.parent.assign(g.n(), std::nullopt);
  tree.attach_order.reserve(g.n() ? g.n() - 1 : 0);

  struct Candidate {
    double t;
    Slot slot;
    Vertex from;
    bool operator>(const Candidate& o) const {
      return t > o.t || (t == o.t && slot > o.slot);
    }
  };
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  std::vector<char> in_tree(g.n(), 0);
  std::vector<std::size_t> cursor(g.n(), 0);

  auto offer = [&](Vertex a) {
    auto inc = g.incidences(a);
    std::size_t& c = cursor[a];
    while (c < inc.size() && in_tree[inc[c].neighbor]) ++c;
    if (c < inc.size()) heap.push({inc[c].t, inc[c].slot, a});
  };
  auto enter = [&](Vertex a, double t) {
    in_tree[a] = 1;
    auto inc = g.incidences(a);
    cursor[a] = static_cast<std::size_t>(
        std::lower_bound(inc.begin(), inc.end(), t,
                         [](const auto& i, double x) { return i.t < x; }) -
        inc.begin());
    offer(a);
  };

  enter(root, tree.root_time);
  for (std::size_t k = 1; k < g.n(); ++k) {
    bool attached = false;
    while (!heap.empty() && !attached) {
      const Candidate top = heap.top();
      heap.pop();
      const auto& inc = g.incidences(top.from)[cursor[top.from]];
      ++cursor[top.from];
      if (!in_tree[inc.neighbor]) {
        const TreeEdge e{top.from, inc.neighbor, inc.t, inc.slot};
        tree.parent[inc.neighbor] = e;
        tree.attach_order.push_back(e);
        enter(inc.neighbor, inc.t);
        attached = true;
      }
      offer(top.from);
    }
    if (!attached)
      throw NotSourceError("vertex " + std::to_string(root) +
                               " is not a temporal source: no eligible cut edge "
                               "at step " + std::to_string(k),
                           k);
  }
  return tree;
}

}  // namespace

ForemostTree foremost_tree(const TemporalGraph& g, Vertex v) {
  if (!g.is_simple())
    throw ContractError("foremost_tree requires a simple temporal graph");
  return grow(g, v);
}

ForemostTree foremost_tree_multilabel(const TemporalGraph& g, Vertex v) {
  return grow(g, v);
}

ForemostTree reverse_foremost_tree(const TemporalGraph& g, Vertex v) {
  const TemporalGraph reversed = reverse_time(g);
  ForemostTree tree;
  try {
    tree = grow(reversed, v);
  } catch (const NotSourceError& e) {
    throw NotSourceError("vertex " + std::to_string(v) +
                             " is not a temporal sink: no eligible cut edge at "
                             "step " + std::to_string(e.step()),
                         e.step());
  }
  tree.direction = TimeDirection::kBackward;
  tree.root_time = g.window().end;
  for (auto& e : tree.attach_order) {
    e.slot = reversed_slot(g, e.slot);
    e.t = g.label(e.slot);
    tree.parent[e.child] = e;
  }
  return tree;
}

Trajectory make_trajectory(const ForemostTree& tree) {
  Trajectory t;
  t.n = tree.n();
  t.y0 = tree.root_time;
  t.y = tree.trajectory();
  t.x.reserve(t.y.size());
  double prev = t.y0;
  for (double y : t.y) {
    t.x.push_back(y - prev);
    prev = y;
  }
  return t;
}

std::vector<double> truncation_caps(std::size_t n) {
  if (n < 3)
    throw ContractError("truncation caps need n >= 3 (ln ln n must be positive)");
  const double nn = static_cast<double>(n);
  const double loglog = std::log(std::log(nn));
  std::vector<double> caps(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double m = static_cast<double>(std::min(k, n - k));
    caps[k - 1] = (2.0 * std::log(m) + loglog) / (kk * (nn - kk));
  }
  return caps;
}

Trajectory truncate_trajectory(Trajectory t, const std::vector<double>& caps) {
  if (caps.size() != t.x.size())
    throw ContractError("cap count does not match trajectory length");
  t.caps = caps;
  t.x_hat.resize(t.x.size());
  t.y_hat.resize(t.x.size());
  t.exact = true;
  // y_hat = y minus the accumulated truncated excess, which keeps y_hat <= y
  // exact in floating point and y_hat == y bitwise when nothing was cut.
  double excess = 0.0;
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (t.x[i] > caps[i]) {
      t.exact = false;
      excess += t.x[i] - caps[i];
    }
    t.x_hat[i] = std::min(t.x[i], caps[i]);
    t.y_hat[i] = t.y[i] - excess;
  }
  return t;
}

double reference_curve(std::size_t n, std::size_t k) {
  if (k >= std::max<std::size_t>(n, 1))
    throw ContractError("reference curve needs 0 <= k <= n - 1");
  double sum = 0.0;
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= k; ++i) {
    const double ii = static_cast<double>(i);
    sum += 1.0 / (ii * (nn - ii) + 1.0);
  }
  return sum;
}

double trajectory_deviation(const Trajectory& t) {
  double worst = 0.0;
  double ref = 0.0;
  const double nn = static_cast<double>(t.n);
  for (std::size_t k = 1; k <= t.y_hat.size(); ++k) {
    const double kk = static_cast<double>(k);
    ref += 1.0 / (kk * (nn - kk) + 1.0);
    worst = std::max(worst, std::abs(t.y_hat[k - 1] - ref));
  }
  return worst;
}

}  // namespace tgraph
