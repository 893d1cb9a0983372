#include "tgraph/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgraph/core.hpp"
#include "tgraph/foremost.hpp"

namespace tgraph {

std::size_t spanner_size_lower_bound(std::size_t n) {
  if (n < 4) throw ContractError("the 2n-4 bound is stated for n >= 4");
  return 2 * n - 4;
}

namespace {

struct Hit {
  Vertex neighbor;
  double t;
};

// Per-vertex neighbours whose edge has a label in [lo, hi], sorted by id.
std::vector<std::vector<Hit>> window_adjacency(const TemporalGraph& g, double lo,
                                               double hi) {
  std::vector<std::vector<Hit>> adj(g.n());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto ls = g.labels(e);
    auto it = std::lower_bound(ls.begin(), ls.end(), lo);
    if (it == ls.end() || *it > hi) continue;
    adj[g.edge(e).u].push_back({g.edge(e).v, *it});
    adj[g.edge(e).v].push_back({g.edge(e).u, *it});
  }
  for (auto& list : adj)
    std::sort(list.begin(), list.end(),
              [](const Hit& a, const Hit& b) { return a.neighbor < b.neighbor; });
  return adj;
}

const Hit* find_hit(const std::vector<Hit>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Hit& h, Vertex x) { return h.neighbor < x; });
  return it != list.end() && it->neighbor == v ? &*it : nullptr;
}

}  // namespace

void for_each_square(const TemporalGraph& g, const WindowPartition& windows,
                     const std::function<bool(const Square&)>& visit) {
  const auto early = window_adjacency(g, windows.p1, windows.p2);
  const auto late = window_adjacency(g, windows.p2, windows.p3);
  for (Vertex w = 0; w < g.n(); ++w)
    for (const Hit& wx : early[w])
      for (const Hit& xy : late[wx.neighbor]) {
        const Vertex y = xy.neighbor;
        if (y == w) continue;
        for (const Hit& yz : early[y]) {
          const Vertex z = yz.neighbor;
          if (z == w || z == wx.neighbor) continue;
          const Hit* zw = find_hit(late[z], w);
          if (!zw) continue;
          if (!visit(Square{w, wx.neighbor, y, z, wx.t, xy.t, yz.t, zw->t}))
            return;
        }
      }
}

std::uint64_t square_count(const TemporalGraph& g, double p1, double p2,
                           double p3) {
  if (!(0.0 <= p1 && p1 <= p2 && p2 <= p3 && p3 <= g.window().end))
    throw ContractError("square windows need 0 <= p1 <= p2 <= p3 <= window end");
  std::uint64_t count = 0;
  for_each_square(g, {p1, p2, p3, p3}, [&](const Square&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<WindowPartition> candidate_partitions(const TemporalGraph& g,
                                                  double p) {
  const std::size_t n = g.n();
  const double nn = static_cast<double>(n);
  const double unit = std::log(nn) / nn;
  std::vector<WindowPartition> out;
  // Partition from the existence argument: p1 = 2 ln n/n + eps0 with
  // eps0 = 4 (ln n)^0.8 / n, usable once p >= 4 ln n/n + 4 eps0.
  const double eps0 = 4.0 * std::pow(std::log(nn), 0.8) / nn;
  if (p >= 4.0 * unit + 4.0 * eps0) {
    const double p1 = 2.0 * unit + eps0;
    out.push_back({p1, p1 + eps0, p1 + 2.0 * eps0, p});
  }

  // Grid partitions ranked by (squares) x (sinks of [0, p1] that are also
  // sources of [p3, p]). Ties, including partitions with no such vertex, are
  // broken by the same product over near sinks and near sources: vertices
  // reached by (reaching) all but at most three others, three being the
  // number of square vertices deleted before the goodness test.
  const std::size_t steps = kPartitionGridSteps;
  const std::size_t need = n > 3 ? n - 3 : 0;
  std::vector<std::vector<std::size_t>> into(steps), from(steps);
  for (std::size_t i = 1; i < steps; ++i) {
    const double q = p * static_cast<double>(i) / static_cast<double>(steps);
    const ReachMatrix early(restrict_to(g, g.window().start, q));
    from[i] = ReachMatrix(restrict_to(g, q, p)).out_counts();
    into[i].resize(n);
    for (Vertex v = 0; v < n; ++v) into[i][v] = early.in_count(v);
  }
  struct Ranked {
    double score;
    double near;
    WindowPartition windows;
  };
  std::vector<Ranked> ranked;
  for (std::size_t i = 1; i < steps; ++i)
    for (std::size_t j = i + 2; j < steps; ++j) {
      std::size_t both = 0, near = 0;
      for (std::size_t v = 0; v < n; ++v) {
        both += into[i][v] == n && from[j][v] == n;
        near += into[i][v] >= need && from[j][v] >= need;
      }
      if (near == 0) continue;
      const double p1 = p * static_cast<double>(i) / static_cast<double>(steps);
      const double p3 = p * static_cast<double>(j) / static_cast<double>(steps);
      const WindowPartition w{p1, 0.5 * (p1 + p3), p3, p};
      const std::uint64_t squares = square_count(g, w.p1, w.p2, w.p3);
      if (squares == 0) continue;
      const double sq = static_cast<double>(squares);
      ranked.push_back({sq * static_cast<double>(both), sq * static_cast<double>(near), w});
    }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Ranked& a, const Ranked& b) {
                     return a.score != b.score ? a.score > b.score : a.near > b.near;
                   });
  for (const auto& r : ranked) out.push_back(r.windows);
  return out;
}

bool is_good_square(const TemporalGraph& g, const Square& s,
                    const WindowPartition& windows) {
  const Vertex removed[] = {s.x, s.y, s.z};
  const InducedGraph rest = remove_vertices(g, removed);
  const auto pos = std::lower_bound(rest.original.begin(), rest.original.end(), s.w);
  const Vertex w = static_cast<Vertex>(pos - rest.original.begin());
  return is_temporal_sink(restrict_to(rest.graph, g.window().start, windows.p1), w) &&
         is_temporal_source(restrict_to(rest.graph, windows.p3, windows.p), w);
}

namespace {

void check_spanner_request(const TemporalGraph& g, double p) {
  if (g.n() < 8) throw ContractError("optimal spanner search needs n >= 8");
  if (!(g.window().start <= 0.0 && p <= g.window().end))
    throw ContractError("[0, p] must lie inside the graph window");
  const double nn = static_cast<double>(g.n());
  if (!(p > 2.0 * std::log(nn) / nn))
    throw ContractError("p = " + std::to_string(p) +
                        " leaves no room for the window partition (needs p > 2 ln n / n)");
}

std::optional<GoodSquare> search(const TemporalGraph& g, double p,
                                 std::size_t cap, std::size_t& tested) {
  check_spanner_request(g, p);
  tested = 0;
  std::optional<GoodSquare> found;
  for (const WindowPartition& windows : candidate_partitions(g, p)) {
    std::size_t in_partition = 0;
    for_each_square(g, windows, [&](const Square& s) {
      if (tested >= cap || in_partition >= kPartitionBudget) return false;
      ++tested;
      ++in_partition;
      if (is_good_square(g, s, windows)) found = GoodSquare{s, windows, tested};
      return !found;
    });
    if (found || tested >= cap) break;
  }
  return found;
}

}  // namespace

std::optional<GoodSquare> find_good_square(const TemporalGraph& g, double p,
                                           std::size_t cap) {
  std::size_t tested = 0;
  return search(g, p, cap, tested);
}

SpannerCertificate build_optimal_spanner(const TemporalGraph& g, double p,
                                         std::size_t cap) {
  std::size_t tested = 0;
  const std::optional<GoodSquare> good = search(g, p, cap, tested);
  if (!good)
    throw NoGoodSquareError(
        tested >= cap ? "no good square among the first " + std::to_string(cap) +
                            " candidates (cap hit)"
                      : "no good square (" + std::to_string(tested) +
                            " squares tested)",
        tested, tested >= cap);

  const Square& s = good->square;
  const WindowPartition& windows = good->windows;
  const Vertex removed[] = {s.x, s.y, s.z};
  const InducedGraph rest = remove_vertices(g, removed);
  const Vertex w = static_cast<Vertex>(
      std::lower_bound(rest.original.begin(), rest.original.end(), s.w) -
      rest.original.begin());

  auto lift = [&](const ForemostTree& tree) {
    std::vector<Appearance> out;
    for (const auto& e : tree.attach_order)
      out.push_back({rest.original[e.parent], rest.original[e.child], e.t});
    return out;
  };

  SpannerCertificate cert;
  cert.pivot = s;
  cert.windows = windows;
  cert.squares_tested = tested;
  cert.tree_down = lift(reverse_foremost_tree(
      restrict_to(rest.graph, g.window().start, windows.p1), w));
  cert.tree_up = lift(
      foremost_tree_multilabel(restrict_to(rest.graph, windows.p3, windows.p), w));
  cert.appearances = s.appearances();
  cert.appearances.insert(cert.appearances.end(), cert.tree_down.begin(),
                          cert.tree_down.end());
  cert.appearances.insert(cert.appearances.end(), cert.tree_up.begin(),
                          cert.tree_up.end());
  cert.verified = verify_spanner(g, cert.appearances);
  return cert;
}

}  // namespace tgraph
