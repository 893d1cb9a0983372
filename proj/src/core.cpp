#include "tgraph/core.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

namespace tgraph {

std::size_t ArrivalMap::reached_count() const {
  return static_cast<std::size_t>(
      std::count_if(arrival.begin(), arrival.end(),
                    [](const auto& a) { return a.has_value(); }));
}

bool TemporalPath::is_valid(const TemporalGraph& g) const {
  if (vertices.empty() || vertices.size() != labels.size() + 1) return false;
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (sorted.back() >= g.n()) return false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0 && labels[i - 1] > labels[i]) return false;
    if (!g.find_appearance({vertices[i], vertices[i + 1], labels[i]}))
      return false;
  }
  return true;
}

TemporalGraph restrict_to(const TemporalGraph& g, double a, double b) {
  if (!(a <= b) || !g.window().contains(Window{a, b}))
    throw ContractError("restriction interval [" + std::to_string(a) + ", " +
                        std::to_string(b) + "] not inside the graph window");
  TemporalGraph::Builder builder(g.n(), Window{a, b});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto ls = g.labels(e);
    auto lo = std::lower_bound(ls.begin(), ls.end(), a);
    auto hi = std::upper_bound(lo, ls.end(), b);
    if (lo != hi)
      builder.add_edge(g.edge(e).u, g.edge(e).v,
                       std::span<const double>(&*lo, static_cast<std::size_t>(hi - lo)));
  }
  return std::move(builder).build();
}

TemporalGraph reverse_time(const TemporalGraph& g) {
  const Window w = g.window();
  TemporalGraph::Builder builder(g.n(), w);
  builder.reserve(g.edge_count(), g.appearance_count());
  std::vector<double> mirrored;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto ls = g.labels(e);
    mirrored.clear();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
      mirrored.push_back(std::clamp(w.start + w.end - *it, w.start, w.end));
    builder.add_edge(g.edge(e).u, g.edge(e).v, mirrored);
  }
  return std::move(builder).build();
}

Slot reversed_slot(const TemporalGraph& g, Slot s) {
  const EdgeId e = g.edge_of(s);
  const Slot first = g.first_slot(e);
  const Slot last = first + static_cast<Slot>(g.labels(e).size()) - 1;
  return first + (last - s);
}

InducedGraph remove_vertices(const TemporalGraph& g,
                             std::span<const Vertex> removed) {
  constexpr Vertex kGone = ~Vertex{0};
  std::vector<Vertex> renumber(g.n(), 0);
  for (Vertex r : removed) {
    if (r >= g.n()) throw ContractError("removed vertex out of range");
    renumber[r] = kGone;
  }
  InducedGraph out{TemporalGraph{}, {}};
  for (Vertex v = 0; v < g.n(); ++v) {
    if (renumber[v] == kGone) continue;
    renumber[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  TemporalGraph::Builder builder(out.original.size(), g.window());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (renumber[u] == kGone || renumber[v] == kGone) continue;
    builder.add_edge(renumber[u], renumber[v], g.labels(e));
  }
  out.graph = std::move(builder).build();
  return out;
}

namespace {

// Shared driver for both sweep directions. `forward` walks events in ascending
// order and relaxes x -> y when x was reached no later than the label; the
// backward pass walks descending and relaxes when y departs no earlier.
template <bool Forward>
ArrivalMap sweep(const TemporalGraph& g, Vertex root) {
  if (root >= g.n())
    throw ContractError("vertex " + std::to_string(root) + " out of range");
  ArrivalMap map;
  map.source = root;
  map.arrival.assign(g.n(), std::nullopt);
  map.via.assign(g.n(), std::nullopt);
  map.arrival[root] = Forward ? g.window().start : g.window().end;
  std::size_t remaining = g.n() - 1;

  auto relax = [&](Vertex from, Vertex to, double t, Slot slot) {
    if (!map.arrival[from] || map.arrival[to]) return false;
    if (Forward ? *map.arrival[from] > t : *map.arrival[from] < t) return false;
    map.arrival[to] = t;
    map.via[to] = slot;
    --remaining;
    return true;
  };
  auto step = [&](const TemporalGraph::Event& ev) {
    bool changed = relax(ev.u, ev.v, ev.t, ev.slot);
    changed |= relax(ev.v, ev.u, ev.t, ev.slot);
    return changed;
  };

  const auto events = g.events();
  const std::size_t m = events.size();
  for (std::size_t i = 0; i < m && remaining > 0;) {
    const std::size_t at = Forward ? i : m - 1 - i;
    std::size_t group = 1;
    while (i + group < m &&
           events[Forward ? i + group : m - 1 - i - group].t == events[at].t)
      ++group;
    if (group == 1) {
      step(events[at]);
    } else {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t j = 0; j < group; ++j)
          changed |= step(events[Forward ? i + j : m - 1 - i - j]);
      }
    }
    i += group;
  }
  return map;
}

}  // namespace

ArrivalMap earliest_arrival_sweep(const TemporalGraph& g, Vertex source) {
  return sweep<true>(g, source);
}

ArrivalMap latest_departure_sweep(const TemporalGraph& g, Vertex sink) {
  return sweep<false>(g, sink);
}

std::optional<TemporalPath> witness_path(const TemporalGraph& g,
                                         const ArrivalMap& map, Vertex u) {
  if (u >= map.arrival.size() || !map.arrival[u]) return std::nullopt;
  TemporalPath path;
  path.vertices.push_back(u);
  Vertex at = u;
  while (at != map.source) {
    const Slot s = *map.via[at];
    const Appearance a = g.appearance(s);
    at = a.u == at ? a.v : a.u;
    path.vertices.push_back(at);
    path.labels.push_back(a.t);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.labels.begin(), path.labels.end());
  return path;
}

bool is_temporal_source(const TemporalGraph& g, Vertex v) {
  return earliest_arrival_sweep(g, v).all_reached();
}

bool is_temporal_sink(const TemporalGraph& g, Vertex v) {
  return latest_departure_sweep(g, v).all_reached();
}

bool is_temporally_connected(const TemporalGraph& g) {
  if (g.n() <= 1) return true;
  // A single sweep rules out most disconnected graphs before the full matrix.
  if (!is_temporal_source(g, 0)) return false;
  return ReachMatrix(g).connected();
}

ReachMatrix::ReachMatrix(const TemporalGraph& g)
    : n_(g.n()), words_((g.n() + 63) / 64), rows_(n_ * words_, 0) {
  for (Vertex v = 0; v < n_; ++v) rows_[v * words_ + v / 64] |= 1ull << (v % 64);

  // Returns true when the two rows differed.
  auto unite = [&](Vertex a, Vertex b) {
    std::uint64_t* ra = rows_.data() + a * words_;
    std::uint64_t* rb = rows_.data() + b * words_;
    bool differ = false;
    for (std::size_t w = 0; w < words_; ++w) {
      if (ra[w] != rb[w]) {
        differ = true;
        ra[w] = rb[w] = ra[w] | rb[w];
      }
    }
    return differ;
  };

  const auto events = g.events();
  for (std::size_t i = 0; i < events.size();) {
    std::size_t group = 1;
    while (i + group < events.size() && events[i + group].t == events[i].t)
      ++group;
    if (group == 1) {
      unite(events[i].u, events[i].v);
    } else {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t j = i; j < i + group; ++j)
          changed |= unite(events[j].u, events[j].v);
      }
    }
    i += group;
  }
}

std::size_t ReachMatrix::in_count(Vertex to) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += static_cast<std::size_t>(std::popcount(rows_[to * words_ + w]));
  return c;
}

std::vector<std::size_t> ReachMatrix::out_counts() const {
  std::vector<std::size_t> out(n_, 0);
  for (std::size_t to = 0; to < n_; ++to)
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t bits = rows_[to * words_ + w]; bits; bits &= bits - 1)
        ++out[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
  return out;
}

std::vector<Vertex> ReachMatrix::sources() const {
  std::vector<Vertex> out;
  if (n_ == 0) return out;
  std::vector<std::uint64_t> common(rows_.begin(), rows_.begin() + words_);
  for (Vertex v = 1; v < n_; ++v)
    for (std::size_t w = 0; w < words_; ++w) common[w] &= rows_[v * words_ + w];
  for (Vertex v = 0; v < n_; ++v)
    if ((common[v / 64] >> (v % 64)) & 1u) out.push_back(v);
  return out;
}

std::vector<Vertex> ReachMatrix::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (in_count(v) == n_) out.push_back(v);
  return out;
}

bool ReachMatrix::connected() const {
  for (Vertex v = 0; v < n_; ++v)
    if (in_count(v) != n_) return false;
  return true;
}

bool two_hop_source_check(const TemporalGraph& g, Vertex v) {
  if (v >= g.n())
    throw ContractError("vertex " + std::to_string(v) + " out of range");
  std::vector<char> hit(g.n(), 0);
  hit[v] = 1;
  std::size_t count = 1;
  auto mark = [&](Vertex z) {
    if (!hit[z]) {
      hit[z] = 1;
      ++count;
    }
  };
  // The earliest label on vy is the best launch point for a second hop.
  std::vector<char> seen(g.n(), 0);
  for (const auto& first : g.incidences(v)) {
    if (first.t < g.window().start || seen[first.neighbor]) continue;
    seen[first.neighbor] = 1;
    mark(first.neighbor);
    auto hop = g.incidences(first.neighbor);
    auto it = std::lower_bound(hop.begin(), hop.end(), first.t,
                               [](const auto& inc, double t) { return inc.t < t; });
    for (; it != hop.end(); ++it) mark(it->neighbor);
    if (count == g.n()) return true;
  }
  return count == g.n();
}

bool verify_spanner(const TemporalGraph& g, std::span<const Appearance> spanner) {
  std::vector<Appearance> kept;
  kept.reserve(spanner.size());
  for (const auto& a : spanner) {
    if (a.u >= g.n() || a.v >= g.n() || !g.find_appearance(a))
      throw ContractError("appearance {" + std::to_string(a.u) + "," +
                          std::to_string(a.v) + "}@" + std::to_string(a.t) +
                          " is not in the graph");
    kept.push_back(a.u < a.v ? a : Appearance{a.v, a.u, a.t});
  }
  std::sort(kept.begin(), kept.end(), [](const Appearance& x, const Appearance& y) {
    return std::tie(x.u, x.v, x.t) < std::tie(y.u, y.v, y.t);
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return is_temporally_connected(
      TemporalGraph::from_appearances(g.n(), g.window(), std::move(kept)));
}

}  // namespace tgraph
