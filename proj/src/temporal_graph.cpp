#include "tgraph/temporal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <tuple>

namespace tgraph {

struct TemporalGraph::Cache {
  std::once_flag events_once;
  std::vector<Event> events;

  std::once_flag incidences_once;
  std::vector<std::size_t> incidence_offsets;
  std::vector<Incidence> incidences;
};

namespace {

void check_window(const Window& w) {
  if (!(w.start <= w.end) || !std::isfinite(w.start) || !std::isfinite(w.end))
    throw ContractError("invalid window [" + std::to_string(w.start) + ", " +
                        std::to_string(w.end) + "]");
}

void check_vertex_count(std::size_t n) {
  if (n > std::numeric_limits<Vertex>::max())
    throw ContractError("vertex count exceeds 32-bit vertex ids");
}

}  // namespace

TemporalGraph::Builder::Builder(std::size_t n, Window window)
    : n_(n), window_(window) {
  check_vertex_count(n);
  check_window(window);
  offsets_.push_back(0);
}

void TemporalGraph::Builder::reserve(std::size_t edges, std::size_t labels) {
  edges_.reserve(edges);
  offsets_.reserve(edges + 1);
  labels_.reserve(labels);
}

void TemporalGraph::Builder::add_edge(Vertex u, Vertex v,
                                      std::span<const double> labels) {
  if (u >= v || v >= n_)
    throw ContractError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not a valid pair with u < v < n");
  if (!edges_.empty()) {
    const Edge& last = edges_.back();
    if (std::tie(last.u, last.v) >= std::tie(u, v))
      throw ContractError("edges must be added in increasing pair order");
  }
  if (labels.empty()) throw ContractError("edge with no labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!window_.contains(labels[i]))
      throw ContractError("label " + std::to_string(labels[i]) +
                          " outside window");
    if (i > 0 && !(labels[i - 1] < labels[i]))
      throw ContractError("edge labels must be strictly ascending");
  }
  if (labels_.size() + labels.size() > std::numeric_limits<Slot>::max())
    throw ResourceError("appearance count exceeds 32-bit slot ids");
  edges_.push_back({u, v});
  labels_.insert(labels_.end(), labels.begin(), labels.end());
  offsets_.push_back(static_cast<Slot>(labels_.size()));
}

TemporalGraph TemporalGraph::Builder::build() && {
  TemporalGraph g(n_, window_);
  g.edges_ = std::move(edges_);
  g.offsets_ = std::move(offsets_);
  g.labels_ = std::move(labels_);
  return g;
}

TemporalGraph::TemporalGraph(std::size_t n, Window window)
    : n_(n), window_(window), offsets_{0}, cache_(std::make_shared<Cache>()) {
  check_vertex_count(n);
  check_window(window);
}

TemporalGraph TemporalGraph::from_appearances(
    std::size_t n, Window window, std::vector<Appearance> appearances) {
  for (auto& a : appearances) {
    if (a.u == a.v) throw ContractError("self-loop at vertex " + std::to_string(a.u));
    if (a.u > a.v) std::swap(a.u, a.v);
  }
  std::sort(appearances.begin(), appearances.end(),
            [](const Appearance& x, const Appearance& y) {
              return std::tie(x.u, x.v, x.t) < std::tie(y.u, y.v, y.t);
            });
  Builder builder(n, window);
  std::vector<double> labels;
  for (std::size_t i = 0; i < appearances.size();) {
    std::size_t j = i;
    labels.clear();
    while (j < appearances.size() && appearances[j].u == appearances[i].u &&
           appearances[j].v == appearances[i].v) {
      if (j > i && appearances[j].t == appearances[j - 1].t)
        throw ContractError("duplicate appearance of {" +
                            std::to_string(appearances[i].u) + "," +
                            std::to_string(appearances[i].v) + "}");
      labels.push_back(appearances[j].t);
      ++j;
    }
    builder.add_edge(appearances[i].u, appearances[i].v, labels);
    i = j;
  }
  return std::move(builder).build();
}

EdgeId TemporalGraph::edge_of(Slot s) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
  return static_cast<EdgeId>(it - offsets_.begin() - 1);
}

Appearance TemporalGraph::appearance(Slot s) const {
  const Edge& e = edges_[edge_of(s)];
  return {e.u, e.v, labels_[s]};
}

std::optional<EdgeId> TemporalGraph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b},
                             [](const Edge& x, const Edge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::optional<Slot> TemporalGraph::find_appearance(const Appearance& a) const {
  auto e = find_edge(a.u, a.v);
  if (!e) return std::nullopt;
  auto ls = labels(*e);
  auto it = std::lower_bound(ls.begin(), ls.end(), a.t);
  if (it == ls.end() || *it != a.t) return std::nullopt;
  return static_cast<Slot>(offsets_[*e] + (it - ls.begin()));
}

std::span<const TemporalGraph::Event> TemporalGraph::events() const {
  std::call_once(cache_->events_once, [this] {
    auto& events = cache_->events;
    events.reserve(labels_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e)
      for (Slot s = offsets_[e]; s < offsets_[e + 1]; ++s)
        events.push_back({labels_[s], s, edges_[e].u, edges_[e].v});
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
      return x.t < y.t || (x.t == y.t && x.slot < y.slot);
    });
  });
  return cache_->events;
}

std::span<const TemporalGraph::Incidence> TemporalGraph::incidences(
    Vertex v) const {
  std::call_once(cache_->incidences_once, [this] {
    auto& offsets = cache_->incidence_offsets;
    auto& inc = cache_->incidences;
    offsets.assign(n_ + 1, 0);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      const Slot count = offsets_[e + 1] - offsets_[e];
      offsets[edges_[e].u + 1] += count;
      offsets[edges_[e].v + 1] += count;
    }
    for (std::size_t i = 0; i < n_; ++i) offsets[i + 1] += offsets[i];
    inc.resize(offsets[n_]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      const auto [u, w] = edges_[e];
      for (Slot s = offsets_[e]; s < offsets_[e + 1]; ++s) {
        inc[fill[u]++] = {labels_[s], w, s};
        inc[fill[w]++] = {labels_[s], u, s};
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      std::sort(inc.begin() + offsets[i], inc.begin() + offsets[i + 1],
                [](const Incidence& x, const Incidence& y) {
                  return x.t < y.t || (x.t == y.t && x.slot < y.slot);
                });
  });
  const auto& offsets = cache_->incidence_offsets;
  return {cache_->incidences.data() + offsets[v],
          cache_->incidences.data() + offsets[v + 1]};
}

std::vector<Appearance> TemporalGraph::appearances() const {
  std::vector<Appearance> out;
  out.reserve(labels_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e)
    for (Slot s = offsets_[e]; s < offsets_[e + 1]; ++s)
      out.push_back({edges_[e].u, edges_[e].v, labels_[s]});
  return out;
}

}  // namespace tgraph
