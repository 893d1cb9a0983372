#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/types.hpp"

namespace tgraph {

/// Undirected temporal graph: vertex count, a closed time window, and for
/// every present pair {u, v} a strictly ascending nonempty list of labels.
///
/// Edges are stored in lexicographic (u, v) order with u < v, so an EdgeId is
/// the lexicographic rank of its pair. Slots number appearances in (edge,
/// label index) order; the total event order used by every sweep is
/// (label, slot).
///
/// Immutable after construction. The sorted event list and the per-vertex
/// incidence lists are built lazily on first use and shared between copies;
/// concurrent readers are safe.
class TemporalGraph {
 public:
  struct Edge {
    Vertex u;
    Vertex v;
  };

  /// Entry of a vertex's incidence list, sorted by (t, slot).
  struct Incidence {
    double t;
    Vertex neighbor;
    Slot slot;
  };

  /// One appearance in the global event order.
  struct Event {
    double t;
    Slot slot;
    Vertex u;
    Vertex v;
  };

  /// Appends edges in strictly increasing lexicographic pair order.
  class Builder {
   public:
    Builder(std::size_t n, Window window);

    void reserve(std::size_t edges, std::size_t labels);
    /// Adds {u, v} (u < v) with labels sorted strictly ascending.
    void add_edge(Vertex u, Vertex v, std::span<const double> labels);
    void add_edge(Vertex u, Vertex v, double label) {
      add_edge(u, v, std::span<const double>(&label, 1));
    }
    TemporalGraph build() &&;

   private:
    std::size_t n_;
    Window window_;
    std::vector<Edge> edges_;
    std::vector<Slot> offsets_;
    std::vector<double> labels_;
  };

  TemporalGraph() : TemporalGraph(0, Window{}) {}
  TemporalGraph(std::size_t n, Window window);

  /// Aggregates appearances of the same pair into one multi-labelled edge.
  /// Throws ContractError on self-loops, out-of-range vertices, labels outside
  /// the window, or a repeated (pair, label).
  static TemporalGraph from_appearances(std::size_t n, Window window,
                                        std::vector<Appearance> appearances);

  std::size_t n() const { return n_; }
  const Window& window() const { return window_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t appearance_count() const { return labels_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const double> labels(EdgeId e) const {
    return {labels_.data() + offsets_[e], labels_.data() + offsets_[e + 1]};
  }
  Slot first_slot(EdgeId e) const { return offsets_[e]; }
  double label(Slot s) const { return labels_[s]; }
  EdgeId edge_of(Slot s) const;
  Appearance appearance(Slot s) const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  /// Slot of the exact appearance, if present.
  std::optional<Slot> find_appearance(const Appearance& a) const;

  /// True iff every edge carries exactly one label.
  bool is_simple() const { return labels_.size() == edges_.size(); }

  /// All appearances sorted by (label, slot).
  std::span<const Event> events() const;
  /// Incidences of v sorted by (label, slot).
  std::span<const Incidence> incidences(Vertex v) const;

  std::vector<Appearance> appearances() const;

 private:
  struct Cache;

  std::size_t n_;
  Window window_;
  std::vector<Edge> edges_;
  std::vector<Slot> offsets_;  // edge_count() + 1 entries
  std::vector<double> labels_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace tgraph
