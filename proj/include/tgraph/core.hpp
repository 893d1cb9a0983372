#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/temporal_graph.hpp"

namespace tgraph {

/// Foremost arrival times from one source. Unreachable vertices hold no value.
struct ArrivalMap {
  Vertex source = 0;
  std::vector<std::optional<double>> arrival;
  // Slot of the appearance that first reached each vertex (absent at source).
  std::vector<std::optional<Slot>> via;

  bool reached(Vertex u) const { return arrival[u].has_value(); }
  std::size_t reached_count() const;
  bool all_reached() const { return reached_count() == arrival.size(); }
};

/// Temporal walk u_0..u_l with labels λ_1..λ_l.
struct TemporalPath {
  std::vector<Vertex> vertices;
  std::vector<double> labels;

  std::size_t length() const { return labels.size(); }
  /// Last label; the window start is passed for the trivial path.
  double arrival_time(double trivial) const {
    return labels.empty() ? trivial : labels.back();
  }
  /// Distinct vertices, every step an appearance of g, labels non-decreasing.
  bool is_valid(const TemporalGraph& g) const;
};

/// restrict_to(g, a, b): same vertices, window [a, b], only labels in [a, b].
/// Throws ContractError unless a <= b and [a, b] lies inside g's window.
TemporalGraph restrict_to(const TemporalGraph& g, double a, double b);

/// Maps each label t to start + end - t. Edge ids are preserved and the label
/// list of every edge is reversed, see reversed_slot().
TemporalGraph reverse_time(const TemporalGraph& g);
/// Slot in reverse_time(g) that holds the image of slot s of g (and back).
Slot reversed_slot(const TemporalGraph& g, Slot s);

/// Graph with the listed vertices (and their edges) deleted. Remaining
/// vertices are renumbered in increasing order; `original` maps new ids back.
struct InducedGraph {
  TemporalGraph graph;
  std::vector<Vertex> original;
};
InducedGraph remove_vertices(const TemporalGraph& g,
                             std::span<const Vertex> removed);

/// Processes appearances in ascending (label, slot) order and propagates
/// arrival times along non-decreasing paths. Equal-label groups are iterated
/// to a fixed point so that chains of equal labels are followed.
ArrivalMap earliest_arrival_sweep(const TemporalGraph& g, Vertex source);

/// Mirror of earliest_arrival_sweep: for every vertex the latest label at which
/// it can depart and still reach `sink`. `arrival` holds departure times.
ArrivalMap latest_departure_sweep(const TemporalGraph& g, Vertex sink);

/// Witness path from map.source to u, rebuilt from predecessor links.
std::optional<TemporalPath> witness_path(const TemporalGraph& g,
                                         const ArrivalMap& map, Vertex u);

bool is_temporal_source(const TemporalGraph& g, Vertex v);
bool is_temporal_sink(const TemporalGraph& g, Vertex v);
bool is_temporally_connected(const TemporalGraph& g);

/// All-pairs temporal reachability, one bitset per target vertex holding the
/// vertices that can reach it.
class ReachMatrix {
 public:
  explicit ReachMatrix(const TemporalGraph& g);

  std::size_t n() const { return n_; }
  bool reaches(Vertex from, Vertex to) const {
    return (rows_[to * words_ + from / 64] >> (from % 64)) & 1u;
  }
  /// Number of vertices that reach `to` (itself included).
  std::size_t in_count(Vertex to) const;
  /// For every vertex, the number of vertices it reaches (itself included).
  std::vector<std::size_t> out_counts() const;
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;
  bool any_source() const { return !sources().empty(); }
  bool connected() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// True iff every other vertex is reachable from v with a temporal path of
/// one or two edges. Sufficient, not necessary, for v being a source.
bool two_hop_source_check(const TemporalGraph& g, Vertex v);

/// True iff the subgraph formed by exactly `spanner`, on all of g's vertices,
/// is temporally connected. Throws ContractError if an appearance is not in g.
bool verify_spanner(const TemporalGraph& g, std::span<const Appearance> spanner);

}  // namespace tgraph
