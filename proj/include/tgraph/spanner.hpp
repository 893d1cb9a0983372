#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tgraph/temporal_graph.hpp"

namespace tgraph {

/// Consecutive windows [0, p1], [p1, p2], [p2, p3], [p3, p].
struct WindowPartition {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double p = 0.0;
};

/// Ordered 4-cycle (w, x, y, z) with wx, yz labelled in [p1, p2] and xy, zw
/// labelled in [p2, p3]. Inside it every vertex reaches every other.
struct Square {
  Vertex w, x, y, z;
  double wx, xy, yz, zw;

  std::vector<Appearance> appearances() const {
    return {{w, x, wx}, {x, y, xy}, {y, z, yz}, {z, w, zw}};
  }
  friend bool operator==(const Square&, const Square&) = default;
};

struct GoodSquare {
  Square square;
  WindowPartition windows;
  std::size_t candidates_tested = 0;
};

struct SpannerCertificate {
  std::vector<Appearance> appearances;
  Square pivot;
  WindowPartition windows;
  std::vector<Appearance> tree_down;  // everyone reaches w within [0, p1]
  std::vector<Appearance> tree_up;    // w reaches everyone within [p3, p]
  std::size_t squares_tested = 0;
  bool verified = false;
};

/// No good square was found. `cap_hit` tells whether the search stopped at
/// the candidate cap rather than running out of squares.
class NoGoodSquareError : public std::runtime_error {
 public:
  NoGoodSquareError(std::string what, std::size_t squares_tested, bool cap_hit)
      : std::runtime_error(std::move(what)),
        squares_tested_(squares_tested),
        cap_hit_(cap_hit) {}
  std::size_t squares_tested() const { return squares_tested_; }
  bool cap_hit() const { return cap_hit_; }

 private:
  std::size_t squares_tested_;
  bool cap_hit_;
};

inline constexpr std::size_t kDefaultSquareCap = 200;
/// Squares tested per window partition before moving to the next one.
inline constexpr std::size_t kPartitionBudget = 25;
/// Resolution of the p1 / p3 grid searched by candidate_partitions().
inline constexpr std::size_t kPartitionGridSteps = 40;

/// 2n - 4: no temporally connected graph on n >= 4 vertices has fewer
/// appearances. Throws ContractError for n < 4.
std::size_t spanner_size_lower_bound(std::size_t n);

/// Calls `visit` for every square in ascending (w, x, y, z) order until it
/// returns false. An edge belongs to a window when one of its labels does;
/// the earliest such label is reported.
void for_each_square(const TemporalGraph& g, const WindowPartition& windows,
                     const std::function<bool(const Square&)>& visit);

/// Exact number of ordered 4-tuples forming a square.
std::uint64_t square_count(const TemporalGraph& g, double p1, double p2,
                           double p3);

/// Window partitions tried by find_good_square, in order: the partition of
/// the existence argument when p leaves room for it, then the partitions of a
/// grid over [0, p] that admit at least one square and one vertex that is a
/// sink of [0, p1] and a source of [p3, p], best expected yield first.
std::vector<WindowPartition> candidate_partitions(const TemporalGraph& g,
                                                  double p);

/// A square (w, x, y, z) is good when, with x, y, z deleted, w is a temporal
/// sink of the graph restricted to [0, p1] and a temporal source of the graph
/// restricted to [p3, p].
bool is_good_square(const TemporalGraph& g, const Square& s,
                    const WindowPartition& windows);

/// First good square over candidate_partitions() and enumeration order.
/// Requires n >= 8, p > 2 ln n / n and [0, p] inside the window.
std::optional<GoodSquare> find_good_square(const TemporalGraph& g, double p,
                                           std::size_t cap = kDefaultSquareCap);

/// Pivot square plus a reverse foremost tree into w over [0, p1] and a
/// foremost tree out of w over [p3, p]: exactly 2n - 4 appearances.
/// Throws NoGoodSquareError when no good square is found.
SpannerCertificate build_optimal_spanner(const TemporalGraph& g, double p,
                                         std::size_t cap = kDefaultSquareCap);

}  // namespace tgraph
