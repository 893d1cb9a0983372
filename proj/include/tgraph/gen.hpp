#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tgraph/rng.hpp"
#include "tgraph/temporal_graph.hpp"

namespace tgraph {

/// Default largest n accepted by sample_complete (about 3.2e7 edges).
inline constexpr std::size_t kDefaultCompleteCap = 8000;

/// Below this edge probability sample_fnp and sample_poisson skip over absent
/// pairs with geometric jumps instead of testing every pair.
inline constexpr double kSparseThreshold = 0.1;

struct Call {
  Vertex a;
  Vertex b;
  friend bool operator==(const Call&, const Call&) = default;
};

enum class CallModel { kCallOnce, kAny };

struct CallSequence {
  std::size_t n = 0;
  CallModel model = CallModel::kCallOnce;
  std::vector<Call> calls;
};

/// C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}
/// Inverse of the lexicographic linearization of pairs {u < v}.
Call pair_from_index(std::size_t n, std::uint64_t index);
std::uint64_t pair_index(std::size_t n, Vertex u, Vertex v);

/// Every pair present independently with probability p, one label uniform on
/// [0, p]; window [0, p].
TemporalGraph sample_fnp(std::size_t n, double p, RngStream& rng);

/// sample_fnp(n, 1): complete graph with i.i.d. uniform labels on [0, 1].
/// Throws ResourceError when n exceeds `cap`.
TemporalGraph sample_complete(std::size_t n, RngStream& rng,
                              std::size_t cap = kDefaultCompleteCap);

/// Rate-1 Poisson label process on every pair, stopped at time p.
TemporalGraph sample_poisson(std::size_t n, double p, RngStream& rng);

/// Uniformly random ordering of all C(n, 2) pairs (forward Fisher-Yates).
CallSequence co_call_sequence(std::size_t n, RngStream& rng);

/// `max_calls` pairs drawn uniformly with replacement.
CallSequence any_call_sequence(std::size_t n, std::size_t max_calls,
                               RngStream& rng);

/// Lazy form of co_call_sequence: yields the same calls, in the same order,
/// for the same stream, while storing only displaced pair indices.
class CoCallStream {
 public:
  CoCallStream(std::size_t n, RngStream& rng);
  bool done() const { return next_ >= total_; }
  Call next();

 private:
  std::size_t n_;
  RngStream* rng_;
  std::uint64_t total_;
  std::uint64_t next_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

/// Endless uniform calls with replacement.
class AnyCallStream {
 public:
  AnyCallStream(std::size_t n, RngStream& rng);
  Call next() { return pair_from_index(n_, rng_->below(total_)); }

 private:
  std::size_t n_;
  RngStream* rng_;
  std::uint64_t total_;
};

}  // namespace tgraph
