#include "tgraph/gen.hpp"

#include <cmath>
#include <string>

namespace tgraph {

namespace {

void check_n(std::size_t n) {
  if (n < 1) throw ContractError("vertex count must be at least 1");
}

// Walks the lexicographic pair order with O(1) amortized decoding when the
// index only moves forward.
class PairCursor {
 public:
  explicit PairCursor(std::size_t n) : n_(n) {}
  Call seek(std::uint64_t index) {
    while (index >= row_end()) {
      row_start_ = row_end();
      ++u_;
    }
    return {static_cast<Vertex>(u_),
            static_cast<Vertex>(u_ + 1 + (index - row_start_))};
  }

 private:
  std::uint64_t row_end() const { return row_start_ + (n_ - 1 - u_); }
  std::size_t n_;
  std::uint64_t u_ = 0;
  std::uint64_t row_start_ = 0;
};

// Gap to the next success of a Bernoulli(q) sequence; log_miss = ln(1 - q).
std::uint64_t geometric_skip(RngStream& rng, double log_miss) {
  const double jump = std::floor(std::log(rng.uniform_positive()) / log_miss);
  if (!(jump < 1.8e19)) return ~std::uint64_t{0} >> 1;
  return static_cast<std::uint64_t>(jump);
}

}  // namespace

std::uint64_t pair_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const std::uint64_t uu = u;
  return uu * (2 * n - uu - 1) / 2 + (v - u - 1);
}

Call pair_from_index(std::size_t n, std::uint64_t index) {
  // Row u starts at u(2n - u - 1)/2; invert the quadratic, then fix rounding.
  const double b = 2.0 * static_cast<double>(n) - 1.0;
  double guess = std::floor((b - std::sqrt(b * b - 8.0 * static_cast<double>(index))) / 2.0);
  std::uint64_t u = guess < 0 ? 0 : static_cast<std::uint64_t>(guess);
  auto row_start = [n](std::uint64_t r) { return r * (2 * n - r - 1) / 2; };
  while (u > 0 && row_start(u) > index) --u;
  while (u + 1 < n && row_start(u + 1) <= index) ++u;
  return {static_cast<Vertex>(u),
          static_cast<Vertex>(u + 1 + (index - row_start(u)))};
}

TemporalGraph sample_fnp(std::size_t n, double p, RngStream& rng) {
  check_n(n);
  if (!(p >= 0.0 && p <= 1.0))
    throw ContractError("edge probability " + std::to_string(p) +
                        " outside [0, 1]");
  TemporalGraph::Builder builder(n, Window{0.0, p});
  const std::uint64_t total = pair_count(n);
  if (p == 0.0 || total == 0) return std::move(builder).build();
  builder.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.05) + 16,
                  static_cast<std::size_t>(static_cast<double>(total) * p * 1.05) + 16);

  if (p < kSparseThreshold) {
    const double log_miss = std::log1p(-p);
    PairCursor cursor(n);
    for (std::uint64_t idx = geometric_skip(rng, log_miss); idx < total;
         idx += 1 + geometric_skip(rng, log_miss)) {
      const Call c = cursor.seek(idx);
      builder.add_edge(c.a, c.b, p * rng.uniform());
    }
  } else {
    for (Vertex u = 0; u + 1 < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (p >= 1.0 || rng.uniform() < p) builder.add_edge(u, v, p * rng.uniform());
  }
  return std::move(builder).build();
}

TemporalGraph sample_complete(std::size_t n, RngStream& rng, std::size_t cap) {
  if (n > cap)
    throw ResourceError("complete graph on " + std::to_string(n) +
                        " vertices exceeds the cap of " + std::to_string(cap) +
                        "; use the sparse F(n,p) sampler or raise the cap");
  return sample_fnp(n, 1.0, rng);
}

TemporalGraph sample_poisson(std::size_t n, double p, RngStream& rng) {
  check_n(n);
  if (!(p >= 0.0) || !std::isfinite(p))
    throw ContractError("Poisson horizon " + std::to_string(p) + " must be >= 0");
  TemporalGraph::Builder builder(n, Window{0.0, p});
  const std::uint64_t total = pair_count(n);
  if (p == 0.0 || total == 0) return std::move(builder).build();

  std::vector<double> labels;
  // Continues the arrival process of one pair from its first arrival.
  auto fill = [&](double first) {
    labels.clear();
    for (double t = first; t <= p; t += rng.exponential())
      if (labels.empty() || t > labels.back()) labels.push_back(t);
  };

  const double hit = -std::expm1(-p);  // P(at least one arrival in [0, p])
  if (hit < kSparseThreshold) {
    const double log_miss = -p;
    PairCursor cursor(n);
    for (std::uint64_t idx = geometric_skip(rng, log_miss); idx < total;
         idx += 1 + geometric_skip(rng, log_miss)) {
      const Call c = cursor.seek(idx);
      // First arrival conditioned to land in [0, p], by inverse CDF.
      const double first = std::min(p, -std::log1p(-rng.uniform() * hit));
      fill(first);
      builder.add_edge(c.a, c.b, labels);
    }
  } else {
    for (Vertex u = 0; u + 1 < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        fill(rng.exponential());
        if (!labels.empty()) builder.add_edge(u, v, labels);
      }
  }
  return std::move(builder).build();
}

CallSequence co_call_sequence(std::size_t n, RngStream& rng) {
  if (n < 2) throw ContractError("call sequences need at least 2 agents");
  const std::uint64_t total = pair_count(n);
  std::vector<std::uint64_t> order(total);
  for (std::uint64_t i = 0; i < total; ++i) order[i] = i;
  CallSequence seq{n, CallModel::kCallOnce, {}};
  seq.calls.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    const std::uint64_t j = i + rng.below(total - i);
    std::swap(order[i], order[j]);
    seq.calls.push_back(pair_from_index(n, order[i]));
  }
  return seq;
}

CallSequence any_call_sequence(std::size_t n, std::size_t max_calls,
                               RngStream& rng) {
  if (n < 2) throw ContractError("call sequences need at least 2 agents");
  AnyCallStream stream(n, rng);
  CallSequence seq{n, CallModel::kAny, {}};
  seq.calls.reserve(max_calls);
  for (std::size_t i = 0; i < max_calls; ++i) seq.calls.push_back(stream.next());
  return seq;
}

CoCallStream::CoCallStream(std::size_t n, RngStream& rng)
    : n_(n), rng_(&rng), total_(pair_count(n)) {
  if (n < 2) throw ContractError("call sequences need at least 2 agents");
}

Call CoCallStream::next() {
  if (done()) throw ContractError("call-once sequence exhausted");
  auto value_at = [this](std::uint64_t k) {
    auto it = displaced_.find(k);
    return it == displaced_.end() ? k : it->second;
  };
  const std::uint64_t i = next_++;
  const std::uint64_t j = i + rng_->below(total_ - i);
  const std::uint64_t picked = value_at(j);
  if (j != i) displaced_[j] = value_at(i);
  displaced_.erase(i);
  return pair_from_index(n_, picked);
}

AnyCallStream::AnyCallStream(std::size_t n, RngStream& rng)
    : n_(n), rng_(&rng), total_(pair_count(n)) {
  if (n < 2) throw ContractError("call sequences need at least 2 agents");
}

}  // namespace tgraph
