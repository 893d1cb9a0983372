#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tgraph {

/// Version of the stream-derivation function below. Bump whenever
/// derive_stream_seed() or the draw helpers change, since every recorded
/// experiment seed depends on them.
inline constexpr int kRngDerivationVersion = 1;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Child seed for (master_seed, stream_id). Pure, so a trial's samples do not
/// depend on which thread runs it or in which order.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                           std::uint64_t stream_id) {
  return mix64(mix64(master_seed) ^ mix64(stream_id ^ 0x5851f42d4c957f2dull));
}

/// Random stream for one trial, backed by a 64-bit Mersenne Twister seeded
/// from derive_stream_seed().
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed),
        stream_id_(stream_id),
        engine_(derive_stream_seed(master_seed, stream_id)) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_positive() { return 1.0 - uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  /// Exponential(1) by inverse CDF.
  double exponential() { return -std::log(uniform_positive()); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace tgraph
