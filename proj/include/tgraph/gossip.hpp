#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgraph/gen.hpp"

namespace tgraph {

/// Which secrets each agent knows; agent i starts with secret i only.
class KnowledgeState {
 public:
  explicit KnowledgeState(std::size_t n);

  std::size_t n() const { return n_; }
  /// Both agents end up with the union of what they knew.
  void call(Vertex a, Vertex b);
  bool knows(Vertex agent, Vertex secret) const {
    return (bits_[agent * words_ + secret / 64] >> (secret % 64)) & 1u;
  }
  std::size_t known_count(Vertex agent) const { return counts_[agent]; }
  bool is_expert(Vertex agent) const { return counts_[agent] == n_; }
  std::size_t expert_count() const { return experts_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> counts_;
  std::size_t experts_ = 0;
};

/// 1-based call indices at which each event first holds.
struct GossipMilestones {
  std::optional<std::uint64_t> pair_exchange;  // 0 knows secret 1 and 1 knows 0
  std::optional<std::uint64_t> pair_one_way;   // 1 knows secret 0
  std::optional<std::uint64_t> first_expert;
  std::optional<std::uint64_t> fixed_expert;   // agent 0
  std::optional<std::uint64_t> all_experts;
  std::uint64_t calls = 0;                     // calls replayed

  bool complete() const { return all_experts.has_value(); }
  friend bool operator==(const GossipMilestones&, const GossipMilestones&) = default;
};

/// Feeds calls one at a time and records milestones as they are reached.
class MilestoneTracker {
 public:
  explicit MilestoneTracker(std::size_t n);
  /// Returns true once every milestone has been reached.
  bool feed(const Call& c);
  const GossipMilestones& milestones() const { return m_; }
  const KnowledgeState& state() const { return state_; }

 private:
  KnowledgeState state_;
  GossipMilestones m_;
};

/// Replays the sequence in order; stops early once all agents are experts.
GossipMilestones simulate_gossip(const CallSequence& calls);

/// Random call-once schedule, drawn lazily until all agents are experts.
GossipMilestones co_milestones(std::size_t n, RngStream& rng);

/// 10 n ln n, rounded up.
std::uint64_t default_call_cap(std::size_t n);

/// Uniform calls with repetition until all milestones or `call_cap` calls.
GossipMilestones any_milestones(std::size_t n, RngStream& rng,
                                std::uint64_t call_cap);

}  // namespace tgraph
