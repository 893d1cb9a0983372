#include "tgraph/gossip.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace tgraph {

KnowledgeState::KnowledgeState(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0), counts_(n, 1) {
  for (std::size_t i = 0; i < n; ++i) bits_[i * words_ + i / 64] |= 1ull << (i % 64);
  if (n == 1) experts_ = 1;
}

void KnowledgeState::call(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_ || a == b)
    throw ContractError("invalid call {" + std::to_string(a) + "," +
                        std::to_string(b) + "}");
  std::uint64_t* ra = bits_.data() + a * words_;
  std::uint64_t* rb = bits_.data() + b * words_;
  std::uint32_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    ra[w] = rb[w] = ra[w] | rb[w];
    count += static_cast<std::uint32_t>(std::popcount(ra[w]));
  }
  for (Vertex v : {a, b}) {
    if (counts_[v] != n_ && count == n_) ++experts_;
    counts_[v] = count;
  }
}

MilestoneTracker::MilestoneTracker(std::size_t n) : state_(n) {
  if (n < 2) throw ContractError("gossip needs at least 2 agents");
}

bool MilestoneTracker::feed(const Call& c) {
  state_.call(c.a, c.b);
  const std::uint64_t at = ++m_.calls;
  if (!m_.pair_one_way && state_.knows(1, 0)) m_.pair_one_way = at;
  if (!m_.pair_exchange && state_.knows(1, 0) && state_.knows(0, 1))
    m_.pair_exchange = at;
  if (!m_.first_expert && state_.expert_count() > 0) m_.first_expert = at;
  if (!m_.fixed_expert && state_.is_expert(0)) m_.fixed_expert = at;
  if (!m_.all_experts && state_.expert_count() == state_.n()) m_.all_experts = at;
  return m_.all_experts.has_value();
}

GossipMilestones simulate_gossip(const CallSequence& calls) {
  MilestoneTracker tracker(calls.n);
  for (const Call& c : calls.calls)
    if (tracker.feed(c)) break;
  return tracker.milestones();
}

GossipMilestones co_milestones(std::size_t n, RngStream& rng) {
  MilestoneTracker tracker(n);
  CoCallStream stream(n, rng);
  while (!stream.done())
    if (tracker.feed(stream.next())) break;
  return tracker.milestones();
}

std::uint64_t default_call_cap(std::size_t n) {
  const double nn = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(10.0 * nn * std::log(nn)));
}

GossipMilestones any_milestones(std::size_t n, RngStream& rng,
                                std::uint64_t call_cap) {
  if (call_cap < 1) throw ContractError("call cap must be at least 1");
  MilestoneTracker tracker(n);
  AnyCallStream stream(n, rng);
  for (std::uint64_t i = 0; i < call_cap; ++i)
    if (tracker.feed(stream.next())) break;
  return tracker.milestones();
}

}  // namespace tgraph
