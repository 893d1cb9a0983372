#include <gtest/gtest.h>

#include <sstream>

#include "tgraph/temporal_graph.hpp"
#include "tgraph/text_io.hpp"

using namespace tgraph;

namespace {

TemporalGraph triangle() {
  return TemporalGraph::from_appearances(3, {0, 1}, {{0, 1, 0.2}, {0, 2, 0.5}, {1, 2, 0.3}});
}

}  // namespace

TEST(TemporalGraph, BuilderKeepsLexicographicEdgeIds) {
  TemporalGraph::Builder b(4, {0, 1});
  b.add_edge(0, 1, 0.4);
  const double two[] = {0.1, 0.7};
  b.add_edge(0, 3, two);
  b.add_edge(2, 3, 0.9);
  const TemporalGraph g = std::move(b).build();
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.appearance_count(), 4u);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.edge(1).u, 0u);
  EXPECT_EQ(g.edge(1).v, 3u);
  EXPECT_EQ(g.first_slot(2), 3u);
  EXPECT_EQ(g.edge_of(2), 1u);
  EXPECT_EQ(g.label(2), 0.7);
  EXPECT_EQ(g.find_edge(3, 0), 1u);
  EXPECT_FALSE(g.find_edge(1, 2));
  EXPECT_EQ(g.find_appearance({0, 3, 0.7}), 2u);
  EXPECT_FALSE(g.find_appearance({0, 3, 0.5}));
}

TEST(TemporalGraph, BuilderRejectsBadInput) {
  TemporalGraph::Builder b(3, {0, 1});
  EXPECT_THROW(b.add_edge(1, 1, 0.5), ContractError);
  EXPECT_THROW(b.add_edge(2, 1, 0.5), ContractError);
  EXPECT_THROW(b.add_edge(0, 3, 0.5), ContractError);
  EXPECT_THROW(b.add_edge(0, 1, 1.5), ContractError);
  const double unsorted[] = {0.5, 0.2};
  EXPECT_THROW(b.add_edge(0, 1, unsorted), ContractError);
  const double repeated[] = {0.5, 0.5};
  EXPECT_THROW(b.add_edge(0, 1, repeated), ContractError);
  b.add_edge(0, 2, 0.5);
  EXPECT_THROW(b.add_edge(0, 1, 0.5), ContractError);
}

TEST(TemporalGraph, FromAppearancesAggregatesPairs) {
  const TemporalGraph g = TemporalGraph::from_appearances(
      3, {0, 1}, {{2, 1, 0.6}, {1, 2, 0.1}, {0, 1, 0.3}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(1).u, 1u);
  EXPECT_EQ(g.labels(1).size(), 2u);
  EXPECT_EQ(g.labels(1)[0], 0.1);
  EXPECT_EQ(g.labels(1)[1], 0.6);
  EXPECT_THROW(TemporalGraph::from_appearances(3, {0, 1}, {{0, 1, 0.3}, {1, 0, 0.3}}),
               ContractError);
  EXPECT_THROW(TemporalGraph::from_appearances(3, {0, 1}, {{0, 0, 0.3}}), ContractError);
  EXPECT_THROW(TemporalGraph::from_appearances(2, {0, 1}, {{0, 1, -0.1}}), ContractError);
}

TEST(TemporalGraph, EventsFollowLabelThenSlot) {
  const TemporalGraph g = TemporalGraph::from_appearances(
      4, {0, 1}, {{0, 1, 0.5}, {2, 3, 0.5}, {0, 2, 0.1}, {1, 3, 0.9}});
  const auto ev = g.events();
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_EQ(ev[0].t, 0.1);
  EXPECT_EQ(ev[1].t, 0.5);
  EXPECT_EQ(ev[2].t, 0.5);
  EXPECT_LT(ev[1].slot, ev[2].slot);
  EXPECT_EQ(ev[3].t, 0.9);
  const auto inc = g.incidences(0);
  ASSERT_EQ(inc.size(), 2u);
  EXPECT_EQ(inc[0].neighbor, 2u);
  EXPECT_EQ(inc[1].neighbor, 1u);
}

TEST(TemporalGraph, CopiesShareLazyCaches) {
  const TemporalGraph g = triangle();
  const TemporalGraph copy = g;
  EXPECT_EQ(g.events().data(), copy.events().data());
}

TEST(TextIo, RoundTripsExactly) {
  const TemporalGraph g = TemporalGraph::from_appearances(
      5, {0, 1}, {{0, 4, 0.1 + 0.2}, {1, 2, 1e-17}, {1, 2, 0.75}, {3, 4, 1.0 / 3.0}});
  std::stringstream ss;
  write_graph(ss, g);
  const TemporalGraph back = read_graph(ss);
  EXPECT_EQ(back.n(), g.n());
  EXPECT_EQ(back.appearances(), g.appearances());
}

TEST(TextIo, InfersWindowAndSkipsComments) {
  std::istringstream in("# header\nn 3\n\n0 1 0.5\n1 2 2.5\n");
  const TemporalGraph g = read_graph(in);
  EXPECT_EQ(g.window(), (Window{0.0, 2.5}));
  EXPECT_EQ(g.appearance_count(), 2u);
}

TEST(TextIo, RejectsMalformedInput) {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  EXPECT_THROW(parse("0 1 0.5\n"), ParseError);
  EXPECT_THROW(parse("n 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse("n 2\n0 1 x\n"), ParseError);
  EXPECT_THROW(parse("n 2\n0 2 0.5\n"), ParseError);
  EXPECT_THROW(parse("n 2\n0 0 0.5\n"), ParseError);
  EXPECT_THROW(parse("n 2\nn 3\n"), ParseError);
}
