#include "sfc/bench.hpp"
#include "sfc/expansion.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace sfc;

TEST(BenchSize, PrunedBelowLayered) {
  SizeBenchOptions o;
  o.nodes = {20, 40};
  o.trials = 4;
  auto rows = bench_size(o);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) EXPECT_LT(r.our_size, r.layered_size);
}

TEST(BenchSize, EmptyChainMatchesOriginalOnLayered) {
  SizeBenchOptions o;
  o.nodes = {15};
  o.chain_length = 0;
  o.trials = 3;
  auto rows = bench_size(o);
  EXPECT_EQ(rows[0].layered_size, rows[0].original_size);
  EXPECT_LE(rows[0].our_size, rows[0].original_size);
}

TEST(BenchSize, EmptyChainOnStronglyConnectedGraphKeepsEverything) {
  Network net(true);
  for (int i = 0; i < 5; ++i) net.add_node("v" + std::to_string(i + 1));
  for (NodeId i = 0; i < 5; ++i) net.add_edge(i, (i + 1) % 5);
  ServiceChain sc{0, 4, {}, {}};
  EXPECT_EQ(graph_size(prune(build_expanded(net, sc))).total, 10u);
  EXPECT_EQ(graph_size(build_layered(net, sc)).total, 10u);
}

TEST(BenchSize, FullAvailabilityApproachesOriginal) {
  SizeBenchOptions o;
  o.nodes = {30};
  o.z = 1;
  o.trials = 3;
  auto rows = bench_size(o);
  EXPECT_LE(rows[0].our_size, rows[0].original_size);
  EXPECT_GE(rows[0].our_size, 0.9 * rows[0].original_size);
}

TEST(BenchSize, DeterministicCsv) {
  SizeBenchOptions o;
  o.nodes = {20};
  o.trials = 3;
  o.seed = 42;
  std::ostringstream a, b;
  write_size_csv(a, bench_size(o));
  write_size_csv(b, bench_size(o));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "n,z,our_size,layered_size,original_size");
}

TEST(BenchPlace, SmallExactSizes) {
  PlaceBenchOptions o;
  o.nodes = {6, 10};
  o.trials = 4;
  auto rows = bench_place(o);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.method, "exact");
    EXPECT_GE(r.average_size, 0.0);
    EXPECT_LT(r.average_size, 10.0);
  }
}

TEST(BenchPlace, TwoNodesNeedNothing) {
  PlaceBenchOptions o;
  o.nodes = {2};
  o.trials = 3;
  auto rows = bench_place(o);
  EXPECT_EQ(rows[0].average_size, 0.0);
}

TEST(BenchPlace, GreedyBeyondLimitAndDeterministic) {
  PlaceBenchOptions o;
  o.nodes = {14};
  o.trials = 2;
  o.exact_limit = 12;
  std::ostringstream a, b;
  write_place_csv(a, bench_place(o));
  write_place_csv(b, bench_place(o));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("greedy"), std::string::npos);
}

TEST(BenchPlace, NoDirectSourceDestinationEdge) {
  PlaceBenchOptions o;
  for (std::size_t trial = 0; trial < 5; ++trial) {
    Network net = placement_bench_network(9, o, trial);
    EXPECT_FALSE(net.find_edge(0, 8).has_value());
  }
}
