/*
  Benchmark harness: expanded-graph size versus the layered baseline, and
  average minimum placement size on random graphs. Every trial draws its
  network from a seed derived from (seed, n, trial), so results do not depend
  on scheduling.
*/
#pragma once

#include "sfc/network.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sfc {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial);

struct SizeBenchOptions {
  std::vector<std::size_t> nodes{20, 40, 60, 80, 100};
  double z = 0.5;
  std::size_t chain_length = 3;
  std::size_t trials = 10;
  double average_degree = 4;
  std::int64_t cost_lo = 1;
  std::int64_t cost_hi = 10;
  std::uint64_t seed = 1;
};

struct SizeBenchRow {
  std::size_t n = 0;
  double z = 0;
  double our_size = 0;       // pruned expansion, vertices + arcs
  double layered_size = 0;   // layered baseline, vertices + arcs
  double original_size = 0;  // |V| + |E|
};

// Directed random networks; chain phi1..phir from v1 to vn.
std::vector<SizeBenchRow> bench_size(const SizeBenchOptions& options);

struct PlaceBenchOptions {
  std::vector<std::size_t> nodes{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::size_t trials = 20;
  std::int64_t capacity_lo = 2;
  std::int64_t capacity_hi = 10;
  // Exact branch-and-bound up to this size, greedy beyond.
  std::size_t exact_limit = 12;
  std::uint64_t seed = 1;
};

struct PlaceBenchRow {
  std::size_t n = 0;
  double average_size = 0;
  std::string method;
};

// Directed networks with average out-degree n/3; source v1, destination vn,
// and any direct v1 -> vn edge removed since it cannot carry processed flow.
Network placement_bench_network(std::size_t n, const PlaceBenchOptions& options, std::size_t trial);

std::vector<PlaceBenchRow> bench_place(const PlaceBenchOptions& options);

void write_size_csv(std::ostream& out, const std::vector<SizeBenchRow>& rows);
void write_place_csv(std::ostream& out, const std::vector<PlaceBenchRow>& rows);

}  // namespace sfc
