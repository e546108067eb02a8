/*
  Slotted simulator for max-weight routing with chain-constrained shortest
  paths.

  Every link keeps a virtual queue. A packet arriving for a flow is routed on
  the cheapest admissible walk of that flow's pruned expanded graph, an arc
  costing the current virtual queue of its link (costs are read once per
  slot). Virtual queues then evolve as Q <- max(Q + assigned - capacity, 0).
  Physical queues are FIFO per link; each slot a link forwards up to
  floor(capacity) packets, which join their next link's queue at the end of
  the slot.
*/
#pragma once

#include "sfc/network.hpp"

#include <cstdint>
#include <vector>

namespace sfc {

struct SimFlow {
  ServiceChain chain;
  double arrival_rate = 0;  // Poisson mean per slot
};

struct SimConfig {
  Network net;
  std::vector<SimFlow> flows;
  std::size_t horizon = 100000;
  std::size_t warmup = 10000;
  std::uint64_t seed = 1;
};

struct SimResult {
  // Packets in physical queues at the end of each slot.
  std::vector<std::uint64_t> total_queue;
  // Mean of total_queue over slots at or after warmup.
  double average_queue = 0;
  std::uint64_t arrived = 0;
  std::uint64_t routed = 0;
  std::uint64_t delivered = 0;
  // Packets dropped because their flow has no admissible walk.
  std::uint64_t unroutable = 0;
  // Routed walks failing an independent chain replay.
  std::uint64_t chain_violations = 0;
  // Slots in which some link forwarded more than its capacity.
  std::uint64_t capacity_violations = 0;
  bool stable = false;
};

// Growth check on a queue series: the mean over the last tenth of the
// post-warmup slots must stay within 3x the mean over the first tenth.
bool is_stable(const std::vector<std::uint64_t>& series, std::size_t warmup);

// Throws InputError on a malformed config (horizon <= warmup, negative or
// non-finite rate, invalid chain).
SimResult simulate(const SimConfig& cfg);

struct SweepRow {
  double p = 0;
  double average_queue = 0;
  bool stable = false;
  SimResult result;
};

// Runs simulate() once per p with every flow's rate multiplied by p. Runs
// execute concurrently; rows come back in input order.
std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<double>& p_values);

}  // namespace sfc
