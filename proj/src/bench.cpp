#include "sfc/bench.hpp"

#include "sfc/errors.hpp"
#include "sfc/expansion.hpp"
#include "sfc/placement.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <random>

namespace sfc {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  return rng();
}

namespace {

template <class T, class Fn>
std::vector<T> run_trials(std::size_t trials, Fn fn) {
  std::vector<std::future<T>> futures;
  for (std::size_t t = 0; t < trials; ++t) futures.push_back(std::async(std::launch::async, fn, t));
  std::vector<T> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

struct SizeSample {
  double ours = 0, layered = 0, original = 0;
};

}  // namespace

std::vector<SizeBenchRow> bench_size(const SizeBenchOptions& options) {
  if (options.z < 0 || options.z > 1) throw InputError("z must lie in [0, 1]");
  if (options.trials == 0) throw InputError("trials must be positive");
  std::vector<FunctionId> catalog;
  for (std::size_t i = 1; i <= options.chain_length; ++i) catalog.push_back("phi" + std::to_string(i));

  std::vector<SizeBenchRow> rows;
  for (std::size_t n : options.nodes) {
    if (n < 2) throw InputError("benchmark graphs need at least two nodes");
    auto samples = run_trials<SizeSample>(options.trials, [&](std::size_t trial) {
      RandomNetworkOptions ro;
      ro.nodes = n;
      ro.directed = true;
      ro.function_probability = options.z;
      ro.average_degree = std::min(options.average_degree, static_cast<double>(n - 1));
      ro.cost_lo = options.cost_lo;
      ro.cost_hi = options.cost_hi;
      ro.catalog = catalog;
      ro.seed = trial_seed(options.seed, n, trial);
      Network net = random_network(ro);
      ServiceChain sc{0, static_cast<NodeId>(n - 1), catalog, {}};
      SizeSample s;
      s.ours = static_cast<double>(graph_size(prune(build_expanded(net, sc))).total);
      s.layered = static_cast<double>(graph_size(build_layered(net, sc)).total);
      s.original = static_cast<double>(net.node_count() + net.edge_count());
      return s;
    });
    SizeBenchRow row{n, options.z, 0, 0, 0};
    for (const auto& s : samples) {
      row.our_size += s.ours;
      row.layered_size += s.layered;
      row.original_size += s.original;
    }
    const auto k = static_cast<double>(samples.size());
    row.our_size /= k;
    row.layered_size /= k;
    row.original_size /= k;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return rows;
}

Network placement_bench_network(std::size_t n, const PlaceBenchOptions& options, std::size_t trial) {
  RandomNetworkOptions ro;
  ro.nodes = n;
  ro.directed = true;
  ro.function_probability = 0;
  ro.average_degree = std::min(static_cast<double>(n) / 3.0, static_cast<double>(n - 1));
  ro.capacity_lo = options.capacity_lo;
  ro.capacity_hi = options.capacity_hi;
  ro.seed = trial_seed(options.seed, n, trial);
  Network drawn = random_network(ro);
  Network net(true);
  for (NodeId v = 0; v < drawn.node_count(); ++v) net.add_node(drawn.name(v));
  const NodeId s = 0;
  const auto d = static_cast<NodeId>(n - 1);
  for (const auto& e : drawn.edges()) {
    if (e.tail == s && e.head == d) continue;
    net.add_edge(e.tail, e.head, e.cost, e.capacity);
  }
  return net;
}

std::vector<PlaceBenchRow> bench_place(const PlaceBenchOptions& options) {
  if (options.trials == 0) throw InputError("trials must be positive");
  std::vector<PlaceBenchRow> rows;
  for (std::size_t n : options.nodes) {
    if (n < 2) throw InputError("benchmark graphs need at least two nodes");
    const bool exact = n <= options.exact_limit;
    auto sizes = run_trials<std::size_t>(options.trials, [&](std::size_t trial) {
      Network net = placement_bench_network(n, options, trial);
      auto inst = make_placement_instance(std::move(net), 0, static_cast<NodeId>(n - 1));
      auto result = exact ? placement_min(inst) : placement_greedy(inst);
      return result.nodes.size();
    });
    double total = 0;
    for (std::size_t s : sizes) total += static_cast<double>(s);
    rows.push_back({n, total / static_cast<double>(sizes.size()), exact ? "exact" : "greedy"});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return rows;
}

void write_size_csv(std::ostream& out, const std::vector<SizeBenchRow>& rows) {
  out << "n,z,our_size,layered_size,original_size\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.z << ',' << std::fixed << std::setprecision(1) << r.our_size << ','
        << r.layered_size << ',' << r.original_size << std::defaultfloat << '\n';
  }
}

void write_place_csv(std::ostream& out, const std::vector<PlaceBenchRow>& rows) {
  out << "n,avg_placement_size,method\n";
  for (const auto& r : rows) {
    out << r.n << ',' << std::fixed << std::setprecision(2) << r.average_size << std::defaultfloat << ','
        << r.method << '\n';
  }
}

}  // namespace sfc
