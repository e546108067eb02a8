// Slow reference implementations used only by tests. None of them calls the
// library algorithm it is checking.
#pragma once

#include "sfc/lp.hpp"
#include "sfc/network.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using sfc::NodeId;
using sfc::Rational;

// All-pairs shortest distances; nullopt when unreachable.
inline std::vector<std::vector<std::optional<Rational>>> floyd_warshall(const sfc::Network& net) {
  const std::size_t n = net.node_count();
  std::vector<std::vector<std::optional<Rational>>> dist(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = Rational(0);
  for (const auto& e : net.edges()) {
    auto relax = [&](NodeId a, NodeId b) {
      if (!dist[a][b] || e.cost < *dist[a][b]) dist[a][b] = e.cost;
    };
    relax(e.tail, e.head);
    if (!net.directed()) relax(e.head, e.tail);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        Rational through = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || through < *dist[i][j]) dist[i][j] = through;
      }
    }
  }
  return dist;
}

// Cheapest s -> h1 -> ... -> hr -> d over every choice of hosts h_i of phi_i.
inline std::optional<Rational> host_sequence_cost(const sfc::Network& net, const sfc::ServiceChain& sc) {
  auto dist = floyd_warshall(net);
  const std::size_t n = net.node_count();
  // best[v]: cheapest cost to stand at v having processed the prefix so far.
  std::vector<std::optional<Rational>> best(n);
  best[sc.source] = Rational(0);
  for (const auto& fn : sc.functions) {
    std::vector<std::optional<Rational>> next(n);
    for (NodeId h = 0; h < n; ++h) {
      if (!net.hosts(h, fn)) continue;
      for (NodeId u = 0; u < n; ++u) {
        if (!best[u] || !dist[u][h]) continue;
        Rational c = *best[u] + *dist[u][h];
        if (!next[h] || c < *next[h]) next[h] = c;
      }
    }
    best = std::move(next);
  }
  std::optional<Rational> out;
  for (NodeId u = 0; u < n; ++u) {
    if (!best[u] || !dist[u][sc.destination]) continue;
    Rational c = *best[u] + *dist[u][sc.destination];
    if (!out || c < *out) out = c;
  }
  return out;
}

// Chain functions covered by replaying the walk greedily.
inline std::size_t replay_progress(const sfc::Network& net, const std::vector<NodeId>& walk,
                                   const std::vector<sfc::FunctionId>& chain) {
  std::size_t done = 0;
  for (NodeId v : walk) {
    while (done < chain.size() && net.hosts(v, chain[done])) ++done;
  }
  return done;
}

// Depth-first enumeration of walks from the source; a branch stops once it
// cannot beat the best admissible walk found or an earlier visit of the same
// (node, progress) state that was at least as cheap.
inline std::optional<std::pair<Rational, std::vector<NodeId>>> enumerate_walks(const sfc::Network& net,
                                                                             const sfc::ServiceChain& sc) {
  const auto& chain = sc.functions;
  std::optional<std::pair<Rational, std::vector<NodeId>>> best;
  std::map<std::pair<NodeId, std::size_t>, Rational> seen;
  std::vector<NodeId> walk{sc.source};
  std::function<void(const Rational&)> dfs = [&](const Rational& cost) {
    if (best && cost >= best->first) return;
    std::size_t done = replay_progress(net, walk, chain);
    auto key = std::make_pair(walk.back(), done);
    auto it = seen.find(key);
    if (it != seen.end() && it->second <= cost) return;
    seen[key] = cost;
    if (walk.back() == sc.destination && done == chain.size()) {
      best = {cost, walk};
      return;
    }
    for (const auto& e : net.edges()) {
      for (int dir = 0; dir < (net.directed() ? 1 : 2); ++dir) {
        NodeId from = dir == 0 ? e.tail : e.head;
        NodeId to = dir == 0 ? e.head : e.tail;
        if (from != walk.back()) continue;
        walk.push_back(to);
        dfs(cost + e.cost);
        walk.pop_back();
      }
    }
  };
  dfs(Rational(0));
  return best;
}

// Integer augmenting-path max flow (depth-first), for integer capacities.
inline long long dfs_max_flow(const sfc::Network& net, NodeId s, NodeId d) {
  const std::size_t n = net.node_count();
  std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
  for (const auto& e : net.edges()) {
    long long c = e.capacity.get_num().get_si();
    cap[e.tail][e.head] += c;
    if (!net.directed()) cap[e.head][e.tail] += c;
  }
  long long total = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[s] = static_cast<int>(s);
    std::vector<NodeId> stack{s};
    while (!stack.empty() && parent[d] < 0) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = static_cast<int>(u);
          stack.push_back(v);
        }
      }
    }
    if (parent[d] < 0) return total;
    long long push = std::numeric_limits<long long>::max();
    for (NodeId v = d; v != s; v = static_cast<NodeId>(parent[v])) push = std::min(push, cap[parent[v]][v]);
    for (NodeId v = d; v != s; v = static_cast<NodeId>(parent[v])) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    total += push;
  }
}

// Solves a square system exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Maximum of a bounded LP by enumerating basic solutions: every choice of
// `vars` tight constraints (bounds included). nullopt when infeasible.
inline std::optional<Rational> vertex_enumeration(const sfc::LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints()) {
    std::vector<Rational> row(n);
    for (const auto& t : c.terms) row[t.var] += t.coef;
    rows.push_back(row);
    rhs.push_back(c.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n);
    row[j] = 1;
    rows.push_back(row);
    rhs.push_back(lp.lower()[j]);
    if (lp.upper()[j]) {
      rows.push_back(row);
      rhs.push_back(*lp.upper()[j]);
    }
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(a, b);
      if (!x || !sfc::satisfies(lp, *x)) return;
      Rational value = 0;
      for (std::size_t j = 0; j < n; ++j) value += lp.objective()[j] * (*x)[j];
      if (!best || value > *best) best = value;
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  return best;
}

// Simple s -> d paths (node sequences).
inline std::vector<std::vector<NodeId>> simple_paths(const sfc::Network& net, NodeId s, NodeId d) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{s};
  std::vector<bool> on(net.node_count(), false);
  on[s] = true;
  std::function<void()> dfs = [&]() {
    if (path.back() == d) {
      out.push_back(path);
      return;
    }
    for (const auto& e : net.edges()) {
      for (int dir = 0; dir < (net.directed() ? 1 : 2); ++dir) {
        NodeId from = dir == 0 ? e.tail : e.head;
        NodeId to = dir == 0 ? e.head : e.tail;
        if (from != path.back() || on[to]) continue;
        on[to] = true;
        path.push_back(to);
        dfs();
        path.pop_back();
        on[to] = false;
      }
    }
  };
  dfs();
  return out;
}

// Path-form LP for the common rate of the given (from, to) commodities
// sharing edge capacity. Degenerate commodities (from == to) are skipped.
inline Rational path_form_rate(const sfc::Network& net, const std::vector<std::pair<NodeId, NodeId>>& commodities) {
  sfc::LinearProgram lp;
  std::size_t lambda = lp.add_variable(0, std::nullopt, 1);
  std::vector<std::vector<sfc::Term>> edge_rows(net.edge_count());
  for (const auto& [from, to] : commodities) {
    if (from == to) continue;
    std::vector<sfc::Term> demand{{lambda, -1}};
    for (const auto& path : simple_paths(net, from, to)) {
      std::size_t x = lp.add_variable();
      demand.push_back({x, 1});
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        edge_rows[*net.find_edge(path[i], path[i + 1])].push_back({x, 1});
      }
    }
    lp.add_constraint(demand, sfc::Relation::greater_equal, 0);
  }
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (!edge_rows[e].empty()) lp.add_constraint(edge_rows[e], sfc::Relation::less_equal, net.edge(e).capacity);
  }
  return sfc::solve(lp).value;
}

// Smallest number of subsets covering {0..universe-1}, by recursion over
// the lowest uncovered element.
inline std::optional<std::size_t> brute_set_cover(std::size_t universe,
                                                  const std::vector<std::vector<std::size_t>>& subsets) {
  std::optional<std::size_t> best;
  std::function<void(std::vector<bool>&, std::size_t)> go = [&](std::vector<bool>& covered, std::size_t used) {
    if (best && used >= *best) return;
    auto it = std::find(covered.begin(), covered.end(), false);
    if (it == covered.end()) {
      best = used;
      return;
    }
    auto element = static_cast<std::size_t>(it - covered.begin());
    for (const auto& subset : subsets) {
      if (std::find(subset.begin(), subset.end(), element) == subset.end()) continue;
      std::vector<bool> next = covered;
      for (std::size_t m : subset) next[m] = true;
      go(next, used + 1);
    }
  };
  std::vector<bool> covered(universe, false);
  go(covered, 0);
  return best;
}

}  // namespace oracle
