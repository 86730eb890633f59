#include "lot/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace lot {

namespace {

bool usable(const std::vector<bool>& use, std::size_t i) { return use.empty() || use[i]; }

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Multigraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.node_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    adj[u].push_back({v, i});
    if (u != v) adj[v].push_back({u, i});
  }
  return adj;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_path(const Multigraph& g, std::size_t from,
                                                  std::size_t to, const std::vector<bool>& use,
                                                  std::optional<std::size_t> skip) {
  if (from == to) return std::vector<std::size_t>{};
  const auto adj = adjacency(g);
  std::vector<std::size_t> via(g.node_count, SIZE_MAX);
  std::vector<char> seen(g.node_count, 0);
  std::queue<std::size_t> queue;
  queue.push(from);
  seen[from] = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    for (const auto& [w, e] : adj[u]) {
      if (seen[w] || !usable(use, e) || (skip && *skip == e)) continue;
      seen[w] = 1;
      via[w] = e;
      if (w == to) {
        std::vector<std::size_t> path;
        for (std::size_t x = to; x != from;) {
          const auto edge = via[x];
          path.push_back(edge);
          x = g.edges[edge].first == x ? g.edges[edge].second : g.edges[edge].first;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push(w);
    }
  }
  return std::nullopt;
}

SimpleCycle close_cycle(const Multigraph& g, std::size_t closing,
                        const std::vector<std::size_t>& path) {
  // closing joins u and v; path runs from v back to u
  SimpleCycle c;
  const auto [u, v] = g.edges[closing];
  c.nodes.push_back(u);
  c.edges.push_back(closing);
  std::size_t at = v;
  for (std::size_t e : path) {
    c.nodes.push_back(at);
    c.edges.push_back(e);
    at = g.edges[e].first == at ? g.edges[e].second : g.edges[e].first;
  }
  return c;
}

std::vector<std::size_t> component_ids(const Multigraph& g, const std::vector<bool>& use) {
  std::vector<std::size_t> parent(g.node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!usable(use, i)) continue;
    auto a = find(g.edges[i].first);
    auto b = find(g.edges[i].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> ids(g.node_count);
  for (std::size_t v = 0; v < g.node_count; ++v) ids[v] = find(v);
  return ids;
}

ForestCheck is_forest(const Multigraph& g) {
  std::vector<bool> accepted(g.edges.size(), false);
  std::vector<std::size_t> parent(g.node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    const auto a = find(u);
    const auto b = find(v);
    if (a == b) {
      auto path = find_path(g, v, u, accepted);
      return ForestCheck{false, close_cycle(g, i, *path)};
    }
    parent[std::max(a, b)] = std::min(a, b);
    accepted[i] = true;
  }
  return ForestCheck{};
}

std::vector<bool> bridges(const Multigraph& g) {
  const auto adj = adjacency(g);
  std::vector<bool> bridge(g.edges.size(), false);
  std::vector<std::size_t> order(g.node_count, SIZE_MAX), low(g.node_count, 0);
  std::size_t clock = 0;
  // iterative lowlink DFS; parent edge tracked by index so parallel edges count
  struct Frame {
    std::size_t node;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  for (std::size_t root = 0; root < g.node_count; ++root) {
    if (order[root] != SIZE_MAX) continue;
    std::vector<Frame> stack{{root, SIZE_MAX}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.node].size()) {
        const auto [w, e] = adj[f.node][f.next++];
        if (e == f.parent_edge) continue;
        if (order[w] == SIZE_MAX) {
          order[w] = low[w] = clock++;
          stack.push_back({w, e});
        } else {
          low[f.node] = std::min(low[f.node], order[w]);
        }
      } else {
        const auto done = f;
        stack.pop_back();
        if (!stack.empty()) {
          auto& p = stack.back();
          low[p.node] = std::min(low[p.node], low[done.node]);
          if (low[done.node] > order[p.node]) bridge[done.parent_edge] = true;
        }
      }
    }
  }
  return bridge;
}

ForestCheck is_relative_forest(const Multigraph& g, const std::vector<bool>& sub) {
  const auto bridge = bridges(g);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (sub[i] || bridge[i]) continue;
    const auto [u, v] = g.edges[i];
    auto path = find_path(g, v, u, {}, i);
    return ForestCheck{false, close_cycle(g, i, *path)};
  }
  return ForestCheck{};
}

}  // namespace lot
