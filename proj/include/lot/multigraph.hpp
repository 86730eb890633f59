#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lot {

/// Undirected multigraph; loops and parallel edges are allowed and are
/// distinguished by edge index.
struct Multigraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// A simple cycle given by its node and edge sequences: edges[i] joins
/// nodes[i] and nodes[(i + 1) % size].
struct SimpleCycle {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
};

struct ForestCheck {
  bool holds = true;
  std::optional<SimpleCycle> cycle;
};

/// No loops, no parallel pairs, no longer cycles.
ForestCheck is_forest(const Multigraph& g);

/// Every edge outside `sub` is a bridge of g. The witness is a simple cycle
/// through an offending edge.
ForestCheck is_relative_forest(const Multigraph& g, const std::vector<bool>& sub);

/// bridge[i] is true iff removing edge i disconnects its endpoints.
std::vector<bool> bridges(const Multigraph& g);

/// Component id per node, using only edges with `use[i]` set (all if empty).
std::vector<std::size_t> component_ids(const Multigraph& g, const std::vector<bool>& use = {});

/// Shortest path from `from` to `to` using edges with `use[i]` set (all if
/// empty), skipping edge `skip`. Returns the edge sequence.
std::optional<std::vector<std::size_t>> find_path(const Multigraph& g, std::size_t from,
                                                  std::size_t to,
                                                  const std::vector<bool>& use = {},
                                                  std::optional<std::size_t> skip = {});

/// Closes `path` (from v to u) with edge `closing` = {u, v} into a cycle.
SimpleCycle close_cycle(const Multigraph& g, std::size_t closing, const std::vector<std::size_t>& path);

}  // namespace lot
