#pragma once

// Brute-force reference implementations. They share no code with the
// production checks beyond the data types, and are only meant for desk-scale
// inputs.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lot/arborescence.hpp"
#include "lot/link.hpp"
#include "lot/log.hpp"
#include "lot/multigraph.hpp"
#include "lot/selection.hpp"

namespace lot::oracle {

class CapExceeded : public LogError {
 public:
  using LogError::LogError;
};

enum class CycleClass : std::uint8_t { simple, reduced, homology_reduced };

/// Closed walk: edges[i] joins nodes[i] and nodes[(i + 1) % size].
struct CycleWitness {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  CycleClass classification = CycleClass::simple;
  int total_angle = 0;
};

/// Every simple cycle with at most `max_len` edges, once each. Loops and
/// parallel pairs count. `weights` (per edge, optional) feed total_angle.
/// Throws CapExceeded past `limit` cycles.
std::vector<CycleWitness> enumerate_simple_cycles(const Multigraph& g, std::size_t max_len,
                                                  const std::vector<std::uint8_t>& weights = {},
                                                  std::size_t limit = 1'000'000);

/// Second enumeration: edge subsets in which every node has degree 0 or 2 and
/// the used nodes are connected. Returns sorted edge sets. At most 22 edges.
std::vector<std::vector<std::size_t>> simple_cycle_edge_sets(const Multigraph& g);

/// A simple cycle of total weight <= max_weight using at least one edge outside
/// `avoid` (empty mask: no edge avoided).
std::optional<CycleWitness> light_simple_cycle(const Multigraph& g,
                                               const std::vector<std::uint8_t>& weights,
                                               int max_weight,
                                               const std::vector<bool>& avoid = {});

/// A closed walk that never uses an edge in both directions, has at most
/// `max_len` steps (default 2|E|) and leaves `avoid`.
std::optional<CycleWitness> homology_reduced_cycle_search(const Multigraph& g,
                                                          const std::vector<bool>& avoid,
                                                          std::optional<std::size_t> max_len = {});

/// Coloring-test verdict by cycle search: kappa(d) <= 0 on the cells outside
/// the parts and no simple cycle of total angle <= 1 leaves the parts' link.
bool coloring_test_by_cycles(const Log& log, const AngleAssignment& angles,
                             std::span<const SubLog> parts = {});

/// All eps (bit v of the counter set means x_v gets -) with both sign sides
/// of the link acyclic. Throws CapExceeded above `cap` vertices.
std::vector<SignAssignment> exhaustive_lbf_search(const Log& log, std::size_t cap = 16);

/// Chooses two distinct entering arcs per non-root vertex and keeps the first
/// pair of choices giving two branchings. Throws CapExceeded above `cap` arcs.
std::optional<BranchingPair> exhaustive_branching_search(const SelectionGraph& sel, VertexId root,
                                                         std::size_t cap = 20);

/// min delta(S) over all nonempty S avoiding the root, with the first smallest
/// such S in subset order. nullopt when the graph has a single vertex.
std::optional<CutWitness> brute_force_min_cut(const SelectionGraph& sel, VertexId root);

/// Sub-LOTs from edge subsets: sorted edge lists with a boundary-reduced flag.
struct BruteSubLot {
  std::vector<EdgeIndex> edges;
  bool boundary_reduced = true;
  friend bool operator==(const BruteSubLot&, const BruteSubLot&) = default;
};
std::vector<BruteSubLot> brute_force_sub_lots(const Log& log, std::size_t cap = 20);

/// A vertex set W whose induced arcs form a connected subgraph U with
/// |E(U)| >= 2|V(U)| - 1, if any.
std::optional<std::vector<VertexId>> subgraph_bound_violation(const SelectionGraph& sel);

// ---------------------------------------------------------------------------
// Generators. Randomness comes only from the engine's raw output, so results
// are identical across standard libraries.

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t bound);  // in [0, bound)

/// Arbitrary LOG: 1..max_vertices vertices, up to 2 * vertices edges.
Log random_log(Rng& rng, std::size_t max_vertices);
/// Random forest with random orientations and arbitrary labels.
Log random_lof(Rng& rng, std::size_t max_vertices);

struct GeneratedLot {
  Log log;
  bool all_sub_lots_boundary_reduced = true;
  std::size_t attempts = 0;
};

/// Uniform labeled tree (Prüfer code), random orientation and an injective
/// labeling, resampled until the result is compressed and boundary reduced so
/// that reduce() leaves it unchanged. Throws LogError after `max_attempts`.
GeneratedLot random_reduced_injective_lot(std::size_t n, std::uint64_t seed,
                                          std::size_t max_attempts = 100000);

}  // namespace lot::oracle
