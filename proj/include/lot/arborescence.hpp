#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lot/selection.hpp"

namespace lot {

/// Spanning arborescence of a selection graph, arcs sorted by index.
struct Branching {
  VertexId root = 0;
  std::vector<ArcIndex> arcs;
  friend bool operator==(const Branching&, const Branching&) = default;
};

/// A vertex set S avoiding the root and the number of arcs entering it.
struct CutWitness {
  std::vector<VertexId> vertices;  // sorted
  std::size_t delta = 0;
  friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

/// delta(S) counted over the arcs with `usable` set (all arcs if empty).
std::size_t cut_in_degree(const SelectionGraph& sel, const std::vector<VertexId>& s,
                          const std::vector<bool>& usable = {});

struct EdmondsCheck {
  bool holds = true;
  std::optional<CutWitness> cut;
};

/// Every nonempty S without the root has delta(S) >= n, decided by one
/// unit-capacity max-flow per sink. A failing check carries a cut of minimum
/// delta; among those, the smallest S found (sink side of a min cut).
EdmondsCheck edmonds_condition(const SelectionGraph& sel, VertexId root, std::size_t n,
                               const std::vector<bool>& usable = {});

/// k arc-disjoint branchings rooted at `root`, or the cut that rules them out.
/// Each branching is grown arc by arc in index order, keeping the remaining
/// arcs able to carry the other k - 1 (Lovász's proof of Edmonds' theorem).
std::variant<std::vector<Branching>, CutWitness> disjoint_branchings(const SelectionGraph& sel,
                                                                     VertexId root, std::size_t k);

using BranchingPair = std::pair<Branching, Branching>;

std::variant<BranchingPair, CutWitness> two_disjoint_branchings(const SelectionGraph& sel,
                                                                VertexId root);

struct BranchingCheck {
  bool valid = true;
  std::optional<VertexId> vertex;  // where the invariant breaks, if at a vertex
  std::string reason;
};

BranchingCheck verify_branching(const SelectionGraph& sel, const Branching& b);

}  // namespace lot
