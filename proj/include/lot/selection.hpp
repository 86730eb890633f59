#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lot/link.hpp"
#include "lot/log.hpp"

namespace lot {

/// a(e) = s(e) -> label(e), b(e) = t(e) -> label(e).
enum class ArcKind : std::uint8_t { a, b };

using ArcIndex = std::size_t;

struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  EdgeIndex owner = 0;
  ArcKind kind = ArcKind::a;

  /// Position in the selection graph: 2 * owner + kind.
  ArcIndex index() const { return 2 * owner + (kind == ArcKind::b ? 1 : 0); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph on the vertices of a log with arcs a(e), b(e) per
/// edge, ordered by (owner, kind). Reorienting e swaps the kinds of its arcs
/// and leaves the arc multiset unchanged.
struct SelectionGraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;

  std::size_t in_degree(VertexId v) const;
};

SelectionGraph build_selection_graph(const Log& log);

enum class Color : std::uint8_t { black, white };

/// One color per arc of a selection graph, indexed by ArcIndex.
struct Partition2 {
  std::vector<Color> colors;
  friend bool operator==(const Partition2&, const Partition2&) = default;
};

struct AdmissibilityCheck {
  bool admissible = true;
  std::optional<EdgeIndex> witness;  // an edge whose two arcs share a color
};

AdmissibilityCheck is_admissible(const SelectionGraph& sel, const Partition2& p);

struct SelectedReorientation {
  Log log;
  std::vector<EdgeIndex> flips;
};

/// Reverses exactly the edges whose a-arc is white, so that afterwards every
/// a-arc is black. Throws LogError for an inadmissible partition.
SelectedReorientation reorientation_from_partition(const Log& log, const Partition2& p);

/// The arc a corner c+_e or c-_e collapses onto when x+ and x- are identified.
/// Only defined for positive and negative corners.
ArcIndex beta(const Corner& corner);

/// Image of the all-plus (a-arcs) or all-minus (b-arcs) part of the link.
std::vector<ArcIndex> beta_image(const Log& log, Sign sign);

std::string selection_to_dot(const Log& log, const SelectionGraph& sel,
                             const Partition2* coloring = nullptr);

}  // namespace lot
