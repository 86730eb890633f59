#include "lot/selection.hpp"

#include <sstream>

namespace lot {

std::size_t SelectionGraph::in_degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& arc : arcs) d += arc.to == v;
  return d;
}

SelectionGraph build_selection_graph(const Log& log) {
  SelectionGraph sel;
  sel.node_count = log.vertex_count();
  sel.arcs.reserve(2 * log.edge_count());
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    const auto& edge = log.edge(e);
    sel.arcs.push_back({edge.source, edge.label, e, ArcKind::a});
    sel.arcs.push_back({edge.target, edge.label, e, ArcKind::b});
  }
  return sel;
}

AdmissibilityCheck is_admissible(const SelectionGraph& sel, const Partition2& p) {
  if (p.colors.size() != sel.arcs.size())
    throw LogError("partition must color all " + std::to_string(sel.arcs.size()) + " arcs");
  for (std::size_t e = 0; 2 * e < sel.arcs.size(); ++e) {
    if (p.colors[2 * e] == p.colors[2 * e + 1]) return {false, e};
  }
  return {};
}

SelectedReorientation reorientation_from_partition(const Log& log, const Partition2& p) {
  const auto sel = build_selection_graph(log);
  const auto check = is_admissible(sel, p);
  if (!check.admissible)
    throw LogError("partition is not admissible at edge '" + log.edge(*check.witness).id + "'");
  SelectedReorientation out;
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    if (p.colors[2 * e] == Color::white) out.flips.push_back(e);
  }
  out.log = reorient(log, out.flips);
  return out;
}

ArcIndex beta(const Corner& corner) {
  switch (corner.kind) {
    case CornerKind::positive: return 2 * corner.owner;
    case CornerKind::negative: return 2 * corner.owner + 1;
    default: throw LogError("mixed corners have no image in the selection graph");
  }
}

std::vector<ArcIndex> beta_image(const Log& log, Sign sign) {
  const auto part = sign_subgraph(build_link(log), sign);
  std::vector<ArcIndex> out;
  out.reserve(part.corners.size());
  // mixed corners always join opposite signs, so only c+_e (resp. c-_e) remain
  for (const auto& c : part.corners) out.push_back(beta(c));
  return out;
}

std::string selection_to_dot(const Log& log, const SelectionGraph& sel, const Partition2* coloring) {
  if (coloring && coloring->colors.size() != sel.arcs.size())
    throw LogError("coloring does not match the selection graph");
  std::ostringstream out;
  out << "digraph selection {\n";
  for (VertexId v = 0; v < sel.node_count; ++v) out << "  " << dot_quoted(log.vertex_name(v)) << ";\n";
  for (const auto& arc : sel.arcs) {
    out << "  " << dot_quoted(log.vertex_name(arc.from)) << " -> "
        << dot_quoted(log.vertex_name(arc.to)) << " [label="
        << dot_quoted((arc.kind == ArcKind::a ? "a(" : "b(") + log.edge(arc.owner).id + ")");
    if (coloring) {
      out << ", color=" << (coloring->colors[arc.index()] == Color::black ? "black" : "gray");
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lot
