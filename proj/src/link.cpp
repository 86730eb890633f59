#include "lot/link.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lot {

std::string_view to_string(CornerKind kind) {
  switch (kind) {
    case CornerKind::positive: return "positive";
    case CornerKind::negative: return "negative";
    case CornerKind::mixed_source: return "mixed_source";
    case CornerKind::mixed_target: return "mixed_target";
  }
  return "?";
}

Corner make_corner(const Log& log, EdgeIndex e, CornerKind kind) {
  const auto& edge = log.edge(e);
  const VertexId i = edge.source, j = edge.target, k = edge.label;
  switch (kind) {
    case CornerKind::positive: return {{i, Sign::plus}, {k, Sign::plus}, e, kind};
    case CornerKind::negative: return {{k, Sign::minus}, {j, Sign::minus}, e, kind};
    case CornerKind::mixed_source: return {{i, Sign::minus}, {k, Sign::plus}, e, kind};
    case CornerKind::mixed_target: return {{k, Sign::minus}, {j, Sign::plus}, e, kind};
  }
  throw LogError("unknown corner kind");
}

std::size_t LinkGraph::node_count() const {
  return static_cast<std::size_t>(std::count(present.begin(), present.end(), true));
}

Multigraph LinkGraph::multigraph() const {
  Multigraph g;
  g.node_count = 2 * vertex_count;
  g.edges.reserve(corners.size());
  for (const auto& c : corners) g.edges.emplace_back(c.first.node(), c.second.node());
  return g;
}

LinkGraph build_link(const Log& log) {
  LinkGraph link;
  link.vertex_count = log.vertex_count();
  link.present.assign(2 * log.vertex_count(), true);
  link.corners.reserve(4 * log.edge_count());
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    for (auto kind : {CornerKind::positive, CornerKind::negative, CornerKind::mixed_source,
                      CornerKind::mixed_target})
      link.corners.push_back(make_corner(log, e, kind));
  }
  return link;
}

LinkGraph induced_subgraph(const LinkGraph& link, std::span<const SignedVertex> nodes) {
  LinkGraph sub;
  sub.vertex_count = link.vertex_count;
  sub.present.assign(2 * link.vertex_count, false);
  for (const auto& v : nodes) {
    if (v.node() >= sub.present.size() || !link.present[v.node()])
      throw LogError("induced subgraph on a node outside the link");
    sub.present[v.node()] = true;
  }
  for (const auto& c : link.corners) {
    if (sub.present[c.first.node()] && sub.present[c.second.node()]) sub.corners.push_back(c);
  }
  return sub;
}

LinkGraph sign_subgraph(const LinkGraph& link, Sign sign) {
  std::vector<SignedVertex> nodes;
  for (VertexId v = 0; v < link.vertex_count; ++v) {
    if (link.present[SignedVertex{v, sign}.node()]) nodes.push_back({v, sign});
  }
  return induced_subgraph(link, nodes);
}

std::vector<SignedVertex> sign_side(const SignAssignment& eps, bool negate) {
  std::vector<SignedVertex> out;
  out.reserve(eps.signs.size());
  for (VertexId v = 0; v < eps.signs.size(); ++v)
    out.push_back({v, negate ? -eps.signs[v] : eps.signs[v]});
  return out;
}

// ---------------------------------------------------------------------------
// Curvature

void check_angles(const Log& log, const AngleAssignment& angles) {
  if (angles.angles.size() != 4 * log.edge_count())
    throw LogError("angle assignment must cover all " + std::to_string(4 * log.edge_count()) +
                   " corners");
  for (auto a : angles.angles) {
    if (a > 1) throw LogError("angles must be 0 or 1");
  }
}

bool CurvatureReport::gauss_bonnet_holds() const {
  const int cells = std::accumulate(cell_curvature.begin(), cell_curvature.end(), 0);
  return 2 * euler_complex == vertex_curvature + cells;
}

CurvatureReport curvature(const Log& log, const AngleAssignment& angles) {
  check_angles(log, angles);
  const int n = static_cast<int>(log.vertex_count());
  const int m = static_cast<int>(log.edge_count());
  CurvatureReport r;
  r.euler_complex = 1 - n + m;
  r.euler_link = 2 * n - 4 * m;
  int total = 0;
  r.cell_curvature.resize(log.edge_count());
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    int sum = 0;
    for (std::size_t k = 0; k < 4; ++k) sum += angles.angles[4 * e + k];
    total += sum;
    // every 2-cell is a square: kappa(d) = sum - (4 - 2)
    r.cell_curvature[e] = sum - 2;
  }
  r.vertex_curvature = 2 - r.euler_link - total;
  return r;
}

// ---------------------------------------------------------------------------
// Coloring tests

namespace {

struct ZeroGraph {
  Multigraph graph;                  // angle-0 corners only
  std::vector<CornerIndex> corner;   // graph edge -> corner index
};

ZeroGraph zero_graph(const Multigraph& full, const AngleAssignment& angles) {
  ZeroGraph z;
  z.graph.node_count = full.node_count;
  for (std::size_t i = 0; i < full.edges.size(); ++i) {
    if (angles.angles[i] == 0) {
      z.graph.edges.push_back(full.edges[i]);
      z.corner.push_back(i);
    }
  }
  return z;
}

void record_cycle(ColoringTestResult& r, const ZeroGraph& z, const SimpleCycle& cycle, int angle) {
  r.passed = false;
  std::vector<CornerIndex> corners;
  for (auto e : cycle.edges) corners.push_back(z.corner[e]);
  r.light_cycle = std::move(corners);
  r.light_cycle_nodes.clear();
  for (auto n : cycle.nodes) r.light_cycle_nodes.push_back(SignedVertex::from_node(n));
  r.light_cycle_angle = angle;
}

// Cycle made of angle-1 corner `c` plus a path of angle-0 corners.
void record_one_corner_cycle(ColoringTestResult& r, const Multigraph& full, const ZeroGraph& z,
                             CornerIndex c) {
  const auto [u, v] = full.edges[c];
  std::vector<CornerIndex> corners{c};
  std::vector<SignedVertex> nodes{SignedVertex::from_node(u)};
  if (u != v) {
    const auto path = find_path(z.graph, v, u);
    std::size_t at = v;
    for (auto e : *path) {
      nodes.push_back(SignedVertex::from_node(at));
      corners.push_back(z.corner[e]);
      at = z.graph.edges[e].first == at ? z.graph.edges[e].second : z.graph.edges[e].first;
    }
  }
  r.passed = false;
  r.light_cycle = std::move(corners);
  r.light_cycle_nodes = std::move(nodes);
  r.light_cycle_angle = 1;
}

}  // namespace

ColoringTestResult verify_coloring_test(const Log& log, const AngleAssignment& angles) {
  const auto report = curvature(log, angles);
  ColoringTestResult r;
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    if (report.cell_curvature[e] > 0) r.positive_cells.push_back(e);
  }
  r.passed = r.positive_cells.empty();

  const auto full = build_link(log).multigraph();
  const auto z = zero_graph(full, angles);
  if (auto forest = is_forest(z.graph); !forest.holds) {
    record_cycle(r, z, *forest.cycle, 0);
    return r;
  }
  const auto comp = component_ids(z.graph);
  for (CornerIndex c = 0; c < full.edges.size(); ++c) {
    if (angles.angles[c] == 0) continue;
    const auto [u, v] = full.edges[c];
    if (comp[u] == comp[v]) {
      record_one_corner_cycle(r, full, z, c);
      return r;
    }
  }
  return r;
}

std::vector<bool> part_corner_mask(const Log& log, std::span<const SubLog> parts) {
  std::vector<bool> mask(4 * log.edge_count(), false);
  std::vector<char> taken(log.edge_count(), 0);
  for (const auto& part : parts) {
    for (EdgeIndex e : part.edges) {
      if (e >= log.edge_count()) throw LogError("part edge outside the log");
      if (taken[e]) throw LogError("parts share edge '" + log.edge(e).id + "'");
      taken[e] = 1;
      for (std::size_t k = 0; k < 4; ++k) mask[4 * e + k] = true;
    }
  }
  return mask;
}

ColoringTestResult verify_relative_coloring_test(const Log& log, std::span<const SubLog> parts,
                                                 const AngleAssignment& angles) {
  const auto in_parts = part_corner_mask(log, parts);
  const auto report = curvature(log, angles);
  ColoringTestResult r;
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    if (!in_parts[4 * e] && report.cell_curvature[e] > 0) r.positive_cells.push_back(e);
  }
  r.passed = r.positive_cells.empty();

  const auto full = build_link(log).multigraph();
  const auto z = zero_graph(full, angles);

  // angle 0: a cycle of Z leaving the parts exists iff a non-part corner of Z
  // lies on a cycle of Z
  std::vector<bool> z_in_parts(z.graph.edges.size());
  for (std::size_t i = 0; i < z.corner.size(); ++i) z_in_parts[i] = in_parts[z.corner[i]];
  if (auto rel = is_relative_forest(z.graph, z_in_parts); !rel.holds) {
    record_cycle(r, z, *rel.cycle, 0);
    return r;
  }

  // angle 1: one angle-1 corner closed up by a path in Z. With every non-part
  // corner of Z a bridge of Z, a part corner closes such a cycle leaving the
  // parts iff its ends are joined in Z but not inside the parts' share of Z.
  const auto comp = component_ids(z.graph);
  const auto comp_parts = component_ids(z.graph, z_in_parts);
  for (CornerIndex c = 0; c < full.edges.size(); ++c) {
    if (angles.angles[c] == 0) continue;
    const auto [u, v] = full.edges[c];
    const bool bad = in_parts[c] ? (comp[u] == comp[v] && comp_parts[u] != comp_parts[v])
                                 : comp[u] == comp[v];
    if (bad) {
      record_one_corner_cycle(r, full, z, c);
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Export

std::string signed_name(const Log& log, SignedVertex v) {
  return log.vertex_name(v.vertex) + sign_char(v.sign);
}

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string link_to_dot(const Log& log, const LinkGraph& link, const AngleAssignment* angles) {
  if (angles) check_angles(log, *angles);
  std::ostringstream out;
  out << "graph link {\n";
  for (std::size_t node = 0; node < link.present.size(); ++node) {
    if (link.present[node]) out << "  " << dot_quoted(signed_name(log, SignedVertex::from_node(node))) << ";\n";
  }
  for (const auto& c : link.corners) {
    out << "  " << dot_quoted(signed_name(log, c.first)) << " -- " << dot_quoted(signed_name(log, c.second))
        << " [label=" << dot_quoted(log.edge(c.owner).id + " " + std::string(to_string(c.kind)));
    if (angles) {
      const int a = angles->angles[c.index()];
      out << ", style=" << (a == 0 ? "solid" : "dashed");
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lot
