#include "lot/certificate_json.hpp"

namespace lot {

using nlohmann::json;

namespace {

json names(const Log& log, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(log.vertex_name(v));
  return out;
}

json edge_ids(const Log& log, const std::vector<EdgeIndex>& es) {
  json out = json::array();
  for (auto e : es) out.push_back(log.edge(e).id);
  return out;
}

json corner_ref(const Log& log, CornerIndex c) {
  const auto corner = make_corner(log, c / 4, static_cast<CornerKind>(c % 4));
  return {{"edge", log.edge(corner.owner).id},
          {"kind", to_string(corner.kind)},
          {"ends", {signed_name(log, corner.first), signed_name(log, corner.second)}}};
}

json corner_list(const Log& log, const std::vector<CornerIndex>& cs) {
  json out = json::array();
  for (auto c : cs) out.push_back(corner_ref(log, c));
  return out;
}

json arc_list(const Log& tree, const std::vector<ArcIndex>& arcs) {
  json out = json::array();
  for (auto a : arcs) out.push_back({tree.edge(a / 2).id, a % 2 ? "b" : "a"});
  return out;
}

json claim(const Claim& c) {
  json out = {{"verdict", to_string(c.verdict)}, {"basis", to_string(c.basis)}};
  if (!c.citations.empty()) out["citations"] = c.citations;
  return out;
}

json group_json(const GroupWitness& g, const Log& log) {
  json out;
  out["vertices"] = names(log, g.vertices);
  out["edges"] = edge_ids(log, g.edges);
  json added = json::array();
  for (auto e : g.added) {
    const auto& edge = g.tree.edge(e);
    added.push_back({{"id", edge.id},
                     {"source", g.tree.vertex_name(edge.source)},
                     {"target", g.tree.vertex_name(edge.target)},
                     {"label", g.tree.vertex_name(edge.label)}});
  }
  out["added_edges"] = added;
  if (g.root) out["root"] = g.tree.vertex_name(*g.root);
  if (g.branchings)
    out["branchings"] = {arc_list(g.tree, g.branchings->first.arcs), arc_list(g.tree, g.branchings->second.arcs)};
  if (g.partition) {
    std::vector<ArcIndex> black, white;
    for (ArcIndex a = 0; a < g.partition->colors.size(); ++a)
      (g.partition->colors[a] == Color::black ? black : white).push_back(a);
    out["partition"] = {{"black", arc_list(g.tree, black)}, {"white", arc_list(g.tree, white)}};
  }
  out["flips"] = edge_ids(g.tree, g.flips);
  if (g.cut) out["cut"] = {{"vertices", names(g.tree, g.cut->vertices)}, {"delta", g.cut->delta}};
  out["strong_lbf_after_flips"] = g.strong_lbf_after_flips;
  if (!g.note.empty()) out["note"] = g.note;
  return out;
}

json side_json(const Log& log, const SideForest& s) {
  json out = {{"forest", s.forest}, {"corners", corner_list(log, s.corners)}};
  if (!s.cycle.empty()) out["cycle"] = corner_list(log, s.cycle);
  return out;
}

json move_json(const ReductionMove& m) {
  json out = {{"kind", to_string(m.kind)}, {"edge", m.edge}};
  if (!m.partner.empty()) out["partner"] = m.partner;
  if (!m.kept.empty()) out["kept"] = m.kept;
  if (!m.removed.empty()) out["removed"] = m.removed;
  return out;
}

}  // namespace

json to_json(const ReducednessReport& r, const Log& log) {
  auto pairs = [&](const std::vector<EdgePair>& ps) {
    json out = json::array();
    for (const auto& p : ps)
      out.push_back({{"vertex", log.vertex_name(p.vertex)},
                     {"edges", {log.edge(p.first).id, log.edge(p.second).id}}});
    return out;
  };
  return {{"boundary_reduced", {{"holds", r.boundary_reduced}, {"witnesses", names(log, r.boundary_witnesses)}}},
          {"interior_reduced", {{"holds", r.interior_reduced}, {"witnesses", pairs(r.interior_witnesses)}}},
          {"compressed", {{"holds", r.compressed}, {"witnesses", edge_ids(log, r.compression_witnesses)}}},
          {"injective", {{"holds", r.injective}, {"witnesses", pairs(r.injectivity_witnesses)}}}};
}

json to_json(const Certificate& c) {
  const Log& log = c.log;
  json out;
  out["schema"] = certificate_schema;
  out["mode"] = c.mode == Certificate::Mode::plain ? "plain" : "relative";
  out["input"] = {{"digest", "fnv1a64:" + input_digest(c.input)},
                  {"vertices", c.input.vertex_count()},
                  {"edges", c.input.edge_count()}};
  if (c.mode == Certificate::Mode::relative) {
    json moves = json::array();
    for (const auto& m : c.reduction) moves.push_back(move_json(m));
    out["reduction"] = {{"moves", moves}, {"reduced_log", serialize_log(log)}};
  }
  out["flags"] = to_json(c.hypothesis.reducedness, log);
  out["classification"] = {{"kind", to_string(c.hypothesis.classification.kind)},
                           {"components", c.hypothesis.classification.components}};
  json bad = json::array();
  for (const auto& s : c.hypothesis.non_boundary_reduced_sub_lots) bad.push_back(edge_ids(log, s.edges));
  out["hypothesis"] = {{"holds", c.hypothesis.holds()},
                       {"sub_lots", "connected subtrees with at least one edge, closed under labels"},
                       {"non_boundary_reduced_sub_lots", bad}};

  json w;
  json groups = json::array();
  for (const auto& g : c.groups) groups.push_back(group_json(g, log));
  w["groups"] = groups;
  json flips = json::array();
  for (const auto& g : c.groups) {
    for (auto e : g.flips) {
      if (e < g.edges.size()) flips.push_back(log.edge(g.edges[e]).id);
    }
  }
  w["flips"] = flips;
  if (c.epsilon) {
    json eps = json::array();
    for (VertexId v = 0; v < log.vertex_count(); ++v)
      eps.push_back({log.vertex_name(v), std::string(1, sign_char(c.epsilon->signs[v]))});
    w["epsilon"] = eps;
  }
  if (c.forests) w["forests"] = {{"epsilon_side", side_json(log, c.forests->side)},
                                 {"opposite_side", side_json(log, c.forests->opposite)}};
  if (c.angles) {
    json angles = json::array();
    for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
      angles.push_back({{"edge", log.edge(e).id},
                        {"positive", c.angles->angles[4 * e]},
                        {"negative", c.angles->angles[4 * e + 1]},
                        {"mixed_source", c.angles->angles[4 * e + 2]},
                        {"mixed_target", c.angles->angles[4 * e + 3]}});
    }
    w["angles"] = angles;
  }
  if (c.curvature) {
    json cells = json::array();
    for (EdgeIndex e = 0; e < log.edge_count(); ++e)
      cells.push_back({{"edge", log.edge(e).id}, {"kappa", c.curvature->cell_curvature[e]}});
    w["curvature"] = {{"vertex", c.curvature->vertex_curvature},
                      {"cells", cells},
                      {"euler_complex", c.curvature->euler_complex},
                      {"euler_link", c.curvature->euler_link},
                      {"gauss_bonnet", c.curvature->gauss_bonnet_holds()},
                      {"all_cells_nonpositive", c.all_cells_nonpositive}};
  }
  if (c.coloring) {
    json col = {{"passed", c.coloring->passed}, {"positive_cells", edge_ids(log, c.coloring->positive_cells)}};
    if (c.coloring->light_cycle) {
      col["light_cycle"] = corner_list(log, *c.coloring->light_cycle);
      col["light_cycle_angle"] = c.coloring->light_cycle_angle;
    }
    w["coloring_test"] = col;
  }
  out["witnesses"] = w;

  if (c.mode == Certificate::Mode::relative) {
    json rel;
    json parts = json::array();
    for (const auto& p : c.parts) parts.push_back(edge_ids(log, p.edges));
    rel["parts"] = parts;
    rel["representatives"] = names(log, c.representatives);
    if (c.quotient) rel["quotient"] = serialize_log(*c.quotient);
    if (!c.quotient_certificate.empty()) rel["quotient_certificate"] = to_json(c.quotient_certificate.front());
    json subs = json::array();
    for (const auto& p : c.part_certificates) subs.push_back(to_json(p));
    rel["part_certificates"] = subs;
    out["relative"] = rel;
  }
  if (!c.note.empty()) out["note"] = c.note;
  out["verdicts"] = {{"strong_lbf", claim(c.strong_lbf)},
                     {"lbf", claim(c.lbf)},
                     {"coloring_test", claim(c.coloring_test)},
                     {"relative_lbf", claim(c.relative_lbf)},
                     {"relative_coloring_test", claim(c.relative_coloring_test)},
                     {"DR", claim(c.dr)},
                     {"aspherical", claim(c.aspherical)},
                     {"locally_indicable", claim(c.locally_indicable)},
                     {"VA", claim(c.va)}};
  json citations;
  for (const auto& [name, v] : out["verdicts"].items()) {
    if (v.contains("citations")) citations[name] = v["citations"];
  }
  out["citations"] = citations.is_null() ? json::object() : citations;
  return out;
}

std::string certificate_text(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

}  // namespace lot
