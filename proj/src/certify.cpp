#include "lot/certify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace lot {

// ---------------------------------------------------------------------------
// Forest conditions

namespace {

SideForest side_forest(const LinkGraph& side, const std::vector<bool>& relative_to = {}) {
  SideForest out;
  for (const auto& c : side.corners) out.corners.push_back(c.index());
  const auto g = side.multigraph();
  const auto check = relative_to.empty() ? is_forest(g) : is_relative_forest(g, relative_to);
  out.forest = check.holds;
  if (check.cycle) {
    for (auto e : check.cycle->edges) out.cycle.push_back(side.corners[e].index());
  }
  return out;
}

LbfCheck both_sides(const Log& log, const SignAssignment& eps,
                    const std::vector<bool>* part_corners = nullptr) {
  if (eps.signs.size() != log.vertex_count())
    throw LogError("sign assignment must cover all " + std::to_string(log.vertex_count()) + " vertices");
  const auto link = build_link(log);
  LbfCheck out;
  for (bool negate : {false, true}) {
    const auto side = induced_subgraph(link, sign_side(eps, negate));
    std::vector<bool> mask;
    if (part_corners) {
      for (const auto& c : side.corners) mask.push_back((*part_corners)[c.index()]);
    }
    auto result = side_forest(side, mask);
    (negate ? out.opposite : out.side) = std::move(result);
  }
  out.holds = out.side.forest && out.opposite.forest;
  return out;
}

}  // namespace

LbfCheck strong_lbf_check(const Log& log) {
  return lbf_check(log, SignAssignment{std::vector<Sign>(log.vertex_count(), Sign::plus)});
}

LbfCheck lbf_check(const Log& log, const SignAssignment& eps) { return both_sides(log, eps); }

LbfCheck relative_lbf_check(const Log& log, std::span<const SubLog> parts, const SignAssignment& eps) {
  const auto mask = part_corner_mask(log, parts);
  return both_sides(log, eps, &mask);
}

AngleAssignment angles_from_bipartition(const Log& log, const SignAssignment& eps) {
  if (eps.signs.size() != log.vertex_count())
    throw LogError("sign assignment must cover all " + std::to_string(log.vertex_count()) + " vertices");
  AngleAssignment out;
  for (const auto& c : build_link(log).corners) {
    const bool first_in = c.first.sign == eps.signs[c.first.vertex];
    const bool second_in = c.second.sign == eps.signs[c.second.vertex];
    out.angles.push_back(first_in == second_in ? 0 : 1);
  }
  return out;
}

SignAssignment pull_back_signs(const Log& log, std::span<const EdgeIndex> flips) {
  SignAssignment eps{std::vector<Sign>(log.vertex_count(), Sign::plus)};
  for (auto e : flips) eps.signs[log.edge(e).label] = Sign::minus;
  return eps;
}

// ---------------------------------------------------------------------------
// Hypotheses

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::hypothesis_failed: return "hypothesis_failed";
    case Verdict::non_generic: return "non_generic";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(Basis b) { return b == Basis::witnessed ? "witnessed" : "by_citation"; }

bool HypothesisReport::holds() const {
  return classification.kind != LogKind::general && reducedness.reduced() && reducedness.injective &&
         non_boundary_reduced_sub_lots.empty();
}

HypothesisReport check_hypotheses(const Log& log) {
  HypothesisReport r;
  r.classification = classify(log);
  r.reducedness = reducedness_report(log);
  if (r.classification.kind != LogKind::general) {
    for (auto& sub : enumerate_sub_lots(log)) {
      if (!sub.is_boundary_reduced) r.non_boundary_reduced_sub_lots.push_back(std::move(sub));
    }
  }
  return r;
}

std::vector<std::vector<VertexId>> label_groups(const Log& log) {
  const auto comps = components(log);
  std::vector<std::size_t> comp_of(log.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) comp_of[v] = c;
  }
  std::vector<std::size_t> parent(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) parent[c] = c;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : log.edges()) parent[find(comp_of[e.source])] = find(comp_of[e.label]);
  std::map<std::size_t, std::vector<VertexId>> groups;  // keyed by the group's first component
  std::vector<std::size_t> first(comps.size(), comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) first[find(c)] = std::min(first[find(c)], c);
  for (VertexId v = 0; v < log.vertex_count(); ++v) groups[first[find(comp_of[v])]].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [key, vs] : groups) out.push_back(std::move(vs));
  return out;
}

// ---------------------------------------------------------------------------
// Certification of a single LOT

namespace {

Claim witnessed(bool ok) { return {ok ? Verdict::yes : Verdict::no, Basis::witnessed, {}}; }
Claim cited(Verdict v, std::vector<std::string> citations) {
  return {v, Basis::by_citation, std::move(citations)};
}
Claim with_verdict(Verdict v) { return {v, Basis::witnessed, {}}; }

std::optional<VertexId> unique_non_label(const Log& log) {
  const auto free = non_label_vertices(log);
  if (free.size() != 1) return std::nullopt;
  return *free.begin();
}

// Branchings, partition, reorientation and strong lbf for one LOT. Sets
// `flips` on success and returns whether the chain closed.
bool certify_tree(GroupWitness& g) {
  const Log& tree = g.tree;
  if (tree.edge_count() == 0) {
    g.root = 0;
    g.branchings = BranchingPair{{0, {}}, {0, {}}};
    g.partition = Partition2{};
    g.strong_lbf_after_flips = true;
    return true;
  }
  g.root = unique_non_label(tree);
  if (!g.root) {
    g.note = "no unique non-label vertex to root the selection graph at";
    return false;
  }
  const auto sel = build_selection_graph(tree);
  auto result = two_disjoint_branchings(sel, *g.root);
  if (auto* cut = std::get_if<CutWitness>(&result)) {
    g.cut = *cut;
    return false;
  }
  auto pair = std::get<BranchingPair>(std::move(result));
  // the branching holding a(first edge) is black, so the first edge keeps its direction
  if (!std::binary_search(pair.first.arcs.begin(), pair.first.arcs.end(), ArcIndex{0}))
    std::swap(pair.first, pair.second);
  Partition2 p{std::vector<Color>(sel.arcs.size(), Color::white)};
  for (auto a : pair.first.arcs) p.colors[a] = Color::black;
  g.branchings = std::move(pair);
  if (!is_admissible(sel, p).admissible) {
    g.note = "branchings do not form an admissible partition";
    g.partition = std::move(p);
    return false;
  }
  auto reoriented = reorientation_from_partition(tree, p);
  g.partition = std::move(p);
  g.flips = std::move(reoriented.flips);
  g.strong_lbf_after_flips = strong_lbf_check(reoriented.log).holds;
  return g.strong_lbf_after_flips;
}

Log sub_log(const Log& log, const std::vector<VertexId>& vertices, std::vector<EdgeIndex>& edges) {
  std::vector<VertexId> local(log.vertex_count(), SIZE_MAX);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = i;
    names.push_back(log.vertex_name(vertices[i]));
  }
  Log out(std::move(names), {});
  edges.clear();
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    const auto& edge = log.edge(e);
    if (local[edge.source] == SIZE_MAX) continue;
    out.add_edge(edge.id, local[edge.source], local[edge.target], local[edge.label]);
    edges.push_back(e);
  }
  return out;
}

std::string fresh_edge_id(const Log& log) {
  for (std::size_t k = 1;; ++k) {
    auto id = "_w" + std::to_string(k);
    if (!log.find_edge(id)) return id;
  }
}

// Joins the components of a label-closed LOF into one LOT with extra edges
// x1 -> x2 labeled by vertices that label nothing, keeping the hypotheses.
bool embed_group(GroupWitness& g) {
  Log tree = g.tree;
  const auto comps = components(tree);
  std::vector<std::size_t> comp_of(tree.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) comp_of[v] = c;
  }
  const auto free = non_label_vertices(tree);
  std::vector<VertexId> spare(free.begin(), free.end());
  std::vector<char> merged(comps.size(), 0);
  merged[0] = 1;

  auto labels_in = [&](VertexId x, auto&& in_target) {
    for (const auto& e : tree.edges()) {
      if (e.label == x && in_target(comp_of[e.source])) return true;
    }
    return false;
  };

  for (std::size_t step = 1; step < comps.size(); ++step) {
    // candidates ordered: mutual labeling first (the construction in the
    // proof), then one-sided, then any pair
    std::vector<std::pair<VertexId, VertexId>> candidates[3];
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (merged[c]) continue;
      for (VertexId x1 = 0; x1 < tree.vertex_count(); ++x1) {
        if (comp_of[x1] >= comps.size() || !merged[comp_of[x1]]) continue;
        const bool a = labels_in(x1, [&](std::size_t k) { return k == c; });
        for (auto x2 : comps[c]) {
          const bool b = labels_in(x2, [&](std::size_t k) { return merged[k] != 0; });
          candidates[a && b ? 0 : (a || b ? 1 : 2)].emplace_back(x1, x2);
        }
      }
    }
    bool done = false;
    for (const auto& list : candidates) {
      for (auto [x1, x2] : list) {
        for (std::size_t yi = 0; yi < spare.size() && !done; ++yi) {
          Log attempt = tree;
          attempt.add_edge(fresh_edge_id(attempt), x1, x2, spare[yi]);
          if (!check_hypotheses(attempt).holds()) continue;
          tree = std::move(attempt);
          g.added.push_back(tree.edge_count() - 1);
          merged[comp_of[x2]] = 1;
          spare.erase(spare.begin() + static_cast<std::ptrdiff_t>(yi));
          done = true;
        }
        if (done) break;
      }
      if (done) break;
    }
    if (!done) {
      g.note = "no connecting edge keeps the hypotheses";
      return false;
    }
  }
  g.tree = std::move(tree);
  return true;
}

void set_plain_claims(Certificate& c) {
  const bool ok = c.coloring_test.verdict == Verdict::yes;
  const Verdict v = ok ? Verdict::yes : Verdict::no;
  c.dr = cited(v, {"coloring-test-implies-DR"});
  c.aspherical = cited(v, {"coloring-test-implies-DR", "DR-implies-aspherical"});
  c.locally_indicable = cited(v, {"coloring-test-implies-nonpositive-immersion",
                                  "nonpositive-immersion-implies-locally-indicable"});
  c.va = cited(v, {"coloring-test-implies-DR", "DR-implies-VA"});
}

void set_all(Certificate& c, Verdict v) {
  for (Claim* claim : {&c.lbf, &c.coloring_test, &c.relative_lbf, &c.relative_coloring_test, &c.dr,
                       &c.aspherical, &c.locally_indicable, &c.va})
    *claim = with_verdict(v);
}

}  // namespace

Certificate certify_lof(const Log& log) {
  Certificate c;
  c.input = log;
  c.log = log;
  c.hypothesis = check_hypotheses(log);
  c.strong_lbf = witnessed(strong_lbf_check(log).holds);
  c.relative_lbf = with_verdict(Verdict::not_applicable);
  c.relative_coloring_test = with_verdict(Verdict::not_applicable);

  if (!c.hypothesis.holds()) {
    set_all(c, Verdict::hypothesis_failed);
    c.relative_lbf = c.relative_coloring_test = with_verdict(Verdict::not_applicable);
    c.note = "hypotheses fail; the relative pipeline may apply";
    // expose the obstruction in the selection graph of an injective LOT
    if (c.hypothesis.classification.kind == LogKind::tree && c.hypothesis.reducedness.injective &&
        log.edge_count() > 0) {
      GroupWitness g;
      for (VertexId v = 0; v < log.vertex_count(); ++v) g.vertices.push_back(v);
      g.tree = sub_log(log, g.vertices, g.edges);
      certify_tree(g);
      c.groups.push_back(std::move(g));
    }
    return c;
  }

  SignAssignment eps{std::vector<Sign>(log.vertex_count(), Sign::plus)};
  bool chain = true;
  for (const auto& vertices : label_groups(log)) {
    GroupWitness g;
    g.vertices = vertices;
    g.tree = sub_log(log, g.vertices, g.edges);
    const bool ok = (classify(g.tree).kind == LogKind::tree || embed_group(g)) && certify_tree(g);
    if (ok) {
      const auto local = pull_back_signs(g.tree, g.flips);
      for (std::size_t i = 0; i < g.vertices.size(); ++i) eps.signs[g.vertices[i]] = local.signs[i];
    }
    chain = chain && ok;
    c.groups.push_back(std::move(g));
  }
  if (!chain) {
    c.lbf = witnessed(false);
    c.coloring_test = with_verdict(Verdict::no);
    set_plain_claims(c);
    c.note = "the witness chain did not close";
    return c;
  }
  c.epsilon = eps;
  c.forests = lbf_check(log, eps);
  c.lbf = witnessed(c.forests->holds);
  c.angles = angles_from_bipartition(log, eps);
  c.curvature = curvature(log, *c.angles);
  c.coloring = verify_coloring_test(log, *c.angles);
  c.all_cells_nonpositive = std::all_of(c.curvature->cell_curvature.begin(),
                                        c.curvature->cell_curvature.end(), [](int k) { return k <= 0; });
  c.coloring_test = witnessed(c.coloring->passed);
  set_plain_claims(c);
  return c;
}

// ---------------------------------------------------------------------------
// Relative certification

namespace {

std::vector<SubLog> maximal_proper_sub_lots(const Log& log) {
  auto all = enumerate_sub_lots(log);
  std::vector<SubLog> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].edges.size() == log.edge_count()) continue;  // the log itself
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      if (i == j || all[j].edges.size() <= all[i].edges.size() ||
          all[j].edges.size() == log.edge_count())
        continue;
      maximal = !std::includes(all[j].edges.begin(), all[j].edges.end(), all[i].edges.begin(),
                               all[i].edges.end());
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

bool vertex_disjoint(std::span<const SubLog> parts) {
  std::set<VertexId> seen;
  for (const auto& p : parts) {
    for (auto v : p.vertices) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

}  // namespace

Certificate certify_relative(const Log& input, std::optional<std::vector<SubLog>> explicit_parts) {
  auto reduced = reduce(input);
  if (explicit_parts && !reduced.moves.empty())
    throw LogError("explicit parts need an already reduced log");
  const Log& log = reduced.log;

  const auto pre = check_hypotheses(log);
  const bool lof_injective = pre.classification.kind != LogKind::general && pre.reducedness.injective;
  std::vector<SubLog> parts;
  if (explicit_parts) {
    for (const auto& p : *explicit_parts) parts.push_back(make_sub_lot(log, p.edges));
    if (!vertex_disjoint(parts)) throw LogError("parts must be pairwise disjoint");
  } else if (lof_injective) {
    parts = maximal_proper_sub_lots(log);
  }

  if (parts.empty() || !lof_injective) {
    Certificate c = certify_lof(log);
    c.mode = Certificate::Mode::relative;
    c.input = input;
    c.reduction = reduced.moves;
    // no parts: the relative conditions are the plain ones
    c.relative_lbf = c.lbf;
    c.relative_coloring_test = c.coloring_test;
    if (!lof_injective) c.relative_lbf = c.relative_coloring_test = with_verdict(Verdict::hypothesis_failed);
    if (!reduced.moves.empty() && c.aspherical.verdict == Verdict::yes)
      c.aspherical.citations.push_back("reductions-preserve-homotopy-type-for-LOFs");
    return c;
  }

  Certificate c;
  c.mode = Certificate::Mode::relative;
  c.input = input;
  c.reduction = reduced.moves;
  c.log = log;
  c.hypothesis = pre;
  c.parts = parts;
  c.strong_lbf = witnessed(strong_lbf_check(log).holds);
  c.lbf = c.coloring_test = c.dr = c.locally_indicable = with_verdict(Verdict::not_applicable);

  auto non_generic = [&](std::string why) {
    c.relative_lbf = c.relative_coloring_test = c.va = c.aspherical = with_verdict(Verdict::non_generic);
    c.note = "non-generic: ad hoc analysis required (" + why + ")";
    return c;
  };
  if (!vertex_disjoint(parts)) return non_generic("maximal sub-LOTs overlap");

  for (const auto& p : parts) c.representatives.push_back(p.vertices.front());
  const auto q = quotient_lof(log, parts, c.representatives);
  c.quotient = q.log;
  c.quotient_certificate.push_back(certify_lof(q.log));
  const auto& qc = c.quotient_certificate.front();
  if (!qc.hypothesis.holds()) return non_generic("the quotient LOF fails the hypotheses");
  if (!qc.epsilon || qc.lbf.verdict != Verdict::yes) {
    c.relative_lbf = c.relative_coloring_test = witnessed(false);
    c.va = c.aspherical = cited(Verdict::no, {});
    c.note = "the quotient LOF has no lbf witness";
    return c;
  }

  SignAssignment eps;
  for (VertexId v = 0; v < log.vertex_count(); ++v) eps.signs.push_back(qc.epsilon->signs[q.vertex_map[v]]);
  c.epsilon = eps;
  c.forests = relative_lbf_check(log, parts, eps);
  c.relative_lbf = witnessed(c.forests->holds);
  c.angles = angles_from_bipartition(log, eps);
  c.curvature = curvature(log, *c.angles);
  c.all_cells_nonpositive = std::all_of(c.curvature->cell_curvature.begin(),
                                        c.curvature->cell_curvature.end(), [](int k) { return k <= 0; });
  c.coloring = verify_relative_coloring_test(log, parts, *c.angles);
  c.relative_coloring_test = witnessed(c.coloring->passed && c.all_cells_nonpositive);

  bool parts_va = true;
  for (const auto& p : parts) {
    c.part_certificates.push_back(certify_relative(extract(log, p)));
    parts_va = parts_va && c.part_certificates.back().va.verdict == Verdict::yes;
  }
  const bool ok = c.relative_coloring_test.verdict == Verdict::yes && parts_va;
  c.va = cited(ok ? Verdict::yes : Verdict::no,
               {"relative-coloring-test-implies-relatively-VA", "relatively-VA-with-VA-parts-implies-VA"});
  c.aspherical = cited(c.va.verdict, {"VA-implies-aspherical"});
  if (!reduced.moves.empty()) c.aspherical.citations.push_back("reductions-preserve-homotopy-type-for-LOFs");
  return c;
}

int Certificate::exit_code() const {
  const Claim& top = mode == Mode::plain ? dr : relative_coloring_test;
  switch (top.verdict) {
    case Verdict::yes: return 0;
    case Verdict::hypothesis_failed:
    case Verdict::non_generic: return 3;
    default: return 1;
  }
}

std::string input_digest(const Log& log) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : serialize_log(log)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lot
