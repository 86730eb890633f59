// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lot/certificate_json.hpp"
#include "lot/certify.hpp"
#include "lot/oracle.hpp"
#include "properties.hpp"

using namespace lot;

namespace {

constexpr std::uint64_t base_seed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Graphs met while running criteria 1-7, replayed against the oracles in 8.
struct Seen {
  struct Colored {
    Log log;
    AngleAssignment angles;
    std::vector<SubLog> parts;
  };
  std::vector<Multigraph> forests;                                   // is_forest
  std::vector<std::pair<Multigraph, std::vector<bool>>> relative;    // is_relative_forest
  std::vector<Colored> colored;                                      // coloring tests
};

constexpr std::size_t max_oracle_corners = 48;

void remember_colored(Seen& seen, const Log& log, const AngleAssignment& angles,
                      std::vector<SubLog> parts = {}) {
  if (4 * log.edge_count() <= max_oracle_corners) seen.colored.push_back({log, angles, std::move(parts)});
}

Multigraph side_graph(const Log& log, const LinkGraph& side) {
  Multigraph g{2 * log.vertex_count(), {}};
  for (const auto& c : side.corners) g.edges.emplace_back(c.first.node(), c.second.node());
  return g;
}

void remember_sides(Seen& seen, const Log& log, const SignAssignment& eps,
                    std::span<const SubLog> parts = {}) {
  if (4 * log.edge_count() > max_oracle_corners) return;
  const auto link = build_link(log);
  const auto mask = part_corner_mask(log, parts);
  for (bool negate : {false, true}) {
    const auto side = induced_subgraph(link, sign_side(eps, negate));
    auto g = side_graph(log, side);
    if (parts.empty()) {
      seen.forests.push_back(std::move(g));
    } else {
      std::vector<bool> in_parts;
      for (const auto& c : side.corners) in_parts.push_back(mask[c.index()]);
      seen.relative.emplace_back(std::move(g), std::move(in_parts));
    }
  }
}

std::vector<Log> random_log_corpus() {
  oracle::Rng rng(base_seed + 1);
  std::vector<Log> out;
  for (int i = 0; i < 500; ++i) out.push_back(oracle::random_log(rng, 12));
  return out;
}

// Reduced injective LOTs on 3..10 vertices whose sub-LOTs are all boundary
// reduced, checked against the edge-subset oracle.
std::vector<Log> good_lot_corpus(std::size_t count) {
  std::vector<Log> out;
  for (std::uint64_t seed = base_seed; out.size() < count; ++seed) {
    const auto gen = oracle::random_reduced_injective_lot(3 + seed % 8, seed);
    if (!gen.all_sub_lots_boundary_reduced) continue;
    const auto subs = oracle::brute_force_sub_lots(gen.log);
    if (std::any_of(subs.begin(), subs.end(), [](const auto& s) { return !s.boundary_reduced; })) continue;
    out.push_back(gen.log);
  }
  return out;
}

// LOTs with a sub-LOT that is not boundary reduced.
std::vector<Log> bad_lot_corpus(std::size_t count) {
  std::vector<Log> out;
  for (std::uint64_t seed = base_seed; out.size() < count; ++seed) {
    const auto gen = oracle::random_reduced_injective_lot(6 + seed % 4, seed);
    if (!gen.all_sub_lots_boundary_reduced) out.push_back(gen.log);
  }
  return out;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1 ------------------------------------------------------------------------

Outcome corner_rule(const std::vector<Log>& corpus) {
  for (const auto& log : corpus) {
    if (!test::corner_rule_holds(log)) return fail("corner table mismatch on\n" + serialize_log(log));
  }
  return {true, std::to_string(corpus.size()) + " logs"};
}

// 2 ------------------------------------------------------------------------

Outcome gauss_bonnet(const std::vector<Log>& corpus, Seen& seen) {
  oracle::Rng rng(base_seed + 2);
  std::size_t checks = 0;
  for (const auto& log : corpus) {
    const int n = static_cast<int>(log.vertex_count()), m = static_cast<int>(log.edge_count());
    for (int k = 0; k < 10; ++k) {
      AngleAssignment angles;
      for (std::size_t c = 0; c < 4 * log.edge_count(); ++c)
        angles.angles.push_back(static_cast<std::uint8_t>(oracle::uniform(rng, 2)));
      const auto r = curvature(log, angles);
      int total = 0, cells = 0;
      for (auto a : angles.angles) total += a;
      for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
        int sum = 0;
        for (std::size_t j = 0; j < 4; ++j) sum += angles.angles[4 * e + j];
        if (r.cell_curvature[e] != sum - 2) return fail("cell curvature");
        cells += sum - 2;
      }
      const int chi_link = 2 * n - 4 * m;
      const int kappa_v = 2 - chi_link - total;
      if (r.vertex_curvature != kappa_v || 2 * (1 - n + m) != kappa_v + cells || !r.gauss_bonnet_holds())
        return fail("2 chi(K) != kappa(v) + sum kappa(d) on\n" + serialize_log(log));
      ++checks;
      if (k < 2) remember_colored(seen, log, angles);
    }
  }
  return {true, std::to_string(checks) + " assignments"};
}

// 3 ------------------------------------------------------------------------

Outcome reorientation() {
  oracle::Rng rng(base_seed + 3);
  std::size_t maps = 0;
  for (int i = 0; i < 200; ++i) {
    const auto log = oracle::random_lof(rng, 10);
    for (VertexId x = 0; x < log.vertex_count(); ++x, ++maps) {
      if (!test::block_swap_is_isomorphism(log, x))
        return fail("block reorientation at " + log.vertex_name(x) + " on\n" + serialize_log(log));
    }
    for (auto x : non_label_vertices(log)) {
      ++maps;
      if (!test::swap_is_automorphism(log, x))
        return fail("swap at non-label " + log.vertex_name(x) + " on\n" + serialize_log(log));
    }
  }
  return {true, "200 LOFs, " + std::to_string(maps) + " swap maps"};
}

// 4 ------------------------------------------------------------------------

Outcome edmonds() {
  oracle::Rng rng(base_seed + 4);
  std::size_t holding = 0, searched = 0;
  for (int i = 0; i < 200; ++i) {
    SelectionGraph sel;
    sel.node_count = 1 + oracle::uniform(rng, 10);
    const std::size_t pairs = oracle::uniform(rng, 2 * sel.node_count + 1);
    for (EdgeIndex e = 0; e < pairs; ++e) {
      const VertexId to = oracle::uniform(rng, sel.node_count);
      sel.arcs.push_back({oracle::uniform(rng, sel.node_count), to, e, ArcKind::a});
      sel.arcs.push_back({oracle::uniform(rng, sel.node_count), to, e, ArcKind::b});
    }
    const VertexId root = oracle::uniform(rng, sel.node_count);
    const auto brute = oracle::brute_force_min_cut(sel, root);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto check = edmonds_condition(sel, root, n);
      if (check.holds != (!brute || brute->delta >= n)) return fail("Edmonds condition disagrees");
      if (!check.holds && (check.cut->delta != brute->delta ||
                           cut_in_degree(sel, check.cut->vertices) != check.cut->delta))
        return fail("cut witness is not minimum");
    }
    const bool holds = edmonds_condition(sel, root, 2).holds;
    holding += holds;
    const auto pair = two_disjoint_branchings(sel, root);
    if (std::holds_alternative<BranchingPair>(pair) != holds) return fail("branching search disagrees");
    if (const auto* p = std::get_if<BranchingPair>(&pair)) {
      if (!verify_branching(sel, p->first).valid || !verify_branching(sel, p->second).valid)
        return fail("invalid branching");
      for (auto a : p->first.arcs) {
        if (std::binary_search(p->second.arcs.begin(), p->second.arcs.end(), a))
          return fail("branchings share an arc");
      }
    }
    if (sel.arcs.size() <= 20) {
      ++searched;
      if (oracle::exhaustive_branching_search(sel, root).has_value() != holds)
        return fail("exhaustive branching search disagrees");
    }
  }
  return {true, "200 graphs, " + std::to_string(holding) + " with two branchings, " +
                    std::to_string(searched) + " also searched exhaustively"};
}

// 5 ------------------------------------------------------------------------

Outcome branching_theorem(const std::vector<Log>& corpus) {
  std::size_t bound_checked = 0;
  for (const auto& log : corpus) {
    const auto sel = build_selection_graph(log);
    const auto free = non_label_vertices(log);
    if (free.size() != 1) return fail("expected one non-label vertex in\n" + serialize_log(log));
    const auto pair = two_disjoint_branchings(sel, *free.begin());
    const auto* p = std::get_if<BranchingPair>(&pair);
    if (!p) return fail("no branchings for\n" + serialize_log(log));
    if (!verify_branching(sel, p->first).valid || !verify_branching(sel, p->second).valid)
      return fail("invalid branching for\n" + serialize_log(log));
    if (log.vertex_count() <= 8) {
      ++bound_checked;
      if (oracle::subgraph_bound_violation(sel)) return fail("|E(U)| >= 2|V(U)| - 1 in\n" + serialize_log(log));
    }
  }
  return {true, std::to_string(corpus.size()) + " LOTs, bound exhaustive on " + std::to_string(bound_checked)};
}

// 6 ------------------------------------------------------------------------

Outcome main_theorem(const std::vector<Log>& corpus, Seen& seen) {
  for (const auto& log : corpus) {
    const auto c = certify_lof(log);
    const auto why = [&](const std::string& what) { return fail(what + " for\n" + serialize_log(log)); };
    if (c.lbf.verdict != Verdict::yes || !c.epsilon || !c.forests || !c.forests->holds) return why("no lbf");
    if (c.groups.size() != 1 || !c.groups[0].branchings || !c.groups[0].partition ||
        !c.groups[0].strong_lbf_after_flips)
      return why("incomplete witness chain");
    if (pull_back_signs(log, c.groups[0].flips) != *c.epsilon) return why("epsilon is not the pull-back");
    const auto all = oracle::exhaustive_lbf_search(log);
    if (std::find(all.begin(), all.end(), *c.epsilon) == all.end()) return why("oracle rejects epsilon");
    if (!c.coloring || !c.coloring->passed || c.coloring_test.verdict != Verdict::yes)
      return why("coloring test");
    for (int k : c.curvature->cell_curvature) {
      if (k > 0) return why("positive cell");
    }
    remember_sides(seen, log, *c.epsilon);
    remember_colored(seen, log, *c.angles);
  }
  return {true, std::to_string(corpus.size()) + " certificates"};
}

// 7 ------------------------------------------------------------------------

Outcome negative_control(const std::vector<Log>& corpus, Seen& seen) {
  std::size_t generic = 0, non_generic = 0;
  for (const auto& log : corpus) {
    const auto why = [&](const std::string& what) { return fail(what + " for\n" + serialize_log(log)); };
    const auto plain = certify_lof(log);
    if (plain.exit_code() != 3 || plain.groups.size() != 1 || !plain.groups[0].cut)
      return why("plain certification did not fail with a cut");
    const auto& cut = *plain.groups[0].cut;
    if (cut.delta != 1) return why("cut with delta != 1");
    bool matches = false;
    for (const auto& s : plain.hypothesis.non_boundary_reduced_sub_lots) {
      const auto x0 = sub_lot_free_vertex(log, s);
      std::vector<VertexId> rest;
      for (auto v : s.vertices) {
        if (v != *x0) rest.push_back(v);
      }
      if (cut_in_degree(build_selection_graph(log), rest) != 1) return why("delta(X0 - x0) != 1");
      matches = matches || rest == cut.vertices;
    }
    if (!matches) return why("cut is not X0 - x0 for a bad sub-LOT");

    const auto rel = certify_relative(log);
    if (rel.relative_coloring_test.verdict == Verdict::non_generic) {
      ++non_generic;
      continue;
    }
    ++generic;
    if (rel.exit_code() != 0 || rel.relative_lbf.verdict != Verdict::yes) return why("relative pipeline");
    const auto mask = part_corner_mask(rel.log, rel.parts);
    for (EdgeIndex e = 0; e < rel.log.edge_count(); ++e) {
      if (mask[4 * e] && rel.curvature->cell_curvature[e] != 0) return why("sub-LOT cell with kappa != 0");
    }
    remember_sides(seen, rel.log, *rel.epsilon, rel.parts);
    remember_colored(seen, rel.log, *rel.angles, rel.parts);
  }
  if (generic < 5) return fail("only " + std::to_string(generic) + " generic instances");
  return {true, std::to_string(generic) + " generic, " + std::to_string(non_generic) +
                    " non-generic skipped (ad hoc)"};
}

// 8 ------------------------------------------------------------------------

Outcome oracle_agreement(const Seen& seen) {
  for (const auto& g : seen.forests) {
    const std::vector<std::uint8_t> zero(g.edges.size(), 0);
    if (is_forest(g).holds == oracle::light_simple_cycle(g, zero, 0).has_value())
      return fail("is_forest disagrees with cycle search");
  }
  for (const auto& [g, mask] : seen.relative) {
    if (is_relative_forest(g, mask).holds == oracle::homology_reduced_cycle_search(g, mask).has_value())
      return fail("is_relative_forest disagrees with closed-walk search");
  }
  std::size_t relative = 0;
  for (const auto& c : seen.colored) {
    const bool fast = c.parts.empty() ? verify_coloring_test(c.log, c.angles).passed
                                      : verify_relative_coloring_test(c.log, c.parts, c.angles).passed;
    if (fast != oracle::coloring_test_by_cycles(c.log, c.angles, c.parts))
      return fail("coloring test disagrees on\n" + serialize_log(c.log));
    relative += !c.parts.empty();
  }
  return {true, std::to_string(seen.forests.size()) + " forests, " + std::to_string(seen.relative.size()) +
                    " relative forests, " + std::to_string(seen.colored.size()) + " colorings (" +
                    std::to_string(relative) + " relative)"};
}

// 9 ------------------------------------------------------------------------

std::string transcript() {
  std::string out;
  for (const auto& log : good_lot_corpus(200)) {
    const auto c = certify_lof(log);
    out += certificate_text(c);
    out += link_to_dot(log, build_link(log), &*c.angles);
    const auto& g = c.groups.front();
    out += selection_to_dot(log, build_selection_graph(log), &*g.partition);
  }
  for (const auto& log : bad_lot_corpus(12)) {
    out += certificate_text(certify_lof(log));
    out += certificate_text(certify_relative(log));
    out += link_to_dot(log, build_link(log));
    out += selection_to_dot(log, build_selection_graph(log));
  }
  return out;
}

Outcome determinism() {
  const auto a = transcript();
  const auto b = transcript();
  if (a != b) return fail("transcripts differ");
  return {true, std::to_string(a.size()) + " bytes identical across two runs"};
}

}  // namespace

int main() {
  Seen seen;
  const auto logs = random_log_corpus();
  std::vector<Log> good, bad;

  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "corner-rule conformance", 1, [&] { return corner_rule(logs); }},
      {2, "Gauss-Bonnet", 5, [&] { return gauss_bonnet(logs, seen); }},
      {3, "reorientation isomorphisms", 5, [&] { return reorientation(); }},
      {4, "Edmonds equivalence", 30, [&] { return edmonds(); }},
      {5, "disjoint branchings end-to-end", 60,
       [&] {
         good = good_lot_corpus(200);
         return branching_theorem(good);
       }},
      {6, "lbf certificates end-to-end", 60, [&] { return main_theorem(good, seen); }},
      {7, "negative control", 60,
       [&] {
         bad = bad_lot_corpus(12);
         return negative_control(bad, seen);
       }},
      {8, "oracle agreement", 120, [&] { return oracle_agreement(seen); }},
      {9, "determinism", 600, [&] { return determinism(); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.ok && secs > c.limit) r = fail("over the time limit");
    all = all && r.ok;
    std::printf("criterion %d %-32s %s  %.2fs (limit %.0fs)  %s\n", c.number, c.name, r.ok ? "PASS" : "FAIL",
                secs, c.limit, r.detail.c_str());
  }
  return all ? 0 : 1;
}
