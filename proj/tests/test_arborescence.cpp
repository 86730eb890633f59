#include <algorithm>

#include "doctest.h"
#include "lot/arborescence.hpp"
#include "lot/oracle.hpp"
#include "support.hpp"

using namespace lot;
using lot::test::fixture;

namespace {

SelectionGraph random_selection(oracle::Rng& rng, std::size_t max_nodes, std::size_t max_arcs) {
  SelectionGraph sel;
  sel.node_count = 1 + oracle::uniform(rng, max_nodes);
  const std::size_t pairs = oracle::uniform(rng, max_arcs / 2 + 1);
  for (std::size_t e = 0; e < pairs; ++e) {
    const VertexId to = oracle::uniform(rng, sel.node_count);
    sel.arcs.push_back({oracle::uniform(rng, sel.node_count), to, e, ArcKind::a});
    sel.arcs.push_back({oracle::uniform(rng, sel.node_count), to, e, ArcKind::b});
  }
  return sel;
}

bool disjoint(const Branching& a, const Branching& b) {
  for (auto x : a.arcs) {
    if (std::binary_search(b.arcs.begin(), b.arcs.end(), x)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("arborescence") {

TEST_CASE("Edmonds condition on the fixtures") {
  const auto fig3 = fixture("f_fig3");
  const auto sel = build_selection_graph(fig3);
  const auto y = fig3.vertex("y");
  CHECK(edmonds_condition(sel, y, 2).holds);
  CHECK_FALSE(edmonds_condition(sel, y, 3).holds);
  CHECK(cut_in_degree(sel, {fig3.vertex("x")}) == 2);
  CHECK(cut_in_degree(sel, {fig3.vertex("z")}) == 2);
  CHECK(cut_in_degree(sel, {fig3.vertex("x"), fig3.vertex("z")}) == 2);

  CHECK(edmonds_condition(build_selection_graph(fixture("f_triv")), 0, 1).holds);

  const auto sub = fixture("f_sub");
  const auto check = edmonds_condition(build_selection_graph(sub), sub.vertex("x1"), 2);
  CHECK_FALSE(check.holds);
  REQUIRE(check.cut);
  CHECK(check.cut->delta == 1);
  // X0 - {x0} for the sub-LOT e1 e2 e3 with free vertex x4
  CHECK(check.cut->vertices == std::vector<VertexId>{sub.vertex("x2"), sub.vertex("x3"), sub.vertex("x5")});
  CHECK_THROWS_AS(edmonds_condition(build_selection_graph(sub), 99, 2), LogError);
}

TEST_CASE("two disjoint branchings on the fixtures") {
  const auto fig3 = fixture("f_fig3");
  const auto sel = build_selection_graph(fig3);
  const auto result = two_disjoint_branchings(sel, fig3.vertex("y"));
  REQUIRE(std::holds_alternative<BranchingPair>(result));
  const auto& [b1, b2] = std::get<BranchingPair>(result);
  // {b(e1), a(e2)} and {b(e2), a(e1)} form the only disjoint pair
  std::set<std::vector<ArcIndex>> got{b1.arcs, b2.arcs};
  CHECK(got == std::set<std::vector<ArcIndex>>{{1, 2}, {0, 3}});
  CHECK(verify_branching(sel, b1).valid);
  CHECK(verify_branching(sel, b2).valid);

  const auto triv = two_disjoint_branchings(build_selection_graph(fixture("f_triv")), 0);
  REQUIRE(std::holds_alternative<BranchingPair>(triv));
  CHECK(std::get<BranchingPair>(triv).first.arcs.empty());
  CHECK(std::get<BranchingPair>(triv).second.arcs.empty());

  const auto sub = fixture("f_sub");
  const auto bad = two_disjoint_branchings(build_selection_graph(sub), sub.vertex("x1"));
  REQUIRE(std::holds_alternative<CutWitness>(bad));
  CHECK(std::get<CutWitness>(bad).delta == 1);

  // a single branching still exists there
  const auto one = disjoint_branchings(build_selection_graph(sub), sub.vertex("x1"), 1);
  REQUIRE(std::holds_alternative<std::vector<Branching>>(one));
  CHECK(verify_branching(build_selection_graph(sub), std::get<std::vector<Branching>>(one)[0]).valid);
}

TEST_CASE("verify_branching rejects broken sets") {
  const auto fig3 = fixture("f_fig3");
  const auto sel = build_selection_graph(fig3);
  const auto y = fig3.vertex("y");
  auto check = verify_branching(sel, Branching{y, {1}});
  CHECK_FALSE(check.valid);
  CHECK(check.vertex == fig3.vertex("x"));
  check = verify_branching(sel, Branching{y, {0, 1, 3}});
  CHECK_FALSE(check.valid);
  CHECK(check.vertex == fig3.vertex("z"));
  check = verify_branching(sel, Branching{y, {0, 2}});  // x -> z -> x
  CHECK_FALSE(check.valid);
  CHECK_FALSE(verify_branching(sel, Branching{y, {7}}).valid);
  CHECK_FALSE(verify_branching(sel, Branching{y, {1, 1}}).valid);
}

TEST_CASE("max-flow agrees with subset enumeration") {
  oracle::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto sel = random_selection(rng, 8, 20);
    const VertexId root = oracle::uniform(rng, sel.node_count);
    const auto brute = oracle::brute_force_min_cut(sel, root);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto check = edmonds_condition(sel, root, n);
      const bool expected = !brute || brute->delta >= n;
      CHECK(check.holds == expected);
      if (!check.holds) {
        CHECK(check.cut->delta == brute->delta);
        CHECK(cut_in_degree(sel, check.cut->vertices) == check.cut->delta);
        CHECK(!std::binary_search(check.cut->vertices.begin(), check.cut->vertices.end(), root));
        CHECK_FALSE(check.cut->vertices.empty());
      }
    }
  }
}

TEST_CASE("branching construction succeeds exactly under the Edmonds condition") {
  oracle::Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto sel = random_selection(rng, 7, 20);
    const VertexId root = oracle::uniform(rng, sel.node_count);
    const auto result = two_disjoint_branchings(sel, root);
    const bool holds = edmonds_condition(sel, root, 2).holds;
    CHECK(std::holds_alternative<BranchingPair>(result) == holds);
    CHECK(oracle::exhaustive_branching_search(sel, root).has_value() == holds);
    if (const auto* pair = std::get_if<BranchingPair>(&result)) {
      CHECK(verify_branching(sel, pair->first).valid);
      CHECK(verify_branching(sel, pair->second).valid);
      CHECK(disjoint(pair->first, pair->second));
    } else {
      CHECK(std::get<CutWitness>(result).delta < 2);
    }
    for (std::size_t k : {1, 3}) {
      const auto many = disjoint_branchings(sel, root, k);
      CHECK(std::holds_alternative<std::vector<Branching>>(many) == edmonds_condition(sel, root, k).holds);
      if (const auto* bs = std::get_if<std::vector<Branching>>(&many)) {
        for (std::size_t a = 0; a < bs->size(); ++a) {
          CHECK(verify_branching(sel, (*bs)[a]).valid);
          for (std::size_t b = a + 1; b < bs->size(); ++b) CHECK(disjoint((*bs)[a], (*bs)[b]));
        }
      }
    }
  }
}

TEST_CASE("bad sub-LOTs give delta(X0 - x0) = 1") {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seed < 400 && seen < 20; ++seed) {
    const auto gen = oracle::random_reduced_injective_lot(6 + seed % 4, seed);
    if (gen.all_sub_lots_boundary_reduced) continue;
    ++seen;
    const auto sel = build_selection_graph(gen.log);
    for (const auto& s : enumerate_sub_lots(gen.log)) {
      if (s.is_boundary_reduced) continue;
      const auto x0 = sub_lot_free_vertex(gen.log, s);
      REQUIRE(x0);
      std::vector<VertexId> rest;
      std::copy_if(s.vertices.begin(), s.vertices.end(), std::back_inserter(rest),
                   [&](VertexId v) { return v != *x0; });
      CHECK(cut_in_degree(sel, rest) == 1);
    }
    const auto root = *non_label_vertices(gen.log).begin();
    const auto check = edmonds_condition(sel, root, 2);
    CHECK_FALSE(check.holds);
    CHECK(check.cut->delta == 1);
  }
  CHECK(seen >= 5);
}

}
