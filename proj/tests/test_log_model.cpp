#include <algorithm>

#include "doctest.h"
#include "lot/log.hpp"
#include "lot/oracle.hpp"
#include "support.hpp"

using namespace lot;
using lot::test::fixture;

TEST_SUITE("log_model") {

TEST_CASE("parse the shared fixtures") {
  const auto triv = parse_log("vertices: x\n");
  CHECK(triv.vertex_count() == 1);
  CHECK(triv.edge_count() == 0);

  const auto fig3 = parse_log("vertices: x y z\nedge e1: x -> y : z\nedge e2: z -> y : x\n");
  REQUIRE(fig3.edge_count() == 2);
  CHECK(fig3.edge(1).id == "e2");
  CHECK(fig3.vertex_name(fig3.edge(1).source) == "z");
  CHECK(fig3.vertex_name(fig3.edge(1).label) == "x");
  CHECK(fig3 == fixture("f_fig3"));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_log("vertices: x y\nedge e: x -> q : y\n");
    FAIL("unknown vertex accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_log("vertices: x x\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices: x y\nedge e: x -> y : x\nedge e: y -> x : y\n"), ParseError);
  CHECK_THROWS_AS(parse_log("edge e: x -> y : x\n"), ParseError);
  CHECK_THROWS_AS(parse_log(lot::test::fixture_text("malformed")), ParseError);
}

TEST_CASE("comments, blank lines, CRLF and automatic edge ids") {
  const auto log = parse_log("# a comment\r\n\r\nvertices: a b c  # trailing\r\nedge a -> b : c\nedge b -> c : a\n");
  REQUIRE(log.edge_count() == 2);
  CHECK(log.edge(0).id == "e1");
  CHECK(log.edge(1).id == "e2");
}

TEST_CASE("serialize round-trips") {
  CHECK(serialize_log(fixture("f_triv")) == "vertices: x\n");
  CHECK(serialize_log(fixture("f_fig3")) == "vertices: x y z\nedge e1: x -> y : z\nedge e2: z -> y : x\n");
  CHECK(serialize_log(fixture("f_fig3_rho")).find("edge e2: y -> z : x\n") != std::string::npos);
  oracle::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto log = oracle::random_log(rng, 8);
    CHECK(parse_log(serialize_log(log)) == log);
  }
}

TEST_CASE("classify") {
  auto c = classify(fixture("f_triv"));
  CHECK(c.kind == LogKind::tree);
  CHECK(c.components == 1);
  c = classify(fixture("f_fig3"));
  CHECK(c.kind == LogKind::tree);
  auto cyclic = fixture("f_fig3");
  cyclic.add_edge("e3", "x", "z", "y");
  c = classify(cyclic);
  CHECK(c.kind == LogKind::general);
  CHECK(c.components == 1);
  c = classify(parse_log("vertices: a b c\nedge a -> b : c\n"));
  CHECK(c.kind == LogKind::forest);
  CHECK(c.components == 2);
}

TEST_CASE("reducedness report") {
  const auto fig3 = reducedness_report(fixture("f_fig3"));
  CHECK(fig3.boundary_reduced);
  CHECK(fig3.interior_reduced);
  CHECK(fig3.compressed);
  CHECK(fig3.injective);

  const auto noncomp = reducedness_report(fixture("f_noncomp"));
  CHECK_FALSE(noncomp.compressed);
  CHECK(noncomp.compression_witnesses == std::vector<EdgeIndex>{0});

  const auto sub = reducedness_report(fixture("f_sub"));
  CHECK(sub.reduced());
  CHECK(sub.injective);

  const auto fold = reducedness_report(parse_log("vertices: a b c d\nedge a -> b : d\nedge a -> c : d\n"));
  CHECK_FALSE(fold.interior_reduced);
  CHECK_FALSE(fold.injective);
}

TEST_CASE("reduce") {
  auto r = reduce(fixture("f_fig3"));
  CHECK(r.moves.empty());
  CHECK(r.log == fixture("f_fig3"));

  r = reduce(fixture("f_noncomp"));
  CHECK(r.log.vertex_count() == 1);
  CHECK(r.log.edge_count() == 0);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0].kind == MoveKind::compress);
  CHECK(r.moves[0].edge == "e");

  // a valency-1 non-label vertex hanging off F_fig3
  auto hang = fixture("f_fig3");
  hang.add_vertex("w");
  hang.add_edge("e3", "w", "x", "y");
  r = reduce(hang);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0].kind == MoveKind::boundary);
  CHECK(r.moves[0].removed == "w");
  CHECK(r.log == fixture("f_fig3"));
}

TEST_CASE("reduce reaches a reduced fixed point and replays") {
  oracle::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto log = i % 2 ? oracle::random_log(rng, 8) : oracle::random_lof(rng, 9);
    const auto r = reduce(log);
    const auto report = reducedness_report(r.log);
    CHECK((report.reduced() || r.log.edge_count() == 0));
    CHECK(reduce(r.log).moves.empty());
    Log replay = log;
    for (const auto& m : r.moves) replay = apply_move(replay, m);
    CHECK(replay == r.log);
    if (classify(log).kind != LogKind::general) CHECK(classify(r.log).kind != LogKind::general);
  }
}

TEST_CASE("reorient and block_reorient") {
  const auto fig3 = fixture("f_fig3");
  CHECK(reorient(fig3, std::set<std::string>{"e2"}) == fixture("f_fig3_rho"));
  CHECK(reorient(fig3, std::set<std::string>{}) == fig3);
  const std::set<std::string> both{"e1", "e2"};
  CHECK(reorient(reorient(fig3, both), both) == fig3);
  CHECK_THROWS_AS(reorient(fig3, std::set<std::string>{"e9"}), LogError);
  CHECK(block_reorient(fig3, {"x"}) == fixture("f_fig3_rho"));
  CHECK(block_reorient(fig3, {"y"}) == fig3);

  // injective: each reorientation is a block reorientation at the flipped edges' labels
  const auto sub = fixture("f_sub");
  for (unsigned mask = 0; mask < (1u << sub.edge_count()); ++mask) {
    std::set<std::string> ids, labels;
    for (EdgeIndex e = 0; e < sub.edge_count(); ++e) {
      if (mask >> e & 1) ids.insert(sub.edge(e).id), labels.insert(sub.vertex_name(sub.edge(e).label));
    }
    CHECK(reorient(sub, ids) == block_reorient(sub, labels));
  }
}

TEST_CASE("sub-LOT enumeration") {
  const auto fig3 = enumerate_sub_lots(fixture("f_fig3"));
  REQUIRE(fig3.size() == 1);
  CHECK(fig3[0].edges == std::vector<EdgeIndex>{0, 1});
  CHECK(enumerate_sub_lots(fixture("f_triv")).empty());

  const auto sub = enumerate_sub_lots(fixture("f_sub"));
  const auto bad = std::count_if(sub.begin(), sub.end(), [](const SubLog& s) { return !s.is_boundary_reduced; });
  CHECK(bad >= 1);
  const auto x = std::find_if(sub.begin(), sub.end(), [](const SubLog& s) { return !s.is_boundary_reduced; });
  CHECK(x->edges == std::vector<EdgeIndex>{0, 1, 2});
  const auto log = fixture("f_sub");
  CHECK(sub_lot_free_vertex(log, *x) == log.vertex("x4"));
}

TEST_CASE("sub-LOT enumeration agrees with edge-subset brute force") {
  oracle::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const auto log = i % 3 ? oracle::random_lof(rng, 9)
                           : oracle::random_reduced_injective_lot(3 + i % 7, 1000 + i).log;
    const auto fast = enumerate_sub_lots(log);
    const auto brute = oracle::brute_force_sub_lots(log);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(fast[k].edges == brute[k].edges);
      CHECK(fast[k].is_boundary_reduced == brute[k].boundary_reduced);
    }
    const auto capped = enumerate_sub_lots(log, 4);
    const auto expected = std::count_if(fast.begin(), fast.end(), [](const SubLog& s) { return s.vertices.size() <= 4; });
    CHECK(capped.size() == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("make_sub_lot validates") {
  const auto log = fixture("f_fig3");
  CHECK_THROWS_AS(make_sub_lot(log, std::vector<EdgeIndex>{0}), LogError);
  CHECK(make_sub_lot(log, std::vector<EdgeIndex>{0, 1}).is_tree);
}

TEST_CASE("quotient_lof") {
  const auto fig3 = fixture("f_fig3");
  auto q = quotient_lof(fig3, {}, {});
  CHECK(q.log == fig3);

  const auto sub = fixture("f_sub");
  const auto part = make_sub_lot(sub, std::vector<EdgeIndex>{0, 1, 2});
  const std::vector<SubLog> parts{part};
  const std::vector<VertexId> reps{part.vertices.front()};
  q = quotient_lof(sub, parts, reps);
  CHECK(q.log.vertex_count() == sub.vertex_count() - (part.vertices.size() - 1));
  CHECK(q.log.edge_count() == sub.edge_count() - part.edges.size());
  CHECK(classify(q.log).kind == LogKind::tree);
  for (EdgeIndex e = 0; e < sub.edge_count(); ++e) CHECK(q.edge_map[e].has_value() == (e >= 3));

  const auto whole = make_sub_lot(fig3, std::vector<EdgeIndex>{0, 1});
  const std::vector<SubLog> all{whole};
  const std::vector<VertexId> y{fig3.vertex("y")};
  q = quotient_lof(fig3, all, y);
  CHECK(q.log.vertex_count() == 1);
  CHECK(q.log.edge_count() == 0);

  const std::vector<VertexId> outside{sub.vertex("x1")};
  CHECK_THROWS_AS(quotient_lof(sub, parts, outside), LogError);
  const std::vector<SubLog> twice{part, part};
  const std::vector<VertexId> reps2{reps[0], reps[0]};
  CHECK_THROWS_AS(quotient_lof(sub, twice, reps2), LogError);
}

TEST_CASE("non-label vertices") {
  const auto fig3 = fixture("f_fig3");
  CHECK(non_label_vertices(fig3) == std::set<VertexId>{fig3.vertex("y")});
  CHECK(non_label_vertices(fixture("f_triv")) == std::set<VertexId>{0});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto lot = oracle::random_reduced_injective_lot(3 + seed % 8, seed).log;
    CHECK(non_label_vertices(lot).size() == 1);
    CHECK(reducedness_report(lot).interior_reduced);
  }
}

}
