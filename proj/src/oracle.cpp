#include "lot/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lot::oracle {

namespace {

struct Adjacent {
  std::size_t node;
  std::size_t edge;
};

std::vector<std::vector<Adjacent>> adjacency(const Multigraph& g) {
  std::vector<std::vector<Adjacent>> adj(g.node_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) continue;
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  return adj;
}

// Plain union-find, kept separate from the library's own helpers.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

int weight_of(const std::vector<std::uint8_t>& weights, const std::vector<std::size_t>& edges) {
  int w = 0;
  for (auto e : edges) w += weights.empty() ? 0 : weights[e];
  return w;
}

}  // namespace

std::vector<CycleWitness> enumerate_simple_cycles(const Multigraph& g, std::size_t max_len,
                                                  const std::vector<std::uint8_t>& weights,
                                                  std::size_t limit) {
  std::vector<CycleWitness> out;
  auto emit = [&](CycleWitness c) {
    if (out.size() >= limit) throw CapExceeded("too many simple cycles");
    c.total_angle = weight_of(weights, c.edges);
    out.push_back(std::move(c));
  };
  if (max_len >= 1) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].first == g.edges[e].second) emit({{g.edges[e].first}, {e}});
    }
  }
  const auto adj = adjacency(g);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> nodes, edges;
  std::vector<char> on_path(g.node_count, 0);

  // paths start at their smallest node s; each cycle shows up once per direction
  auto dfs = [&](auto& self, std::size_t s, std::size_t v) -> void {
    for (const auto& [w, e] : adj[v]) {
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      if (w == s) {
        auto key = edges;
        key.push_back(e);
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) {
          auto cyc_edges = edges;
          cyc_edges.push_back(e);
          emit({nodes, cyc_edges});
        }
      } else if (w > s && !on_path[w] && edges.size() + 2 <= max_len) {
        nodes.push_back(w);
        edges.push_back(e);
        on_path[w] = 1;
        self(self, s, w);
        on_path[w] = 0;
        nodes.pop_back();
        edges.pop_back();
      }
    }
  };
  if (max_len >= 2) {
    for (std::size_t s = 0; s < g.node_count; ++s) {
      nodes = {s};
      edges.clear();
      on_path[s] = 1;
      dfs(dfs, s, s);
      on_path[s] = 0;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> simple_cycle_edge_sets(const Multigraph& g) {
  const std::size_t m = g.edges.size();
  if (m > 22) throw CapExceeded("edge-subset enumeration is limited to 22 edges");
  std::vector<std::vector<std::size_t>> out;
  std::vector<int> degree(g.node_count);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    Dsu dsu(g.node_count);
    std::vector<std::size_t> chosen;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      chosen.push_back(e);
      degree[g.edges[e].first] += 1;
      degree[g.edges[e].second] += 1;
      dsu.join(g.edges[e].first, g.edges[e].second);
    }
    bool ok = true;
    std::optional<std::size_t> root;
    for (std::size_t v = 0; v < g.node_count && ok; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) ok = false;
      else if (!root) root = dsu.find(v);
      else if (*root != dsu.find(v)) ok = false;
    }
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

std::optional<CycleWitness> light_simple_cycle(const Multigraph& g,
                                               const std::vector<std::uint8_t>& weights,
                                               int max_weight, const std::vector<bool>& avoid) {
  auto avoided = [&](std::size_t e) { return !avoid.empty() && avoid[e]; };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].first == g.edges[e].second && weights[e] <= max_weight && !avoided(e))
      return CycleWitness{{g.edges[e].first}, {e}, CycleClass::simple, weights[e]};
  }
  const auto adj = adjacency(g);
  std::vector<std::size_t> nodes, edges;
  std::vector<char> on_path(g.node_count, 0);
  std::optional<CycleWitness> found;

  auto dfs = [&](auto& self, std::size_t s, std::size_t v, int weight, std::size_t outside) -> void {
    for (const auto& [w, e] : adj[v]) {
      if (found) return;
      const int next = weight + weights[e];
      if (next > max_weight) continue;
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      const std::size_t out_count = outside + (avoided(e) ? 0 : 1);
      if (w == s) {
        if (out_count > 0) {
          auto cyc = edges;
          cyc.push_back(e);
          found = CycleWitness{nodes, cyc, CycleClass::simple, next};
        }
      } else if (w > s && !on_path[w]) {
        nodes.push_back(w);
        edges.push_back(e);
        on_path[w] = 1;
        self(self, s, w, next, out_count);
        on_path[w] = 0;
        nodes.pop_back();
        edges.pop_back();
      }
    }
  };
  for (std::size_t s = 0; s < g.node_count && !found; ++s) {
    nodes = {s};
    edges.clear();
    on_path[s] = 1;
    dfs(dfs, s, s, 0, 0);
    on_path[s] = 0;
  }
  return found;
}

std::optional<CycleWitness> homology_reduced_cycle_search(const Multigraph& g,
                                                          const std::vector<bool>& avoid,
                                                          std::optional<std::size_t> max_len) {
  const std::size_t bound = max_len.value_or(2 * g.edges.size());
  // incidence including loops, so a walk may run around a loop
  std::vector<std::vector<Adjacent>> inc(g.node_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    inc[u].push_back({v, e});
    if (u != v) inc[v].push_back({u, e});
  }
  std::vector<char> used(g.edges.size(), 0);
  std::vector<std::size_t> nodes, edges;

  auto can_return = [&](std::size_t from, std::size_t start) {
    std::vector<char> seen(g.node_count, 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (v == start) return true;
      for (const auto& [w, e] : inc[v]) {
        if (!used[e] && !seen[w]) seen[w] = 1, stack.push_back(w);
      }
    }
    return false;
  };

  // walks that never reuse an edge (in particular never in both directions)
  // and stop on first return to the start
  auto walk = [&](auto& self, std::size_t start, std::size_t v) -> bool {
    if (v == start) return true;
    if (edges.size() >= bound || !can_return(v, start)) return false;
    for (const auto& [w, e] : inc[v]) {
      if (used[e]) continue;
      used[e] = 1;
      nodes.push_back(w);
      edges.push_back(e);
      if (self(self, start, w)) return true;
      nodes.pop_back();
      edges.pop_back();
      used[e] = 0;
    }
    return false;
  };

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!avoid.empty() && avoid[e]) continue;
    const auto [u, v] = g.edges[e];
    for (auto [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
      if (bound == 0) break;
      std::fill(used.begin(), used.end(), 0);
      used[e] = 1;
      nodes = {from, to};
      edges = {e};
      if (walk(walk, from, to)) {
        nodes.pop_back();  // the start again
        return CycleWitness{nodes, edges, CycleClass::homology_reduced, 0};
      }
      if (u == v) break;
    }
  }
  return std::nullopt;
}

bool coloring_test_by_cycles(const Log& log, const AngleAssignment& angles,
                             std::span<const SubLog> parts) {
  std::vector<char> part_edge(log.edge_count(), 0);
  for (const auto& p : parts) {
    for (auto e : p.edges) part_edge[e] = 1;
  }
  for (EdgeIndex e = 0; e < log.edge_count(); ++e) {
    const int sum = angles.angles[4 * e] + angles.angles[4 * e + 1] + angles.angles[4 * e + 2] +
                    angles.angles[4 * e + 3];
    if (!part_edge[e] && sum > 2) return false;
  }
  const auto g = build_link(log).multigraph();
  std::vector<bool> avoid(g.edges.size(), false);
  for (std::size_t c = 0; c < g.edges.size(); ++c) avoid[c] = part_edge[c / 4];
  return !light_simple_cycle(g, angles.angles, 1, avoid);
}

std::vector<SignAssignment> exhaustive_lbf_search(const Log& log, std::size_t cap) {
  const std::size_t n = log.vertex_count();
  if (n > cap) throw CapExceeded("lbf search is capped at " + std::to_string(cap) + " vertices");
  // corners as (vertex, sign bit) pairs
  struct End {
    VertexId v;
    int minus;
  };
  std::vector<std::pair<End, End>> corners;
  for (const auto& e : log.edges()) {
    corners.push_back({{e.source, 0}, {e.label, 0}});
    corners.push_back({{e.label, 1}, {e.target, 1}});
    corners.push_back({{e.source, 1}, {e.label, 0}});
    corners.push_back({{e.label, 1}, {e.target, 0}});
  }
  std::vector<SignAssignment> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int flip = 0; flip < 2 && ok; ++flip) {
      auto chosen = [&](const End& x) { return static_cast<int>(mask >> x.v & 1) == (x.minus ^ flip); };
      Dsu dsu(n);
      std::size_t edge_count = 0;
      for (const auto& [a, b] : corners) {
        if (!chosen(a) || !chosen(b)) continue;
        ++edge_count;
        dsu.join(a.v, b.v);
      }
      std::size_t comps = 0;
      for (std::size_t v = 0; v < n; ++v) comps += dsu.find(v) == v;
      ok = edge_count == n - comps;
    }
    if (!ok) continue;
    SignAssignment eps;
    for (std::size_t v = 0; v < n; ++v) eps.signs.push_back(mask >> v & 1 ? Sign::minus : Sign::plus);
    out.push_back(std::move(eps));
  }
  return out;
}

std::optional<BranchingPair> exhaustive_branching_search(const SelectionGraph& sel, VertexId root,
                                                         std::size_t cap) {
  if (sel.arcs.size() > cap)
    throw CapExceeded("branching search is capped at " + std::to_string(cap) + " arcs");
  const std::size_t n = sel.node_count;
  std::vector<std::vector<ArcIndex>> into(n);
  for (std::size_t a = 0; a < sel.arcs.size(); ++a) {
    if (sel.arcs[a].from != sel.arcs[a].to) into[sel.arcs[a].to].push_back(a);
  }
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (v != root) order.push_back(v);
  }
  std::vector<std::optional<ArcIndex>> first(n), second(n);

  auto cyclic = [&](const std::vector<std::optional<ArcIndex>>& parent, VertexId v) {
    VertexId at = v;
    for (std::size_t steps = 0; steps <= n; ++steps) {
      if (at == root || !parent[at]) return false;
      at = sel.arcs[*parent[at]].from;
      if (at == v) return true;
    }
    return true;
  };

  auto search = [&](auto& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const auto v = order[i];
    for (auto a1 : into[v]) {
      for (auto a2 : into[v]) {
        if (a1 == a2) continue;
        first[v] = a1;
        second[v] = a2;
        if (!cyclic(first, v) && !cyclic(second, v) && self(self, i + 1)) return true;
      }
    }
    first[v].reset();
    second[v].reset();
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  BranchingPair out{{root, {}}, {root, {}}};
  for (auto v : order) {
    out.first.arcs.push_back(*first[v]);
    out.second.arcs.push_back(*second[v]);
  }
  std::sort(out.first.arcs.begin(), out.first.arcs.end());
  std::sort(out.second.arcs.begin(), out.second.arcs.end());
  return out;
}

std::optional<CutWitness> brute_force_min_cut(const SelectionGraph& sel, VertexId root) {
  std::vector<VertexId> others;
  for (VertexId v = 0; v < sel.node_count; ++v) {
    if (v != root) others.push_back(v);
  }
  if (others.size() > 24) throw CapExceeded("cut enumeration is limited to 25 vertices");
  std::optional<CutWitness> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::vector<char> in(sel.node_count, 0);
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) in[others[i]] = 1, s.push_back(others[i]);
    }
    std::size_t delta = 0;
    for (const auto& arc : sel.arcs) delta += !in[arc.from] && in[arc.to];
    if (!best || delta < best->delta || (delta == best->delta && s.size() < best->vertices.size()))
      best = CutWitness{s, delta};
  }
  return best;
}

std::vector<BruteSubLot> brute_force_sub_lots(const Log& log, std::size_t cap) {
  const std::size_t m = log.edge_count();
  if (m > cap) throw CapExceeded("sub-LOT enumeration is capped at " + std::to_string(cap) + " edges");
  std::vector<BruteSubLot> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<EdgeIndex> chosen;
    std::set<VertexId> vs;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      chosen.push_back(e);
      vs.insert(log.edge(e).source);
      vs.insert(log.edge(e).target);
    }
    if (chosen.size() + 1 != vs.size()) continue;
    Dsu dsu(log.vertex_count());
    bool acyclic = true;
    for (auto e : chosen) {
      const auto& edge = log.edge(e);
      if (dsu.find(edge.source) == dsu.find(edge.target)) acyclic = false;
      dsu.join(edge.source, edge.target);
    }
    // |E| = |V| - 1 and acyclic: a tree
    if (!acyclic) continue;
    bool closed = true;
    for (auto e : chosen) closed = closed && vs.count(log.edge(e).label);
    if (!closed) continue;
    bool boundary = true;
    for (auto v : vs) {
      int deg = 0;
      bool label = false;
      for (auto e : chosen) {
        deg += (log.edge(e).source == v) + (log.edge(e).target == v);
        label = label || log.edge(e).label == v;
      }
      if (deg == 1 && !label) boundary = false;
    }
    out.push_back({chosen, boundary});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  return out;
}

std::optional<std::vector<VertexId>> subgraph_bound_violation(const SelectionGraph& sel) {
  const std::size_t n = sel.node_count;
  if (n > 24) throw CapExceeded("subgraph enumeration is limited to 24 vertices");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Dsu dsu(n);
    std::size_t arcs = 0;
    for (const auto& arc : sel.arcs) {
      if ((mask >> arc.from & 1) && (mask >> arc.to & 1)) ++arcs, dsu.join(arc.from, arc.to);
    }
    std::vector<VertexId> w;
    std::set<std::size_t> roots;
    for (VertexId v = 0; v < n; ++v) {
      if (mask >> v & 1) w.push_back(v), roots.insert(dsu.find(v));
    }
    if (roots.size() == 1 && arcs + 1 >= 2 * w.size()) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators

std::size_t uniform(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

namespace {

std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Log random_log(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = 1 + uniform(rng, max_vertices);
  Log log(names("v", n), {});
  const std::size_t m = uniform(rng, 2 * n + 1);
  for (std::size_t i = 1; i <= m; ++i)
    log.add_edge("e" + std::to_string(i), uniform(rng, n), uniform(rng, n), uniform(rng, n));
  return log;
}

Log random_lof(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = 1 + uniform(rng, max_vertices);
  Log log(names("v", n), {});
  std::size_t id = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (uniform(rng, 4) == 0) continue;
    const VertexId u = uniform(rng, v);
    const VertexId label = uniform(rng, n);
    if (uniform(rng, 2)) log.add_edge("e" + std::to_string(++id), u, v, label);
    else log.add_edge("e" + std::to_string(++id), v, u, label);
  }
  return log;
}

GeneratedLot random_reduced_injective_lot(std::size_t n, std::uint64_t seed,
                                          std::size_t max_attempts) {
  if (n < 3) throw LogError("reduced injective LOTs with edges need at least 3 vertices");
  Rng rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    // Prüfer decoding
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = uniform(rng, n);
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::vector<std::pair<VertexId, VertexId>> tree;
    for (auto c : code) {
      VertexId leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      tree.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    VertexId u = n, w = n;
    for (VertexId v = 0; v < n; ++v) {
      if (degree[v] == 1) (u == n ? u : w) = v;
    }
    tree.emplace_back(u, w);

    for (auto& [a, b] : tree) {
      if (uniform(rng, 2)) std::swap(a, b);
    }
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform(rng, i + 1)]);

    Log log(names("x", n), {});
    bool ok = true;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const auto [s, t] = tree[i];
      const auto label = perm[i];
      if (label == s || label == t) ok = false;
      log.add_edge("e" + std::to_string(i + 1), s, t, label);
    }
    // perm[n - 1] labels nothing; a leaf there breaks boundary reducedness
    if (!ok || valency(log, perm[n - 1]) == 1) continue;
    if (!reduce(log).moves.empty()) throw std::logic_error("generated LOT is not reduced");
    GeneratedLot out{std::move(log), true, attempt};
    for (const auto& sub : enumerate_sub_lots(out.log))
      out.all_sub_lots_boundary_reduced = out.all_sub_lots_boundary_reduced && sub.is_boundary_reduced;
    return out;
  }
  throw LogError("no reduced injective LOT found within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace lot::oracle
