#include "lot/arborescence.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lot {

namespace {

bool usable_arc(const std::vector<bool>& usable, ArcIndex a) { return usable.empty() || usable[a]; }

// Unit-capacity flow from root to sink, stopping once `need` units are routed.
class UnitFlow {
 public:
  UnitFlow(const SelectionGraph& sel, const std::vector<bool>& usable)
      : sel_(sel), out_(sel.node_count), in_(sel.node_count) {
    for (const auto& arc : sel.arcs) {
      if (arc.from == arc.to || !usable_arc(usable, arc.index())) continue;
      out_[arc.from].push_back(arc.index());
      in_[arc.to].push_back(arc.index());
    }
  }

  std::size_t run(VertexId root, VertexId sink, std::size_t need) {
    flow_.assign(sel_.arcs.size(), 0);
    std::size_t value = 0;
    while (value < need && augment(root, sink)) ++value;
    return value;
  }

  // Vertices that reach `sink` in the residual graph of the last run.
  std::vector<VertexId> sink_side(VertexId sink) const {
    std::vector<char> seen(sel_.node_count, 0);
    std::queue<VertexId> queue;
    seen[sink] = 1;
    queue.push(sink);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      // residual arc u -> v: an unsaturated arc u -> v, or a used arc v -> u
      for (auto a : in_[v]) {
        const auto u = sel_.arcs[a].from;
        if (!flow_[a] && !seen[u]) seen[u] = 1, queue.push(u);
      }
      for (auto a : out_[v]) {
        const auto u = sel_.arcs[a].to;
        if (flow_[a] && !seen[u]) seen[u] = 1, queue.push(u);
      }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < sel_.node_count; ++v) {
      if (seen[v]) out.push_back(v);
    }
    return out;
  }

 private:
  bool augment(VertexId root, VertexId sink) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via(sel_.node_count, none);
    std::vector<char> seen(sel_.node_count, 0);
    std::queue<VertexId> queue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty() && !seen[sink]) {
      const auto v = queue.front();
      queue.pop();
      for (auto a : out_[v]) {
        const auto w = sel_.arcs[a].to;
        if (!flow_[a] && !seen[w]) seen[w] = 1, via[w] = a, queue.push(w);
      }
      for (auto a : in_[v]) {
        const auto w = sel_.arcs[a].from;
        if (flow_[a] && !seen[w]) seen[w] = 1, via[w] = a, queue.push(w);
      }
    }
    if (!seen[sink]) return false;
    for (VertexId v = sink; v != root;) {
      const auto a = via[v];
      if (sel_.arcs[a].to == v && !flow_[a]) {
        flow_[a] = 1;
        v = sel_.arcs[a].from;
      } else {
        flow_[a] = 0;
        v = sel_.arcs[a].to;
      }
    }
    return true;
  }

  const SelectionGraph& sel_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
  std::vector<char> flow_;
};

void check_root(const SelectionGraph& sel, VertexId root) {
  if (root >= sel.node_count) throw LogError("root is not a vertex of the selection graph");
}

}  // namespace

std::size_t cut_in_degree(const SelectionGraph& sel, const std::vector<VertexId>& s,
                          const std::vector<bool>& usable) {
  std::vector<char> in(sel.node_count, 0);
  for (auto v : s) in.at(v) = 1;
  std::size_t d = 0;
  for (const auto& arc : sel.arcs) {
    if (usable_arc(usable, arc.index()) && !in[arc.from] && in[arc.to]) ++d;
  }
  return d;
}

EdmondsCheck edmonds_condition(const SelectionGraph& sel, VertexId root, std::size_t n,
                               const std::vector<bool>& usable) {
  check_root(sel, root);
  UnitFlow flow(sel, usable);
  EdmondsCheck out;
  for (VertexId t = 0; t < sel.node_count; ++t) {
    if (t == root) continue;
    const auto value = flow.run(root, t, n);
    if (value >= n) continue;
    CutWitness cut{flow.sink_side(t), value};
    if (!out.cut || cut.delta < out.cut->delta ||
        (cut.delta == out.cut->delta && cut.vertices.size() < out.cut->vertices.size()))
      out.cut = std::move(cut);
  }
  out.holds = !out.cut;
  return out;
}

std::variant<std::vector<Branching>, CutWitness> disjoint_branchings(const SelectionGraph& sel,
                                                                     VertexId root, std::size_t k) {
  if (auto check = edmonds_condition(sel, root, k); !check.holds) return *check.cut;
  std::vector<bool> free(sel.arcs.size(), true);
  std::vector<Branching> out;
  for (std::size_t round = 0; round < k; ++round) {
    const std::size_t rest = k - round - 1;
    Branching b{root, {}};
    std::vector<char> reached(sel.node_count, 0);
    reached[root] = 1;
    for (std::size_t size = 1; size < sel.node_count; ++size) {
      bool grown = false;
      for (const auto& arc : sel.arcs) {
        const auto a = arc.index();
        if (!free[a] || !reached[arc.from] || reached[arc.to]) continue;
        free[a] = false;
        if (rest == 0 || edmonds_condition(sel, root, rest, free).holds) {
          reached[arc.to] = 1;
          b.arcs.push_back(a);
          grown = true;
          break;
        }
        free[a] = true;
      }
      // cannot happen while the invariant holds
      if (!grown) throw std::logic_error("branching growth stalled");
    }
    std::sort(b.arcs.begin(), b.arcs.end());
    out.push_back(std::move(b));
  }
  return out;
}

std::variant<BranchingPair, CutWitness> two_disjoint_branchings(const SelectionGraph& sel,
                                                                VertexId root) {
  auto result = disjoint_branchings(sel, root, 2);
  if (auto* cut = std::get_if<CutWitness>(&result)) return *cut;
  auto& pair = std::get<std::vector<Branching>>(result);
  return BranchingPair{std::move(pair[0]), std::move(pair[1])};
}

BranchingCheck verify_branching(const SelectionGraph& sel, const Branching& b) {
  if (b.root >= sel.node_count) return {false, std::nullopt, "root outside the graph"};
  std::vector<std::optional<ArcIndex>> into(sel.node_count);
  std::vector<char> used(sel.arcs.size(), 0);
  for (auto a : b.arcs) {
    if (a >= sel.arcs.size()) return {false, std::nullopt, "arc outside the graph"};
    if (used[a]) return {false, sel.arcs[a].to, "arc listed twice"};
    used[a] = 1;
    const auto v = sel.arcs[a].to;
    if (v == b.root) return {false, v, "arc directed towards the root"};
    if (into[v]) return {false, v, "two arcs directed towards the vertex"};
    into[v] = a;
  }
  for (VertexId v = 0; v < sel.node_count; ++v) {
    if (v != b.root && !into[v]) return {false, v, "no arc directed towards the vertex"};
  }
  // with one arc into each non-root vertex, following them back must reach the root
  for (VertexId v = 0; v < sel.node_count; ++v) {
    VertexId at = v;
    for (std::size_t steps = 0; at != b.root; ++steps) {
      if (steps >= sel.node_count) return {false, v, "vertex lies on a cycle of the branching"};
      at = sel.arcs[*into[at]].from;
    }
  }
  return {};
}

}  // namespace lot
