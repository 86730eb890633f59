#include "lot/log.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <utility>

namespace lot {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || name == "->") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ':' || c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : LogError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Log

Log::Log(std::vector<std::string> vertices, std::vector<Edge> edges) {
  for (auto& v : vertices) add_vertex(std::move(v));
  for (auto& e : edges) add_edge(std::move(e.id), e.source, e.target, e.label);
}

VertexId Log::add_vertex(std::string name) {
  if (!valid_name(name)) throw LogError("invalid vertex name '" + name + "'");
  if (vertex_index_.count(name)) throw LogError("duplicate vertex '" + name + "'");
  const VertexId id = vertices_.size();
  vertex_index_.emplace(name, id);
  vertices_.push_back(std::move(name));
  return id;
}

EdgeIndex Log::add_edge(std::string id, VertexId source, VertexId target, VertexId label) {
  if (!valid_name(id)) throw LogError("invalid edge id '" + id + "'");
  if (edge_index_.count(id)) throw LogError("duplicate edge id '" + id + "'");
  const auto n = vertices_.size();
  if (source >= n || target >= n || label >= n)
    throw LogError("edge '" + id + "' refers to a vertex outside the log");
  const EdgeIndex index = edges_.size();
  edge_index_.emplace(id, index);
  edges_.push_back(Edge{std::move(id), source, target, label});
  return index;
}

EdgeIndex Log::add_edge(std::string id, std::string_view source, std::string_view target,
                        std::string_view label) {
  return add_edge(std::move(id), vertex(source), vertex(target), vertex(label));
}

std::optional<VertexId> Log::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Log::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Log::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw LogError("unknown vertex '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
  bool colon = false;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
      ++i;
    } else if (c == ':') {
      tokens.push_back(Token{":", i + 1, true});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ':' && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\v' && line[i] != '\f')
        ++i;
      tokens.push_back(Token{std::string(line.substr(start, i - start)), start + 1, false});
    }
  }
  return tokens;
}

}  // namespace

Log parse_log(std::string_view text) {
  Log log;
  bool have_vertices = false;
  std::size_t line_no = 0;
  std::size_t edge_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto fail = [&](const Token& at, const std::string& what) -> ParseError {
      return ParseError(line_no, at.column, what);
    };
    const auto expect_name = [&](std::size_t i, const char* what) -> const Token& {
      if (i >= tokens.size())
        throw ParseError(line_no, line.size() + 1, std::string("expected ") + what);
      if (tokens[i].colon) throw fail(tokens[i], std::string("expected ") + what);
      return tokens[i];
    };

    if (!have_vertices) {
      if (tokens[0].text != "vertices" || tokens.size() < 2 || !tokens[1].colon)
        throw fail(tokens[0], "expected 'vertices:' header");
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (t.colon || !valid_name(t.text)) throw fail(t, "invalid vertex name '" + t.text + "'");
        if (log.find_vertex(t.text)) throw fail(t, "duplicate vertex '" + t.text + "'");
        log.add_vertex(t.text);
      }
      have_vertices = true;
    } else {
      if (tokens[0].text != "edge") throw fail(tokens[0], "expected 'edge'");
      ++edge_no;
      std::size_t i = 1;
      std::string id = "e" + std::to_string(edge_no);
      const Token* id_token = &tokens[0];
      if (tokens.size() > 2 && !tokens[1].colon && tokens[2].colon) {
        id = tokens[1].text;
        id_token = &tokens[1];
        i = 3;
      }
      if (!valid_name(id)) throw fail(*id_token, "invalid edge id '" + id + "'");
      if (log.find_edge(id)) throw fail(*id_token, "duplicate edge id '" + id + "'");
      const Token& src = expect_name(i, "source vertex");
      const Token& arrow = expect_name(i + 1, "'->'");
      if (arrow.text != "->") throw fail(arrow, "expected '->'");
      const Token& tgt = expect_name(i + 2, "target vertex");
      if (i + 3 >= tokens.size() || !tokens[i + 3].colon)
        throw ParseError(line_no, i + 3 < tokens.size() ? tokens[i + 3].column : line.size() + 1,
                         "expected ':' before label");
      const Token& label = expect_name(i + 4, "label vertex");
      if (i + 5 < tokens.size()) throw fail(tokens[i + 5], "unexpected trailing token");
      for (const Token* t : {&src, &tgt, &label})
        if (!log.find_vertex(t->text)) throw fail(*t, "unknown vertex '" + t->text + "'");
      log.add_edge(id, src.text, tgt.text, label.text);
    }
    if (end == text.size()) break;
  }
  if (!have_vertices) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'vertices:' header");
  return log;
}

std::string serialize_log(const Log& log) {
  std::string out = "vertices:";
  for (const auto& v : log.vertices()) out += " " + v;
  out += "\n";
  for (const auto& e : log.edges()) {
    out += "edge " + e.id + ": " + log.vertex_name(e.source) + " -> " + log.vertex_name(e.target) +
           " : " + log.vertex_name(e.label) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(LogKind kind) {
  switch (kind) {
    case LogKind::general: return "LOG";
    case LogKind::forest: return "LOF";
    case LogKind::tree: return "LOT";
  }
  return "?";
}

LogClass classify(const Log& log) {
  UnionFind uf(log.vertex_count());
  bool acyclic = true;
  std::size_t count = log.vertex_count();
  for (const auto& e : log.edges()) {
    if (uf.unite(e.source, e.target))
      --count;
    else
      acyclic = false;
  }
  LogClass result;
  result.components = count;
  if (!acyclic)
    result.kind = LogKind::general;
  else if (count == 1)
    result.kind = LogKind::tree;
  else
    result.kind = LogKind::forest;
  return result;
}

std::vector<std::vector<VertexId>> components(const Log& log) {
  UnionFind uf(log.vertex_count());
  for (const auto& e : log.edges()) uf.unite(e.source, e.target);
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(log.vertex_count(), SIZE_MAX);
  for (VertexId v = 0; v < log.vertex_count(); ++v) {
    const auto root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

std::size_t valency(const Log& log, VertexId v) {
  std::size_t d = 0;
  for (const auto& e : log.edges()) d += (e.source == v) + (e.target == v);
  return d;
}

std::set<VertexId> non_label_vertices(const Log& log) {
  std::set<VertexId> out;
  for (VertexId v = 0; v < log.vertex_count(); ++v) out.insert(v);
  for (const auto& e : log.edges()) out.erase(e.label);
  return out;
}

ReducednessReport reducedness_report(const Log& log) {
  ReducednessReport r;
  const auto free = non_label_vertices(log);
  for (VertexId v = 0; v < log.vertex_count(); ++v) {
    if (valency(log, v) == 1 && free.count(v)) r.boundary_witnesses.push_back(v);
  }
  const auto& edges = log.edges();
  for (EdgeIndex a = 0; a < edges.size(); ++a) {
    const auto& e = edges[a];
    if (e.label == e.source || e.label == e.target) r.compression_witnesses.push_back(a);
    for (EdgeIndex b = a + 1; b < edges.size(); ++b) {
      const auto& f = edges[b];
      if (e.label != f.label) continue;
      r.injectivity_witnesses.push_back({e.label, a, b});
      if (e.source == f.source) r.interior_witnesses.push_back({e.source, a, b});
      if (e.target == f.target) r.interior_witnesses.push_back({e.target, a, b});
    }
  }
  r.boundary_reduced = r.boundary_witnesses.empty();
  r.interior_reduced = r.interior_witnesses.empty();
  r.compressed = r.compression_witnesses.empty();
  r.injective = r.injectivity_witnesses.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Reduction

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::compress: return "compress";
    case MoveKind::fold: return "fold";
    case MoveKind::boundary: return "boundary";
  }
  return "?";
}

namespace {

// Rebuilds `log` with vertex `removed` merged into `kept` and edges in
// `dropped` deleted. `removed` may be SIZE_MAX (no identification).
Log rebuild(const Log& log, VertexId kept, VertexId removed, const std::set<EdgeIndex>& dropped,
            bool delete_removed_vertex = false) {
  std::vector<std::string> names;
  std::vector<VertexId> remap(log.vertex_count());
  for (VertexId v = 0; v < log.vertex_count(); ++v) {
    if (v == removed) continue;
    remap[v] = names.size();
    names.push_back(log.vertex_name(v));
  }
  if (removed != SIZE_MAX && !delete_removed_vertex) remap[removed] = remap[kept];
  std::vector<Edge> edges;
  for (EdgeIndex i = 0; i < log.edge_count(); ++i) {
    if (dropped.count(i)) continue;
    const auto& e = log.edge(i);
    edges.push_back(Edge{e.id, remap[e.source], remap[e.target], remap[e.label]});
  }
  return Log(std::move(names), std::move(edges));
}

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::optional<ReductionMove> next_move(const Log& log) {
  const auto& edges = log.edges();
  for (const auto& e : edges) {
    if (e.label == e.source || e.label == e.target) {
      ReductionMove m{MoveKind::compress, e.id, {}, {}, {}};
      const auto [k, r] = ordered(e.source, e.target);
      m.kept = log.vertex_name(k);
      if (k != r) m.removed = log.vertex_name(r);
      return m;
    }
  }
  for (EdgeIndex a = 0; a < edges.size(); ++a) {
    for (EdgeIndex b = a + 1; b < edges.size(); ++b) {
      const auto& e = edges[a];
      const auto& f = edges[b];
      if (e.label != f.label) continue;
      std::optional<std::pair<VertexId, VertexId>> merge;
      if (e.source == f.source)
        merge = ordered(e.target, f.target);
      else if (e.target == f.target)
        merge = ordered(e.source, f.source);
      if (!merge) continue;
      ReductionMove m{MoveKind::fold, f.id, e.id, log.vertex_name(merge->first), {}};
      if (merge->first != merge->second) m.removed = log.vertex_name(merge->second);
      return m;
    }
  }
  const auto free = non_label_vertices(log);
  for (const auto& e : edges) {
    for (VertexId v : {e.source, e.target}) {
      if (free.count(v) && valency(log, v) == 1)
        return ReductionMove{MoveKind::boundary, e.id, {}, {}, log.vertex_name(v)};
    }
  }
  return std::nullopt;
}

}  // namespace

Log apply_move(const Log& log, const ReductionMove& move) {
  const auto edge = log.find_edge(move.edge);
  if (!edge) throw LogError("reduction move refers to unknown edge '" + move.edge + "'");
  const auto& e = log.edge(*edge);
  const VertexId removed = move.removed.empty() ? SIZE_MAX : log.vertex(move.removed);
  switch (move.kind) {
    case MoveKind::compress: {
      if (e.label != e.source && e.label != e.target)
        throw LogError("edge '" + e.id + "' is compressed");
      const VertexId kept = log.vertex(move.kept);
      const auto ends = ordered(e.source, e.target);
      if (kept != ends.first && kept != ends.second)
        throw LogError("compression keeps a vertex outside edge '" + e.id + "'");
      if (removed != SIZE_MAX && ordered(kept, removed) != ends)
        throw LogError("compression must identify the endpoints of '" + e.id + "'");
      return rebuild(log, kept, removed, {*edge});
    }
    case MoveKind::fold: {
      const auto partner = log.find_edge(move.partner);
      if (!partner || *partner == *edge) throw LogError("fold needs two distinct edges");
      const auto& f = log.edge(*partner);
      if (f.label != e.label) throw LogError("folded edges carry different labels");
      std::pair<VertexId, VertexId> ends;
      if (e.source == f.source)
        ends = ordered(e.target, f.target);
      else if (e.target == f.target)
        ends = ordered(e.source, f.source);
      else
        throw LogError("folded edges share no start or end");
      const VertexId kept = log.vertex(move.kept);
      const VertexId other = removed == SIZE_MAX ? kept : removed;
      if (ordered(kept, other) != ends) throw LogError("fold identifies the wrong vertices");
      return rebuild(log, kept, removed, {*edge});
    }
    case MoveKind::boundary: {
      if (removed == SIZE_MAX) throw LogError("boundary move needs a vertex");
      if (valency(log, removed) != 1 || (e.source != removed && e.target != removed))
        throw LogError("'" + move.removed + "' is not a leaf of edge '" + e.id + "'");
      if (!non_label_vertices(log).count(removed))
        throw LogError("'" + move.removed + "' occurs as a label");
      return rebuild(log, 0, removed, {*edge}, true);
    }
  }
  throw LogError("unknown move");
}

ReductionResult reduce(const Log& log) {
  ReductionResult result{log, {}};
  while (auto move = next_move(result.log)) {
    result.log = apply_move(result.log, *move);
    result.moves.push_back(std::move(*move));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Reorientation

Log reorient(const Log& log, std::span<const EdgeIndex> flips) {
  std::vector<Edge> edges = log.edges();
  std::set<EdgeIndex> seen;
  for (EdgeIndex i : flips) {
    if (i >= edges.size()) throw LogError("reorientation of an edge outside the log");
    if (!seen.insert(i).second) continue;
    std::swap(edges[i].source, edges[i].target);
  }
  return Log(log.vertices(), std::move(edges));
}

Log reorient(const Log& log, const std::set<std::string>& flips) {
  std::vector<EdgeIndex> indices;
  for (const auto& id : flips) {
    auto i = log.find_edge(id);
    if (!i) throw LogError("unknown edge '" + id + "'");
    indices.push_back(*i);
  }
  return reorient(log, indices);
}

Log block_reorient(const Log& log, const std::set<std::string>& labels) {
  std::vector<EdgeIndex> indices;
  for (EdgeIndex i = 0; i < log.edge_count(); ++i) {
    if (labels.count(log.vertex_name(log.edge(i).label))) indices.push_back(i);
  }
  return reorient(log, indices);
}

// ---------------------------------------------------------------------------
// Sub-LOTs

namespace {

bool sub_boundary_reduced(const Log& log, const std::vector<VertexId>& vertices,
                          const std::vector<EdgeIndex>& edges) {
  for (VertexId v : vertices) {
    std::size_t degree = 0;
    bool is_label = false;
    for (EdgeIndex i : edges) {
      const auto& e = log.edge(i);
      degree += (e.source == v) + (e.target == v);
      is_label = is_label || e.label == v;
    }
    if (degree == 1 && !is_label) return false;
  }
  return true;
}

struct SubtreeSearch {
  const Log& log;
  std::size_t max_size;
  // incident non-loop edges per vertex
  std::vector<std::vector<EdgeIndex>> incident;
  EdgeIndex min_edge = 0;
  std::vector<EdgeIndex> tree;
  std::vector<char> in_tree_vertex;
  std::vector<char> in_tree_edge;
  std::vector<char> excluded;
  std::vector<VertexId> tree_vertices;
  std::vector<SubLog> out;

  SubtreeSearch(const Log& l, std::size_t cap)
      : log(l),
        max_size(cap),
        incident(l.vertex_count()),
        in_tree_vertex(l.vertex_count(), 0),
        in_tree_edge(l.edge_count(), 0),
        excluded(l.edge_count(), 0) {
    for (EdgeIndex i = 0; i < l.edge_count(); ++i) {
      const auto& e = l.edge(i);
      if (e.source == e.target) continue;
      incident[e.source].push_back(i);
      incident[e.target].push_back(i);
    }
  }

  void emit() {
    for (EdgeIndex i : tree) {
      if (!in_tree_vertex[log.edge(i).label]) return;
    }
    SubLog s;
    s.vertices = tree_vertices;
    std::sort(s.vertices.begin(), s.vertices.end());
    s.edges = tree;
    std::sort(s.edges.begin(), s.edges.end());
    s.is_tree = true;
    s.is_boundary_reduced = sub_boundary_reduced(log, s.vertices, s.edges);
    out.push_back(std::move(s));
  }

  void add_vertex(VertexId v) {
    in_tree_vertex[v] = 1;
    tree_vertices.push_back(v);
  }
  void remove_vertex(VertexId v) {
    in_tree_vertex[v] = 0;
    tree_vertices.pop_back();
  }

  void grow(std::vector<EdgeIndex> candidates) {
    // drop candidates that would close a cycle
    while (!candidates.empty()) {
      const auto& e = log.edge(candidates.back());
      if (in_tree_vertex[e.source] && in_tree_vertex[e.target])
        candidates.pop_back();
      else
        break;
    }
    if (candidates.empty() || tree_vertices.size() >= max_size) {
      emit();
      return;
    }
    const EdgeIndex c = candidates.back();
    candidates.pop_back();

    excluded[c] = 1;
    grow(candidates);
    excluded[c] = 0;

    const auto& e = log.edge(c);
    const VertexId w = in_tree_vertex[e.source] ? e.target : e.source;
    tree.push_back(c);
    in_tree_edge[c] = 1;
    add_vertex(w);
    std::vector<EdgeIndex> next = candidates;
    for (EdgeIndex f : incident[w]) {
      if (f <= min_edge || in_tree_edge[f] || excluded[f]) continue;
      if (std::find(next.begin(), next.end(), f) != next.end()) continue;
      next.insert(next.begin(), f);
    }
    grow(std::move(next));
    remove_vertex(w);
    in_tree_edge[c] = 0;
    tree.pop_back();
  }

  void run() {
    for (EdgeIndex e0 = 0; e0 < log.edge_count(); ++e0) {
      const auto& e = log.edge(e0);
      if (e.source == e.target || max_size < 2) continue;
      min_edge = e0;
      tree = {e0};
      in_tree_edge[e0] = 1;
      add_vertex(e.source);
      add_vertex(e.target);
      std::vector<EdgeIndex> candidates;
      for (VertexId v : {e.source, e.target}) {
        for (EdgeIndex f : incident[v]) {
          if (f <= e0) continue;
          if (std::find(candidates.begin(), candidates.end(), f) == candidates.end())
            candidates.insert(candidates.begin(), f);
        }
      }
      grow(std::move(candidates));
      remove_vertex(e.target);
      remove_vertex(e.source);
      in_tree_edge[e0] = 0;
    }
    std::sort(out.begin(), out.end(),
              [](const SubLog& a, const SubLog& b) { return a.edges < b.edges; });
  }
};

}  // namespace

std::vector<SubLog> enumerate_sub_lots(const Log& log, std::optional<std::size_t> max_size) {
  SubtreeSearch search(log, max_size.value_or(SIZE_MAX));
  search.run();
  return std::move(search.out);
}

SubLog make_sub_lot(const Log& log, std::span<const EdgeIndex> edges) {
  if (edges.empty()) throw LogError("a sub-LOT needs at least one edge");
  SubLog s;
  s.edges.assign(edges.begin(), edges.end());
  std::sort(s.edges.begin(), s.edges.end());
  if (std::adjacent_find(s.edges.begin(), s.edges.end()) != s.edges.end())
    throw LogError("sub-LOT lists an edge twice");
  std::set<VertexId> vertices;
  for (EdgeIndex i : s.edges) {
    if (i >= log.edge_count()) throw LogError("sub-LOT edge outside the log");
    vertices.insert(log.edge(i).source);
    vertices.insert(log.edge(i).target);
  }
  s.vertices.assign(vertices.begin(), vertices.end());
  std::vector<std::size_t> slot(log.vertex_count(), SIZE_MAX);
  for (std::size_t k = 0; k < s.vertices.size(); ++k) slot[s.vertices[k]] = k;
  UnionFind uf(s.vertices.size());
  for (EdgeIndex i : s.edges) {
    const auto& e = log.edge(i);
    if (!uf.unite(slot[e.source], slot[e.target]))
      throw LogError("sub-LOT edges contain a cycle");
  }
  if (s.edges.size() + 1 != s.vertices.size()) throw LogError("sub-LOT edges are disconnected");
  for (EdgeIndex i : s.edges) {
    if (!vertices.count(log.edge(i).label))
      throw LogError("label of edge '" + log.edge(i).id + "' lies outside the sub-LOT");
  }
  s.is_tree = true;
  s.is_boundary_reduced = sub_boundary_reduced(log, s.vertices, s.edges);
  return s;
}

std::optional<VertexId> sub_lot_free_vertex(const Log& log, const SubLog& part) {
  std::set<VertexId> free(part.vertices.begin(), part.vertices.end());
  for (EdgeIndex i : part.edges) free.erase(log.edge(i).label);
  if (free.size() != 1) return std::nullopt;
  return *free.begin();
}

Log extract(const Log& log, const SubLog& part) {
  std::vector<std::string> names;
  std::vector<VertexId> remap(log.vertex_count(), SIZE_MAX);
  for (VertexId v : part.vertices) {
    remap[v] = names.size();
    names.push_back(log.vertex_name(v));
  }
  std::vector<Edge> edges;
  for (EdgeIndex i : part.edges) {
    const auto& e = log.edge(i);
    if (remap[e.source] == SIZE_MAX || remap[e.target] == SIZE_MAX || remap[e.label] == SIZE_MAX)
      throw LogError("edge '" + e.id + "' leaves the extracted part");
    edges.push_back(Edge{e.id, remap[e.source], remap[e.target], remap[e.label]});
  }
  return Log(std::move(names), std::move(edges));
}

Quotient quotient_lof(const Log& log, std::span<const SubLog> parts,
                      std::span<const VertexId> reps) {
  if (parts.size() != reps.size()) throw LogError("one representative per part is required");
  std::vector<std::size_t> owner(log.vertex_count(), SIZE_MAX);
  std::vector<char> collapsed_edge(log.edge_count(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const SubLog checked = make_sub_lot(log, parts[p].edges);
    if (checked.vertices != parts[p].vertices)
      throw LogError("part " + std::to_string(p) + " is not the sub-LOT spanned by its edges");
    for (VertexId v : checked.vertices) {
      if (owner[v] != SIZE_MAX)
        throw LogError("parts overlap at vertex '" + log.vertex_name(v) + "'");
      owner[v] = p;
    }
    for (EdgeIndex e : checked.edges) collapsed_edge[e] = 1;
    if (reps[p] >= log.vertex_count() || owner[reps[p]] != p)
      throw LogError("representative of part " + std::to_string(p) + " lies outside it");
  }

  Quotient q;
  std::vector<VertexId> image(log.vertex_count());
  for (VertexId v = 0; v < log.vertex_count(); ++v)
    image[v] = owner[v] == SIZE_MAX ? v : reps[owner[v]];
  std::vector<std::string> names;
  std::vector<VertexId> slot(log.vertex_count(), SIZE_MAX);
  for (VertexId v = 0; v < log.vertex_count(); ++v) {
    if (image[v] != v) continue;
    slot[v] = names.size();
    names.push_back(log.vertex_name(v));
  }
  q.vertex_map.resize(log.vertex_count());
  for (VertexId v = 0; v < log.vertex_count(); ++v) q.vertex_map[v] = slot[image[v]];

  std::vector<Edge> edges;
  q.edge_map.assign(log.edge_count(), std::nullopt);
  q.label_map.resize(log.edge_count());
  for (EdgeIndex i = 0; i < log.edge_count(); ++i) {
    const auto& e = log.edge(i);
    q.label_map[i] = q.vertex_map[e.label];
    if (collapsed_edge[i]) continue;
    q.edge_map[i] = edges.size();
    edges.push_back(Edge{e.id, q.vertex_map[e.source], q.vertex_map[e.target], q.vertex_map[e.label]});
  }
  q.log = Log(std::move(names), std::move(edges));
  return q;
}

}  // namespace lot
