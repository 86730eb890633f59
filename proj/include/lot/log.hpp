#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lot {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;

class LogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a LOG document. Line and column are 1-based.
class ParseError : public LogError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Edge {
  std::string id;
  VertexId source = 0;
  VertexId target = 0;
  VertexId label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A labeled oriented graph: every edge carries one of the vertices as its
/// label. Vertices and edges keep their declaration order, which every
/// deterministic output in this library relies on.
class Log {
 public:
  Log() = default;
  Log(std::vector<std::string> vertices, std::vector<Edge> edges);

  VertexId add_vertex(std::string name);
  EdgeIndex add_edge(std::string id, VertexId source, VertexId target, VertexId label);
  EdgeIndex add_edge(std::string id, std::string_view source, std::string_view target,
                     std::string_view label);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  /// Throws LogError for an unknown name.
  VertexId vertex(std::string_view name) const;

  friend bool operator==(const Log& a, const Log& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeIndex, std::less<>> edge_index_;
};

// ---------------------------------------------------------------------------
// Text format

Log parse_log(std::string_view text);
std::string serialize_log(const Log& log);

// ---------------------------------------------------------------------------
// Classification and reducedness

enum class LogKind { general, forest, tree };

struct LogClass {
  LogKind kind = LogKind::general;
  std::size_t components = 0;
};

LogClass classify(const Log& log);
std::string_view to_string(LogKind kind);

/// Connected components of the underlying undirected graph, each listed in
/// vertex order; components are ordered by their first vertex.
std::vector<std::vector<VertexId>> components(const Log& log);

/// Number of edge ends at v (a loop counts twice).
std::size_t valency(const Log& log, VertexId v);

struct EdgePair {
  VertexId vertex = 0;  // shared endpoint, or the shared label for injectivity
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct ReducednessReport {
  bool boundary_reduced = true;
  std::vector<VertexId> boundary_witnesses;  // valency-1 vertices that are no label
  bool interior_reduced = true;
  std::vector<EdgePair> interior_witnesses;  // two edges both starting / ending at vertex
  bool compressed = true;
  std::vector<EdgeIndex> compression_witnesses;
  bool injective = true;
  std::vector<EdgePair> injectivity_witnesses;  // vertex = the shared label

  bool reduced() const { return boundary_reduced && interior_reduced && compressed; }
};

ReducednessReport reducedness_report(const Log& log);

// ---------------------------------------------------------------------------
// Reduction moves

enum class MoveKind { compress, fold, boundary };
std::string_view to_string(MoveKind kind);

/// One reduction step, recorded by names so it can be replayed.
///  - compress: `edge` has its label at an endpoint; its endpoints `kept` and
///    `removed` are identified and the edge is deleted.
///  - fold: `edge` and `partner` share a label and both start (or both end) at
///    a vertex; their other endpoints are identified and `edge` is deleted.
///  - boundary: `removed` is a valency-1 non-label vertex; it is deleted with `edge`.
/// When the identified endpoints already coincide, `removed` is empty.
struct ReductionMove {
  MoveKind kind = MoveKind::compress;
  std::string edge;
  std::string partner;
  std::string kept;
  std::string removed;
  friend bool operator==(const ReductionMove&, const ReductionMove&) = default;
};

struct ReductionResult {
  Log log;
  std::vector<ReductionMove> moves;
};

/// Applies compression, then folding, then boundary moves (that priority,
/// edges scanned in declaration order) until the log is reduced.
ReductionResult reduce(const Log& log);
Log apply_move(const Log& log, const ReductionMove& move);

// ---------------------------------------------------------------------------
// Reorientation

/// Reverses the listed edges. Throws LogError on an unknown id.
Log reorient(const Log& log, const std::set<std::string>& flips);
Log reorient(const Log& log, std::span<const EdgeIndex> flips);
/// Reverses every edge whose label is one of `labels`.
Log block_reorient(const Log& log, const std::set<std::string>& labels);

// ---------------------------------------------------------------------------
// Sub-LOTs and quotients

struct SubLog {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeIndex> edges;    // sorted
  bool is_tree = true;
  bool is_boundary_reduced = true;
  friend bool operator==(const SubLog&, const SubLog&) = default;
};

/// All connected subtrees with at least one edge whose labels lie inside the
/// subtree, up to `max_size` vertices. Sorted by edge list.
std::vector<SubLog> enumerate_sub_lots(const Log& log,
                                       std::optional<std::size_t> max_size = std::nullopt);

/// Builds the SubLog spanned by `edges`, validating the sub-LOT conditions.
/// Throws LogError if the edges do not form a label-closed subtree.
SubLog make_sub_lot(const Log& log, std::span<const EdgeIndex> edges);

/// The vertex of a sub-LOT that labels no edge of it, when unique.
std::optional<VertexId> sub_lot_free_vertex(const Log& log, const SubLog& part);

/// The sub-LOT as a standalone log (vertex and edge order inherited).
Log extract(const Log& log, const SubLog& part);

struct Quotient {
  Log log;
  std::vector<VertexId> vertex_map;                // parent vertex -> quotient vertex
  std::vector<std::optional<EdgeIndex>> edge_map;  // parent edge -> surviving edge
  std::vector<VertexId> label_map;                 // parent edge -> label after collapsing
};

/// Collapses each part onto its representative and relabels edges whose label
/// lay in a part. Throws LogError if parts overlap or a rep is outside its part.
Quotient quotient_lof(const Log& log, std::span<const SubLog> parts,
                      std::span<const VertexId> reps);

std::set<VertexId> non_label_vertices(const Log& log);

}  // namespace lot
