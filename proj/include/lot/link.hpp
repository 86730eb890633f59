#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lot/log.hpp"
#include "lot/multigraph.hpp"

namespace lot {

enum class Sign : std::uint8_t { plus, minus };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// x+ sits near the start of the 1-cell x, x- near its end.
struct SignedVertex {
  VertexId vertex = 0;
  Sign sign = Sign::plus;

  /// Node index in the link: vertex order, + before -.
  std::size_t node() const { return 2 * vertex + (sign == Sign::minus ? 1 : 0); }
  static SignedVertex from_node(std::size_t node) {
    return {node / 2, node % 2 ? Sign::minus : Sign::plus};
  }
  friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

/// The four corners of the square 2-cell of an edge e with s(e)=i, t(e)=j,
/// label k: positive i+k+, negative k-j-, mixed i-k+ and k-j+.
enum class CornerKind : std::uint8_t { positive, negative, mixed_source, mixed_target };
std::string_view to_string(CornerKind kind);

using CornerIndex = std::size_t;

struct Corner {
  SignedVertex first;
  SignedVertex second;
  EdgeIndex owner = 0;
  CornerKind kind = CornerKind::positive;

  /// Position in the full link of the log: 4 * owner + kind.
  CornerIndex index() const { return 4 * owner + static_cast<std::size_t>(kind); }
  friend bool operator==(const Corner&, const Corner&) = default;
};

Corner make_corner(const Log& log, EdgeIndex e, CornerKind kind);

/// The link of the single vertex of K(log), or a full subgraph of it.
/// Corners are never merged: parallel corners and loops are kept.
struct LinkGraph {
  std::size_t vertex_count = 0;   // |V(log)|, the link has 2 * vertex_count node slots
  std::vector<bool> present;      // node membership (size 2 * vertex_count)
  std::vector<Corner> corners;

  std::size_t node_count() const;
  Multigraph multigraph() const;  // node indices are SignedVertex::node()
};

LinkGraph build_link(const Log& log);
LinkGraph induced_subgraph(const LinkGraph& link, std::span<const SignedVertex> nodes);
/// Full subgraph on all nodes of the given sign.
LinkGraph sign_subgraph(const LinkGraph& link, Sign sign);

// ---------------------------------------------------------------------------
// Sign choices and angles

/// One sign per vertex of the log.
struct SignAssignment {
  std::vector<Sign> signs;
  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

/// Nodes x^{eps(x)} (or x^{-eps(x)} when `negate`).
std::vector<SignedVertex> sign_side(const SignAssignment& eps, bool negate);

/// Angle 0 or 1 per corner, indexed by Corner::index().
struct AngleAssignment {
  std::vector<std::uint8_t> angles;
  friend bool operator==(const AngleAssignment&, const AngleAssignment&) = default;
};

struct CurvatureReport {
  int vertex_curvature = 0;
  std::vector<int> cell_curvature;  // per edge of the log
  int euler_complex = 0;
  int euler_link = 0;

  /// 2 chi(K) = kappa(v) + sum kappa(d).
  bool gauss_bonnet_holds() const;
};

/// Throws LogError if `angles` is not a 0/1 assignment on every corner.
void check_angles(const Log& log, const AngleAssignment& angles);

CurvatureReport curvature(const Log& log, const AngleAssignment& angles);

// ---------------------------------------------------------------------------
// Coloring tests

struct ColoringTestResult {
  bool passed = true;
  std::vector<EdgeIndex> positive_cells;  // 2-cells with kappa(d) > 0
  /// A cycle of total angle <= 1 that violates the cycle condition, as corner
  /// indices with the signed vertices it passes.
  std::optional<std::vector<CornerIndex>> light_cycle;
  std::vector<SignedVertex> light_cycle_nodes;
  int light_cycle_angle = 0;
};

ColoringTestResult verify_coloring_test(const Log& log, const AngleAssignment& angles);

/// Parts must be pairwise edge-disjoint sub-LOTs; throws LogError otherwise.
ColoringTestResult verify_relative_coloring_test(const Log& log, std::span<const SubLog> parts,
                                                 const AngleAssignment& angles);

/// Corner indices owned by the edges of the parts.
std::vector<bool> part_corner_mask(const Log& log, std::span<const SubLog> parts);

// ---------------------------------------------------------------------------
// Export

std::string signed_name(const Log& log, SignedVertex v);
std::string dot_quoted(const std::string& s);

/// Graphviz rendering; angle-0 corners solid, angle-1 dashed when angles given.
std::string link_to_dot(const Log& log, const LinkGraph& link,
                        const AngleAssignment* angles = nullptr);

}  // namespace lot
