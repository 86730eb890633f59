#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lot/arborescence.hpp"
#include "lot/link.hpp"
#include "lot/log.hpp"
#include "lot/selection.hpp"

namespace lot {

// ---------------------------------------------------------------------------
// Forest conditions on the link

struct SideForest {
  bool forest = true;
  std::vector<CornerIndex> corners;  // corners of the induced subgraph
  std::vector<CornerIndex> cycle;    // a cycle among them when not a forest
};

/// Both sign sides of the link, Lambda(eps(X)) and Lambda(-eps(X)).
struct LbfCheck {
  bool holds = true;
  SideForest side;
  SideForest opposite;
};

/// Lambda+ and Lambda- are forests.
LbfCheck strong_lbf_check(const Log& log);
LbfCheck lbf_check(const Log& log, const SignAssignment& eps);
/// Each side is a forest relative to the corners of the parts' 2-cells.
LbfCheck relative_lbf_check(const Log& log, std::span<const SubLog> parts, const SignAssignment& eps);

/// Angle 0 on corners inside one sign side, 1 on corners between the sides.
AngleAssignment angles_from_bipartition(const Log& log, const SignAssignment& eps);

/// eps(x) = - exactly for the labels of flipped edges: the sign choice on the
/// original log matching the all-plus side after the flips.
SignAssignment pull_back_signs(const Log& log, std::span<const EdgeIndex> flips);

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict : std::uint8_t { yes, no, hypothesis_failed, non_generic, not_applicable };
enum class Basis : std::uint8_t { witnessed, by_citation };
std::string_view to_string(Verdict v);
std::string_view to_string(Basis b);

struct Claim {
  Verdict verdict = Verdict::not_applicable;
  Basis basis = Basis::witnessed;
  std::vector<std::string> citations;
};

struct HypothesisReport {
  LogClass classification;
  ReducednessReport reducedness;
  std::vector<SubLog> non_boundary_reduced_sub_lots;

  bool holds() const;
};

HypothesisReport check_hypotheses(const Log& log);

/// Vertex sets of the label-closed pieces of a LOF: components joined when
/// one labels an edge of the other. K(log) is the wedge of their complexes.
std::vector<std::vector<VertexId>> label_groups(const Log& log);

/// The LOT certified for one label-closed group: the group itself when it is
/// connected, otherwise the group joined up by extra edges.
struct GroupWitness {
  std::vector<VertexId> vertices;  // in the input; vertex i of `tree` is vertices[i]
  std::vector<EdgeIndex> edges;    // in the input; edge j of `tree` is edges[j]
  Log tree;
  std::vector<EdgeIndex> added;    // connecting edges of `tree`
  std::optional<VertexId> root;    // vertices of `tree` from here on
  std::optional<BranchingPair> branchings;
  std::optional<Partition2> partition;
  std::vector<EdgeIndex> flips;
  std::optional<CutWitness> cut;
  bool strong_lbf_after_flips = false;
  std::string note;
};

struct Certificate {
  enum class Mode : std::uint8_t { plain, relative };
  Mode mode = Mode::plain;

  Log input;
  std::vector<ReductionMove> reduction;  // relative mode only
  Log log;                               // what the verdicts are about
  HypothesisReport hypothesis;

  std::vector<GroupWitness> groups;
  std::optional<SignAssignment> epsilon;
  std::optional<LbfCheck> forests;
  std::optional<AngleAssignment> angles;
  std::optional<CurvatureReport> curvature;
  std::optional<ColoringTestResult> coloring;

  // relative mode
  std::vector<SubLog> parts;
  std::vector<VertexId> representatives;
  std::optional<Log> quotient;
  std::vector<Certificate> quotient_certificate;  // zero or one
  std::vector<Certificate> part_certificates;
  bool all_cells_nonpositive = false;
  std::string note;

  Claim strong_lbf, lbf, coloring_test, relative_lbf, relative_coloring_test;
  Claim dr, aspherical, locally_indicable, va;

  /// 0 top-level claim holds, 1 it fails, 3 hypotheses fail or non-generic.
  int exit_code() const;
};

Certificate certify_lof(const Log& log);

/// Parts default to the inclusion-maximal proper sub-LOTs of the reduced log.
/// Explicit parts must be pairwise disjoint sub-LOTs of an already reduced
/// log; LogError otherwise.
Certificate certify_relative(const Log& log, std::optional<std::vector<SubLog>> parts = std::nullopt);

std::string input_digest(const Log& log);  // FNV-1a 64 of the serialized log

}  // namespace lot
