#pragma once

#include <limits>
#include <optional>

#include "specrev/product.hpp"

namespace specrev {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// Objective applied to a set of removals: the sum of its preference levels,
/// or the largest one. Both are monotone under set inclusion; the empty set
/// costs 0.
enum class Objective { sum, max };

/// Objective value of a removal set, accumulated in canonical id order so the
/// same set always produces the bit-identical value.
double objective_value(const RevisionGraph& graph, const LabelSet& set, Objective objective);

/// Per-node search state: the removal set needed to reach the node and its
/// objective value (infinite until reached, with the full removable space as
/// sentinel), parent links, and the visited list in visitation order.
struct SearchTables {
  explicit SearchTables(const RevisionGraph& graph);

  /// Installs the start node; label/cost become its initial estimate.
  void seed(NodeId v, LabelSet set, double value);

  NodeId source = kNoNode;
  LabelSet seed_label;
  std::vector<LabelSet> label;
  std::vector<double> cost;
  std::vector<NodeId> parent;
  std::vector<NodeId> visited;
};

/// Updates the target estimate when routing through `edge` improves it
/// (strictly). Returns true on update.
bool relax_edge(const RevisionGraph& graph, const RevisionGraph::Edge& edge,
                SearchTables& tables, Objective objective);

/// Dijkstra-style label search from tables.source over all edges, enabled or
/// not. The start node never enters the queue; in lasso mode its estimate is
/// replaced by its self-loop (or reset to unreached when it has none) after
/// its out edges are relaxed, so the final start-node entry describes the best
/// cycle through it.
void find_min_path(const RevisionGraph& graph, SearchTables& tables, bool lasso,
                   Objective objective);

/// Removal set recorded for v_end (the union of edge labels along the parent
/// chain from v_start, on top of the seed). Throws Unreached when v_end has no
/// finite estimate.
LabelSet removals_on_path(const RevisionGraph& graph, const SearchTables& tables, NodeId v_start,
                          NodeId v_end);

/// Parent-chain walk; with cycle=true the walk takes at least one step so a
/// start node equal to the end node yields the cycle through it.
std::vector<NodeId> parent_chain(const SearchTables& tables, NodeId v_start, NodeId v_end,
                                 bool cycle);

struct RevisionOutcome {
  enum class Status { already_satisfiable, revised, no_revision_exists };

  Status status = Status::no_revision_exists;
  Revision revision;
  double cost = 0.0;      // objective value of `revision`
  double sum_cost = 0.0;  // recomputed over `revision`
  double max_cost = 0.0;  // recomputed over `revision`
  std::optional<AcceptingRun> witness;
};

const char* status_name(RevisionOutcome::Status status);

/// Full revision search: prefix search from the source, then one lasso search
/// per reached sink seeded with that sink's prefix estimate; keeps the
/// prefix/lasso combination with the lowest objective value, later sinks
/// winning ties. Returns the already-satisfiable outcome when the best
/// revision is empty, and no-revision when no sink is reachable or none can
/// reach itself even using every edge.
RevisionOutcome find_revision(const RevisionGraph& graph, Objective objective);

}  // namespace specrev
