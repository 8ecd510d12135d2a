#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specrev/automata.hpp"
#include "specrev/label_set.hpp"

namespace specrev {

using NodeId = std::uint32_t;
using RemId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Witness for a nonempty product language: a finite prefix from an initial
/// product node to an accepting one, plus a cycle through that node. The lasso
/// starts and ends at the same node (a self-loop gives a two-entry lasso).
struct AcceptingRun {
  std::vector<NodeId> prefix;
  std::vector<NodeId> lasso;

  bool operator==(const AcceptingRun&) const = default;
};

/// Product of a system and a specification, annotated for revision search.
/// Nodes are the full grid (system state, spec state); an edge exists for every
/// (system edge, spec transition) pair, is enabled when the transition label
/// holds at the target system state, and otherwise carries the symbol
/// occurrences whose removal would enable it. A virtual super source with
/// unlabeled edges to every initial product node keeps the search single
/// source; it is never a sink.
class RevisionGraph {
 public:
  struct Edge {
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    std::vector<RemId> labels;   // ascending; empty iff enabled
    double label_max = 0.0;      // max preference level over `labels`
    bool enabled = false;
    std::uint32_t disabled_index = UINT32_MAX;  // dense index among disabled edges
  };

  static RevisionGraph build(const SystemFsm& fsm, const SpecAutomaton& spec);

  std::size_t node_count() const { return system_states_.size() * spec_states_.size(); }
  NodeId super_source() const { return static_cast<NodeId>(node_count()); }

  std::span<const NodeId> sources() const { return sources_; }
  std::span<const NodeId> sinks() const { return sinks_; }

  std::span<const Edge> out_edges(NodeId v) const {
    return {edges_.data() + first_out_[v], edges_.data() + first_out_[v + 1]};
  }

  /// nullptr when u has no edge to v.
  const Edge* find_edge(NodeId u, NodeId v) const;

  std::size_t edge_count() const { return edge_count_; }          // grid edges only
  std::size_t enabled_edge_count() const { return enabled_count_; }
  std::size_t disabled_edge_count() const { return edge_count_ - enabled_count_; }

  std::size_t removable_count() const { return removable_.size(); }
  const Removal& removable(RemId id) const { return removable_[id]; }
  std::span<const Removal> removables() const { return removable_; }
  double theta_of(RemId id) const { return theta_[id]; }

  NodeId node_of(const std::string& system_state, const std::string& spec_state) const;
  const std::string& system_state_of(NodeId v) const;
  const std::string& spec_state_of(NodeId v) const;
  std::string node_name(NodeId v) const;

  std::size_t system_state_count() const { return system_states_.size(); }
  std::size_t spec_state_count() const { return spec_states_.size(); }

  Revision to_revision(const LabelSet& set) const;
  LabelSet to_label_set(const Revision& rev) const;  // throws on unknown triples

 private:
  std::vector<std::string> system_states_;
  std::vector<std::string> spec_states_;
  std::vector<Removal> removable_;  // canonical (symbol, from, to) order
  std::vector<double> theta_;
  std::vector<Edge> edges_;           // grouped by source node, targets ascending
  std::vector<std::uint32_t> first_out_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> sinks_;
  std::size_t edge_count_ = 0;
  std::size_t enabled_count_ = 0;
};

/// Same as RevisionGraph::build.
RevisionGraph build_graph(const SystemFsm& fsm, const SpecAutomaton& spec);

/// Decides language nonemptiness over the enabled subgraph (enabled_only) or
/// over all edges. Returns one deterministic witness run, or nullopt.
std::optional<AcceptingRun> check_emptiness(const RevisionGraph& graph, bool enabled_only);

/// Nonemptiness when exactly the removals in `allowed` have been applied:
/// disabled edges count as present iff their labels are within `allowed`.
std::optional<AcceptingRun> check_emptiness_under(const RevisionGraph& graph,
                                                  const LabelSet& allowed);

/// Nonemptiness when every removal costing at most `limit` is applied:
/// disabled edges count as present iff their costliest label is <= limit.
std::optional<AcceptingRun> check_emptiness_under_threshold(const RevisionGraph& graph,
                                                            double limit);

/// Applies the revision, rebuilds the product and checks the enabled subgraph.
/// The universal validity check for every search output.
std::optional<AcceptingRun> verify_revision(const SystemFsm& fsm, const SpecAutomaton& spec,
                                            const Revision& rev);

/// Union of edge labels along consecutive node pairs; throws DanglingEdge when
/// two consecutive nodes are not connected.
LabelSet path_label_union(const RevisionGraph& graph, std::span<const NodeId> path);

/// Graphviz text: enabled edges solid, disabled dotted with their sorted label
/// symbols, accepting nodes doubled.
std::string to_dot(const RevisionGraph& graph);

}  // namespace specrev
