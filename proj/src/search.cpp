#include "specrev/search.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace specrev {

double objective_value(const RevisionGraph& graph, const LabelSet& set, Objective objective) {
  double value = 0.0;
  if (objective == Objective::sum) {
    set.for_each([&](RemId id) { value += graph.theta_of(id); });
  } else {
    set.for_each([&](RemId id) { value = std::max(value, graph.theta_of(id)); });
  }
  return value;
}

SearchTables::SearchTables(const RevisionGraph& graph)
    : seed_label(graph.removable_count()),
      label(graph.node_count() + 1, LabelSet::all(graph.removable_count())),
      cost(graph.node_count() + 1, kInfiniteCost),
      parent(graph.node_count() + 1, kNoNode) {}

void SearchTables::seed(NodeId v, LabelSet set, double value) {
  source = v;
  seed_label = set;
  label[v] = std::move(set);
  cost[v] = value;
}

bool relax_edge(const RevisionGraph& graph, const RevisionGraph::Edge& edge,
                SearchTables& tables, Objective objective) {
  LabelSet candidate = tables.label[edge.from];
  for (const RemId id : edge.labels) candidate.insert(id);
  const double value = objective_value(graph, candidate, objective);
  if (!(value < tables.cost[edge.to])) return false;
  tables.label[edge.to] = std::move(candidate);
  tables.cost[edge.to] = value;
  tables.parent[edge.to] = edge.from;
  return true;
}

void find_min_path(const RevisionGraph& graph, SearchTables& tables, bool lasso,
                   Objective objective) {
  const NodeId start = tables.source;
  if (start == kNoNode) throw error(errc::invalid_structure, "search tables were never seeded");
  const std::size_t n = graph.node_count() + 1;
  std::fill(tables.parent.begin(), tables.parent.end(), kNoNode);
  tables.visited.clear();
  tables.visited.push_back(start);
  std::vector<char> done(n, 0);
  done[start] = 1;

  // min-heap on (cost, node); lazy entries, smallest node id wins cost ties
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const auto push_if_improved = [&](const RevisionGraph::Edge& e) {
    if (!relax_edge(graph, e, tables, objective)) return;
    assert(!done[e.to] || e.to == start);
    if (e.to != start && !done[e.to]) queue.emplace(tables.cost[e.to], e.to);
  };

  for (const auto& e : graph.out_edges(start)) {
    if (e.to != start) push_if_improved(e);
  }
  if (lasso) {
    if (const auto* self = graph.find_edge(start, start)) {
      for (const RemId id : self->labels) tables.label[start].insert(id);
      tables.cost[start] = objective_value(graph, tables.label[start], objective);
      tables.parent[start] = start;
    } else {
      tables.label[start] = LabelSet::all(graph.removable_count());
      tables.cost[start] = kInfiniteCost;
      tables.parent[start] = kNoNode;
    }
  }

  while (!queue.empty()) {
    const auto [value, u] = queue.top();
    queue.pop();
    if (done[u] || value != tables.cost[u]) continue;  // stale entry
    done[u] = 1;
    tables.visited.push_back(u);
    for (const auto& e : graph.out_edges(u)) push_if_improved(e);
  }
}

std::vector<NodeId> parent_chain(const SearchTables& tables, NodeId v_start, NodeId v_end,
                                 bool cycle) {
  std::vector<NodeId> chain{v_end};
  if (v_start == v_end && !cycle) return chain;
  NodeId cur = v_end;
  const std::size_t guard = tables.parent.size() + 2;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > guard)
      throw error(errc::invalid_structure, "parent chain does not terminate");
    const NodeId up = tables.parent[cur];
    if (up == kNoNode)
      throw error(errc::unreached_node, "no recorded path to the requested node");
    chain.push_back(up);
    cur = up;
    if (cur == v_start) break;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

LabelSet removals_on_path(const RevisionGraph& graph, const SearchTables& tables, NodeId v_start,
                          NodeId v_end) {
  if (!(tables.cost[v_end] < kInfiniteCost))
    throw error(errc::unreached_node, "node " + graph.node_name(v_end) + " was not reached");
#ifndef NDEBUG
  // the recorded set must equal the seed plus the labels along the parent chain
  const bool cycle = v_start == v_end && tables.parent[v_end] != kNoNode;
  const auto chain = parent_chain(tables, v_start, v_end, cycle);
  LabelSet walked = tables.seed_label;
  walked.unite(path_label_union(graph, chain));
  assert(walked == tables.label[v_end]);
#else
  (void)v_start;
#endif
  return tables.label[v_end];
}

const char* status_name(RevisionOutcome::Status status) {
  switch (status) {
    case RevisionOutcome::Status::already_satisfiable: return "ALREADY_SATISFIABLE";
    case RevisionOutcome::Status::revised: return "REVISED";
    case RevisionOutcome::Status::no_revision_exists: return "NO_REVISION_EXISTS";
  }
  return "UNKNOWN";
}

RevisionOutcome find_revision(const RevisionGraph& graph, Objective objective) {
  SearchTables prefix(graph);
  prefix.seed(graph.super_source(), LabelSet(graph.removable_count()), 0.0);
  find_min_path(graph, prefix, /*lasso=*/false, objective);

  struct Candidate {
    LabelSet set;
    double value;
    std::vector<NodeId> prefix_chain;
    std::vector<NodeId> lasso_chain;
  };
  std::optional<Candidate> best;
  bool any_sink_reached = false;

  for (const NodeId sink : graph.sinks()) {
    if (!(prefix.cost[sink] < kInfiniteCost)) continue;
    any_sink_reached = true;

    const LabelSet prefix_set = removals_on_path(graph, prefix, graph.super_source(), sink);
    SearchTables lasso(graph);
    lasso.seed(sink, prefix.label[sink], prefix.cost[sink]);
    find_min_path(graph, lasso, /*lasso=*/true, objective);
    if (!(lasso.cost[sink] < kInfiniteCost)) continue;

    LabelSet combined = prefix_set;
    combined.unite(removals_on_path(graph, lasso, sink, sink));
    const double value = objective_value(graph, combined, objective);
    if (best && !(value <= best->value)) continue;

    Candidate cand{std::move(combined), value, parent_chain(prefix, graph.super_source(), sink,
                                                            /*cycle=*/false),
                   parent_chain(lasso, sink, sink, /*cycle=*/true)};
    cand.prefix_chain.erase(cand.prefix_chain.begin());  // drop the virtual source
    best = std::move(cand);
  }

  RevisionOutcome outcome;
  if (!any_sink_reached || !best) {
    outcome.status = RevisionOutcome::Status::no_revision_exists;
    return outcome;
  }
  outcome.revision = graph.to_revision(best->set);
  outcome.cost = best->value;
  outcome.sum_cost = objective_value(graph, best->set, Objective::sum);
  outcome.max_cost = objective_value(graph, best->set, Objective::max);
  outcome.witness = AcceptingRun{std::move(best->prefix_chain), std::move(best->lasso_chain)};
  outcome.status = outcome.revision.removals.empty()
                       ? RevisionOutcome::Status::already_satisfiable
                       : RevisionOutcome::Status::revised;
  return outcome;
}

}  // namespace specrev
