#include "specrev/product.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace specrev {

namespace {

std::size_t index_of(const std::vector<std::string>& sorted, const std::string& name) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name)
    throw error(errc::unknown_state, "unknown state '" + name + "'");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

RevisionGraph RevisionGraph::build(const SystemFsm& fsm, const SpecAutomaton& spec) {
  validate_system(fsm);
  validate_spec(spec);

  RevisionGraph g;
  g.system_states_ = fsm.states;
  g.spec_states_ = spec.states;
  const std::size_t ns = g.spec_states_.size();

  // removable-symbol space: every symbol occurrence on a transition label,
  // in canonical (symbol, from, to) order
  for (const auto& t : spec.transitions) {
    for (const auto& sym : t.label) g.removable_.push_back(Removal{sym, t.from, t.to});
  }
  std::sort(g.removable_.begin(), g.removable_.end());
  std::map<Removal, RemId> rem_index;
  g.theta_.reserve(g.removable_.size());
  for (RemId i = 0; i < g.removable_.size(); ++i) {
    rem_index.emplace(g.removable_[i], i);
    g.theta_.push_back(theta(spec, g.removable_[i]));
  }

  // per system state: symbol set, per spec transition: label as sorted symbols
  const std::size_t nq = g.system_states_.size();
  std::vector<const std::set<std::string>*> state_label(nq, nullptr);
  static const std::set<std::string> kEmpty;
  for (std::size_t q = 0; q < nq; ++q) {
    const auto it = fsm.labels.find(g.system_states_[q]);
    state_label[q] = it == fsm.labels.end() ? &kEmpty : &it->second;
  }

  std::vector<std::vector<std::pair<std::size_t, const SpecTransition*>>> spec_out(ns);
  for (const auto& t : spec.transitions) {
    spec_out[index_of(g.spec_states_, t.from)].emplace_back(index_of(g.spec_states_, t.to), &t);
  }
  for (auto& v : spec_out) std::sort(v.begin(), v.end());

  std::vector<std::vector<std::size_t>> sys_out(nq);
  for (const auto& [from, to] : fsm.edges) {
    sys_out[index_of(g.system_states_, from)].push_back(index_of(g.system_states_, to));
  }
  for (auto& v : sys_out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const std::size_t grid = nq * ns;
  g.first_out_.assign(grid + 2, 0);
  std::uint32_t disabled = 0;
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t s = 0; s < ns; ++s) {
      const NodeId from = static_cast<NodeId>(q * ns + s);
      g.first_out_[from] = static_cast<std::uint32_t>(g.edges_.size());
      for (const std::size_t q2 : sys_out[q]) {
        for (const auto& [s2, trans] : spec_out[s]) {
          Edge e;
          e.from = from;
          e.to = static_cast<NodeId>(q2 * ns + s2);
          const auto& holds = *state_label[q2];
          for (const auto& sym : trans->label) {
            if (!holds.count(sym)) {
              e.labels.push_back(rem_index.at(Removal{sym, trans->from, trans->to}));
            }
          }
          std::sort(e.labels.begin(), e.labels.end());
          e.enabled = e.labels.empty();
          for (const RemId id : e.labels) e.label_max = std::max(e.label_max, g.theta_[id]);
          if (!e.enabled) e.disabled_index = disabled++;
          g.edges_.push_back(std::move(e));
        }
      }
    }
  }
  g.edge_count_ = g.edges_.size();
  g.enabled_count_ = static_cast<std::size_t>(
      std::count_if(g.edges_.begin(), g.edges_.end(), [](const Edge& e) { return e.enabled; }));

  // fix the offsets that the loop above only set for visited sources
  g.first_out_[grid] = static_cast<std::uint32_t>(g.edges_.size());

  // super source: one unlabeled enabled edge per initial product node
  const std::size_t s0 = index_of(g.spec_states_, spec.initial);
  for (const auto& q0 : fsm.initial) {
    g.sources_.push_back(static_cast<NodeId>(index_of(g.system_states_, q0) * ns + s0));
  }
  std::sort(g.sources_.begin(), g.sources_.end());
  for (const NodeId v : g.sources_) {
    Edge e;
    e.from = g.super_source();
    e.to = v;
    e.enabled = true;
    g.edges_.push_back(std::move(e));
  }
  g.first_out_[grid + 1] = static_cast<std::uint32_t>(g.edges_.size());

  for (const auto& f : spec.accepting) {
    const std::size_t s = index_of(g.spec_states_, f);
    for (std::size_t q = 0; q < nq; ++q) g.sinks_.push_back(static_cast<NodeId>(q * ns + s));
  }
  std::sort(g.sinks_.begin(), g.sinks_.end());
  return g;
}

const RevisionGraph::Edge* RevisionGraph::find_edge(NodeId u, NodeId v) const {
  const auto out = out_edges(u);
  const auto it = std::lower_bound(out.begin(), out.end(), v,
                                   [](const Edge& e, NodeId t) { return e.to < t; });
  if (it == out.end() || it->to != v) return nullptr;
  return &*it;
}

NodeId RevisionGraph::node_of(const std::string& system_state,
                              const std::string& spec_state) const {
  return static_cast<NodeId>(index_of(system_states_, system_state) * spec_states_.size() +
                             index_of(spec_states_, spec_state));
}

const std::string& RevisionGraph::system_state_of(NodeId v) const {
  return system_states_[v / spec_states_.size()];
}

const std::string& RevisionGraph::spec_state_of(NodeId v) const {
  return spec_states_[v % spec_states_.size()];
}

std::string RevisionGraph::node_name(NodeId v) const {
  if (v == super_source()) return "(init)";
  return "(" + system_state_of(v) + "," + spec_state_of(v) + ")";
}

Revision RevisionGraph::to_revision(const LabelSet& set) const {
  Revision rev;
  set.for_each([&](RemId id) { rev.removals.insert(removable_[id]); });
  return rev;
}

LabelSet RevisionGraph::to_label_set(const Revision& rev) const {
  LabelSet set(removable_.size());
  for (const auto& r : rev.removals) {
    const auto it = std::lower_bound(removable_.begin(), removable_.end(), r);
    if (it == removable_.end() || *it != r)
      throw error(errc::invalid_removal, "occurrence of '" + r.symbol + "' on (" + r.from +
                                             " -> " + r.to + ") is not removable");
    set.insert(static_cast<RemId>(it - removable_.begin()));
  }
  return set;
}

RevisionGraph build_graph(const SystemFsm& fsm, const SpecAutomaton& spec) {
  return RevisionGraph::build(fsm, spec);
}

namespace {

// Prefix search plus per-sink cycle search, both breadth first with neighbors
// expanded in canonical node order, so the witness is deterministic.
template <typename EdgeOk>
std::optional<AcceptingRun> emptiness_impl(const RevisionGraph& g, EdgeOk&& edge_ok) {
  const std::size_t n = g.node_count() + 1;
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<char> reached(n, 0);
  const NodeId root = g.super_source();
  reached[root] = 1;
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(u)) {
      if (!edge_ok(e) || reached[e.to]) continue;
      reached[e.to] = 1;
      parent[e.to] = u;
      queue.push_back(e.to);
    }
  }

  for (const NodeId sink : g.sinks()) {
    if (!reached[sink]) continue;

    // cycle back to the sink; a self-loop is the shortest case
    std::vector<NodeId> cyc_parent(n, kNoNode);
    std::vector<char> seen(n, 0);
    seen[sink] = 1;
    std::deque<NodeId> q2{sink};
    std::optional<NodeId> closer;
    while (!q2.empty() && !closer) {
      const NodeId u = q2.front();
      q2.pop_front();
      for (const auto& e : g.out_edges(u)) {
        if (!edge_ok(e)) continue;
        if (e.to == sink) {
          closer = u;
          break;
        }
        if (!seen[e.to]) {
          seen[e.to] = 1;
          cyc_parent[e.to] = u;
          q2.push_back(e.to);
        }
      }
    }
    if (!closer) continue;

    AcceptingRun run;
    for (NodeId v = sink; v != root; v = parent[v]) run.prefix.push_back(v);
    std::reverse(run.prefix.begin(), run.prefix.end());
    run.lasso.push_back(sink);
    std::vector<NodeId> back;
    for (NodeId v = *closer; v != sink; v = cyc_parent[v]) back.push_back(v);
    std::reverse(back.begin(), back.end());
    run.lasso.insert(run.lasso.end(), back.begin(), back.end());
    run.lasso.push_back(sink);
    return run;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AcceptingRun> check_emptiness(const RevisionGraph& graph, bool enabled_only) {
  if (enabled_only) {
    return emptiness_impl(graph, [](const RevisionGraph::Edge& e) { return e.enabled; });
  }
  return emptiness_impl(graph, [](const RevisionGraph::Edge&) { return true; });
}

std::optional<AcceptingRun> check_emptiness_under(const RevisionGraph& graph,
                                                  const LabelSet& allowed) {
  return emptiness_impl(graph, [&](const RevisionGraph::Edge& e) {
    if (e.enabled) return true;
    for (const RemId id : e.labels) {
      if (!allowed.contains(id)) return false;
    }
    return true;
  });
}

std::optional<AcceptingRun> check_emptiness_under_threshold(const RevisionGraph& graph,
                                                            double limit) {
  return emptiness_impl(graph, [limit](const RevisionGraph::Edge& e) {
    return e.enabled || e.label_max <= limit;
  });
}

std::optional<AcceptingRun> verify_revision(const SystemFsm& fsm, const SpecAutomaton& spec,
                                            const Revision& rev) {
  const SpecAutomaton revised = apply_revision(spec, rev);
  const RevisionGraph graph = RevisionGraph::build(fsm, revised);
  return check_emptiness(graph, /*enabled_only=*/true);
}

LabelSet path_label_union(const RevisionGraph& graph, std::span<const NodeId> path) {
  LabelSet set(graph.removable_count());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto* e = graph.find_edge(path[i], path[i + 1]);
    if (!e)
      throw error(errc::dangling_edge, "no edge " + graph.node_name(path[i]) + " -> " +
                                           graph.node_name(path[i + 1]));
    for (const RemId id : e->labels) set.insert(id);
  }
  return set;
}

std::string to_dot(const RevisionGraph& graph) {
  std::ostringstream out;
  out << "digraph revision_graph {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const NodeId v : graph.sinks()) {
    out << "  \"" << graph.system_state_of(v) << "," << graph.spec_state_of(v)
        << "\" [shape=doublecircle];\n";
  }
  out << "  __init [shape=point];\n";
  for (const NodeId v : graph.sources()) {
    out << "  __init -> \"" << graph.system_state_of(v) << "," << graph.spec_state_of(v)
        << "\";\n";
  }
  const std::size_t grid = graph.node_count();
  for (std::size_t u = 0; u < grid; ++u) {
    for (const auto& e : graph.out_edges(static_cast<NodeId>(u))) {
      out << "  \"" << graph.system_state_of(e.from) << "," << graph.spec_state_of(e.from)
          << "\" -> \"" << graph.system_state_of(e.to) << "," << graph.spec_state_of(e.to)
          << "\"";
      if (!e.enabled) {
        std::vector<std::string> syms;
        for (const RemId id : e.labels) syms.push_back(graph.removable(id).symbol);
        std::sort(syms.begin(), syms.end());
        syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
        out << " [style=dotted, label=\"{";
        for (std::size_t i = 0; i < syms.size(); ++i) out << (i ? "," : "") << syms[i];
        out << "}\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace specrev
