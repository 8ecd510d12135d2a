#include "specrev/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_set>

#include "specrev/search.hpp"

namespace specrev {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Enabled-under-R mask over the disabled edges; subsets enabling the same
// edges are interchangeable for feasibility, which the memo exploits.
std::string disabled_mask(const RevisionGraph& g, const LabelSet& allowed) {
  std::string mask((g.disabled_edge_count() + 7) / 8, '\0');
  const std::size_t grid = g.node_count();
  for (std::size_t u = 0; u < grid; ++u) {
    for (const auto& e : g.out_edges(static_cast<NodeId>(u))) {
      if (e.enabled) continue;
      bool on = true;
      for (const RemId id : e.labels) {
        if (!allowed.contains(id)) {
          on = false;
          break;
        }
      }
      if (on) mask[e.disabled_index >> 3] |= static_cast<char>(1 << (e.disabled_index & 7));
    }
  }
  return mask;
}

OracleResult finish(const RevisionGraph& g, LabelSet set, AcceptingRun run,
                    Objective objective, std::uint64_t checked) {
  OracleResult out;
  out.status = OracleResult::Status::optimal;
  out.revision = g.to_revision(set);
  out.cost = objective_value(g, set, objective);
  out.witness = std::move(run);
  out.subsets_checked = checked;
  return out;
}

}  // namespace

const char* status_name(OracleResult::Status status) {
  switch (status) {
    case OracleResult::Status::optimal: return "OPTIMAL";
    case OracleResult::Status::infeasible: return "INFEASIBLE";
    case OracleResult::Status::timed_out: return "TIMED_OUT";
  }
  return "UNKNOWN";
}

OracleResult oracle_min_sum(const RevisionGraph& graph, const OracleBudget& budget) {
  const auto start = Clock::now();
  const std::size_t universe = graph.removable_count();

  // only occurrences that appear on some disabled edge can affect feasibility
  LabelSet support_set(universe);
  {
    const std::size_t grid = graph.node_count();
    for (std::size_t u = 0; u < grid; ++u) {
      for (const auto& e : graph.out_edges(static_cast<NodeId>(u))) {
        for (const RemId id : e.labels) support_set.insert(id);
      }
    }
  }
  const std::vector<RemId> by_id = support_set.values();
  std::vector<RemId> support = by_id;
  std::stable_sort(support.begin(), support.end(), [&](RemId a, RemId b) {
    return graph.theta_of(a) < graph.theta_of(b);
  });

  if (auto run = check_emptiness_under(graph, support_set)) {
    // feasible at full strength; the enumeration below can terminate
    if (support_set.empty()) {
      return finish(graph, std::move(support_set), std::move(*run), Objective::sum, 1);
    }
  } else {
    OracleResult out;
    out.status = OracleResult::Status::infeasible;
    out.subsets_checked = 1;
    return out;
  }

  // Best-first over subsets of the support, represented as ascending position
  // lists into the value-sorted order. Each popped subset spawns at most two
  // successors (append the next position, or slide the last one forward), so
  // every subset is met exactly once and costs never decrease.
  struct Entry {
    double cost;
    std::vector<std::uint32_t> positions;
    bool operator>(const Entry& other) const {
      if (cost != other.cost) return cost > other.cost;
      return positions > other.positions;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.push(Entry{0.0, {}});
  std::unordered_set<std::string> infeasible_masks;
  std::uint64_t checked = 0;

  while (!queue.empty()) {
    Entry cur = queue.top();
    queue.pop();
    ++checked;
    if (checked > budget.max_subsets ||
        (checked % 128 == 0 && seconds_since(start) > budget.max_seconds)) {
      OracleResult out;
      out.status = OracleResult::Status::timed_out;
      out.subsets_checked = checked;
      return out;
    }

    LabelSet candidate(universe);
    for (const std::uint32_t pos : cur.positions) candidate.insert(support[pos]);
    const std::string mask = disabled_mask(graph, candidate);
    if (!infeasible_masks.count(mask)) {
      if (auto run = check_emptiness_under(graph, candidate)) {
        return finish(graph, std::move(candidate), std::move(*run), Objective::sum, checked);
      }
      infeasible_masks.insert(mask);
    }

    if (cur.positions.empty()) {
      if (!support.empty()) {
        queue.push(Entry{graph.theta_of(support[0]), {0}});
      }
      continue;
    }
    const std::uint32_t last = cur.positions.back();
    if (last + 1 < support.size()) {
      Entry extend{cur.cost + graph.theta_of(support[last + 1]), cur.positions};
      extend.positions.push_back(last + 1);
      queue.push(std::move(extend));
      Entry slide{cur.cost - graph.theta_of(support[last]) + graph.theta_of(support[last + 1]),
                  std::move(cur.positions)};
      slide.positions.back() = last + 1;
      queue.push(std::move(slide));
    }
  }

  // unreachable: the full support is feasible and eventually enumerated
  OracleResult out;
  out.status = OracleResult::Status::infeasible;
  out.subsets_checked = checked;
  return out;
}

OracleResult oracle_min_max(const RevisionGraph& graph, const OracleBudget& budget) {
  const auto start = Clock::now();
  std::uint64_t checked = 0;

  const auto attempt = [&](double limit) -> std::optional<AcceptingRun> {
    ++checked;
    return check_emptiness_under_threshold(graph, limit);
  };

  if (auto run = check_emptiness(graph, /*enabled_only=*/true)) {
    OracleResult out;
    out.status = OracleResult::Status::optimal;
    out.witness = std::move(*run);
    out.subsets_checked = 1;
    return out;
  }
  ++checked;

  std::vector<double> thresholds;
  const std::size_t grid = graph.node_count();
  for (std::size_t u = 0; u < grid; ++u) {
    for (const auto& e : graph.out_edges(static_cast<NodeId>(u))) {
      if (!e.enabled) thresholds.push_back(e.label_max);
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  for (const double t : thresholds) {
    if (seconds_since(start) > budget.max_seconds) {
      OracleResult out;
      out.status = OracleResult::Status::timed_out;
      out.subsets_checked = checked;
      return out;
    }
    if (auto run = attempt(t)) {
      LabelSet set = path_label_union(graph, run->prefix);
      set.unite(path_label_union(graph, run->lasso));
      return finish(graph, std::move(set), std::move(*run), Objective::max, checked);
    }
  }

  OracleResult out;
  out.status = OracleResult::Status::infeasible;
  out.subsets_checked = checked;
  return out;
}

}  // namespace specrev
