#pragma once

#include <cstdint>
#include <optional>

#include "specrev/product.hpp"

namespace specrev {

/// Limits for the exhaustive solvers. Exceeding either one yields a
/// distinguishable timed-out result instead of an answer.
struct OracleBudget {
  std::uint64_t max_subsets = 1'000'000;
  double max_seconds = 7200.0;
};

struct OracleResult {
  enum class Status { optimal, infeasible, timed_out };

  Status status = Status::infeasible;
  Revision revision;
  double cost = 0.0;
  std::optional<AcceptingRun> witness;
  std::uint64_t subsets_checked = 0;

  bool completed() const { return status != Status::timed_out; }
};

const char* status_name(OracleResult::Status status);

/// Exact minimum-sum revision by best-first enumeration of removal subsets in
/// nondecreasing sum order, each candidate checked with the emptiness routine
/// over the edges it enables. Infeasible iff even the full removable space
/// fails.
OracleResult oracle_min_sum(const RevisionGraph& graph, const OracleBudget& budget = {});

/// Exact minimum-max revision by an ascending threshold sweep: the smallest
/// preference level t for which the edges costing at most t (plus all enabled
/// edges) admit an accepting run. Exact because feasibility is monotone in t.
OracleResult oracle_min_max(const RevisionGraph& graph, const OracleBudget& budget = {});

}  // namespace specrev
