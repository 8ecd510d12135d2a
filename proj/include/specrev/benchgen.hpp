#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specrev/automata.hpp"
#include "specrev/oracle.hpp"
#include "specrev/search.hpp"

namespace specrev {

/// Knobs for the random-instance campaigns. An instance is a pair of random
/// DAGs of n = sqrt(product_nodes) states each, forward edges only, self-loops
/// on leaves, over an alphabet of 4n symbols; the edge count per DAG targets
/// edge_factor * n (capped by the complete DAG) and accepting states cover
/// sink_fraction of the states. The sampling choices the protocol leaves open
/// are explicit fields here and are echoed in every report header.
struct BenchConfig {
  std::uint64_t seed = 42;
  int product_nodes = 9;  // must be a perfect square
  double edge_factor = 2.5;
  double sink_fraction = 0.2;
  double theta_min = 1.0;
  double theta_max = 10.0;
  int trials = 200;

  // sampling choices not fixed by the protocol
  int label_min = 1;
  int label_max = 3;
  double state_label_density = 0.5;
  bool require_accepting_leaf = true;

  bool run_sum_oracle = true;
  OracleBudget sum_oracle_budget{1'000'000, 120.0};
  OracleBudget max_oracle_budget{1'000'000, 120.0};
};

/// Throws ConfigError when a field is out of range (non-square product_nodes,
/// edge_factor outside [2,3], sink_fraction outside [0.05,0.40], ...).
void validate(const BenchConfig& cfg);

struct GeneratedInstance {
  SystemFsm system;
  SpecAutomaton spec;
  std::vector<std::string> alphabet;            // all 4n symbol names
  std::map<std::string, double> theta_per_symbol;
};

/// Deterministic in (cfg.seed, trial) only; regenerating the same trial gives
/// a byte-identical instance regardless of execution order.
GeneratedInstance generate_instance(const BenchConfig& cfg, int trial);

struct TrialRecord {
  int trial = 0;

  RevisionOutcome::Status status = RevisionOutcome::Status::no_revision_exists;
  double sum_result_sum = 0.0;   // theta-sum of the min-sum search result
  double sum_result_max = 0.0;   // theta-max of the min-sum search result
  double max_result_sum = 0.0;   // theta-sum of the min-max search result
  double max_result_max = 0.0;   // theta-max of the min-max search result
  std::size_t sum_result_size = 0;
  std::size_t max_result_size = 0;

  OracleResult::Status oracle_sum_status = OracleResult::Status::timed_out;
  double oracle_sum_cost = 0.0;
  std::uint64_t oracle_sum_checked = 0;
  OracleResult::Status oracle_max_status = OracleResult::Status::timed_out;
  double oracle_max_cost = 0.0;

  std::optional<double> ratio;        // sum search / sum oracle
  std::optional<double> ratio1;       // theta-sum of max result / theta-sum of sum result
  std::optional<double> ratio2;       // theta-max of sum result / theta-max of max result
  std::optional<double> size_ratio;   // |max result| / |sum result|

  double search_sum_seconds = 0.0;
  double search_max_seconds = 0.0;
  double oracle_sum_seconds = 0.0;
  double oracle_max_seconds = 0.0;
};

struct Aggregate {
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;
  int n = 0;
};

struct CampaignReport {
  BenchConfig config;
  std::vector<TrialRecord> trials;  // ascending trial index; completed only
  bool interrupted = false;

  Aggregate ratio, ratio1, ratio2, size_ratio;
  Aggregate time_search_sum, time_search_max, time_oracle_sum, time_oracle_max;
  double avg_size_sum = 0.0;
  double avg_size_max = 0.0;
  int revised = 0;
  int already_satisfiable = 0;
  int no_revision = 0;
  int oracle_sum_succ = 0;
  int oracle_max_succ = 0;

  std::string to_text() const;
  /// Deterministic content only; wall-clock numbers live in timings_json().
  nlohmann::ordered_json to_json() const;
  nlohmann::ordered_json timings_json() const;
};

/// Cooperative stop flag for long campaigns; checked between trials.
std::atomic<bool>& campaign_interrupt_flag();

/// Thread cap from SPEC_REVISE_THREADS (0 when unset/invalid).
int thread_cap_from_env();

/// Runs every trial (in parallel up to max_threads; 0 means auto) and reduces
/// records in trial order, so the report does not depend on scheduling.
CampaignReport run_campaign(const BenchConfig& cfg, int max_threads = 0);

}  // namespace specrev
