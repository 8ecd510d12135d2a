#include "specrev/benchgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "specrev/rng.hpp"

namespace specrev {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kStreamSystemDag = 0;
constexpr std::uint64_t kStreamSpecDag = 1;
constexpr std::uint64_t kStreamAccepting = 2;
constexpr std::uint64_t kStreamSystemLabels = 3;
constexpr std::uint64_t kStreamSpecLabels = 4;
constexpr std::uint64_t kStreamTheta = 5;

constexpr int kResampleLimit = 1000;

int name_width(int count) {
  int width = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++width;
  return width;
}

std::string padded_name(char prefix, int index, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%0*d", prefix, width, index);
  return buf;
}

struct Dag {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // forward edges, sorted
  std::vector<char> is_leaf;               // no outgoing forward edge
};

Dag sample_dag(CounterRng& rng, int n, int target_edges) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  const int take = std::min<int>(target_edges, static_cast<int>(all.size()));

  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    std::vector<std::pair<int, int>> pool = all;
    for (int i = 0; i < take; ++i) {
      const std::size_t j = i + rng.next_below(pool.size() - i);
      std::swap(pool[i], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(take);
    std::sort(pool.begin(), pool.end());

    std::vector<std::vector<int>> out(n);
    for (const auto& [a, b] : pool) out[a].push_back(b);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const int v : out[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    if (reached != n) continue;

    Dag dag;
    dag.n = n;
    dag.edges = std::move(pool);
    dag.is_leaf.assign(n, 1);
    for (const auto& [a, b] : dag.edges) dag.is_leaf[a] = 0;
    return dag;
  }
  throw error(errc::resample_limit_exceeded,
              "could not sample a fully reachable DAG with " + std::to_string(n) + " nodes");
}

std::vector<int> sample_accepting(CounterRng& rng, const Dag& dag, double fraction,
                                  bool require_leaf) {
  const int n = dag.n;
  const int k = std::clamp<int>(static_cast<int>(std::llround(fraction * n)), 1, n);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
      const std::size_t j = i + rng.next_below(idx.size() - i);
      std::swap(idx[i], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    if (!require_leaf ||
        std::any_of(idx.begin(), idx.end(), [&](int s) { return dag.is_leaf[s]; })) {
      return idx;
    }
  }
  throw error(errc::resample_limit_exceeded, "could not place an accepting state on a leaf");
}

std::set<std::string> sample_label(CounterRng& rng, const std::vector<std::string>& alphabet,
                                   int label_min, int label_max) {
  const int span = label_max - label_min;
  const int size = label_min + (span > 0 ? static_cast<int>(rng.next_below(span + 1)) : 0);
  std::vector<int> idx(alphabet.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::set<std::string> label;
  for (int i = 0; i < size; ++i) {
    const std::size_t j = i + rng.next_below(idx.size() - i);
    std::swap(idx[i], idx[static_cast<std::size_t>(j)]);
    label.insert(alphabet[idx[i]]);
  }
  return label;
}

double time_call(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct AggregateBuilder {
  double min = 0.0, max = 0.0, sum = 0.0;
  int n = 0;
  void add(double v) {
    if (n == 0) {
      min = max = v;
    } else {
      min = std::min(min, v);
      max = std::max(max, v);
    }
    sum += v;
    ++n;
  }
  Aggregate done() const { return Aggregate{min, n ? sum / n : 0.0, max, n}; }
};

constexpr double kTol = 1e-12;

}  // namespace

void validate(const BenchConfig& cfg) {
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(cfg.product_nodes))));
  if (cfg.product_nodes < 1 || n * n != cfg.product_nodes)
    throw error(errc::config_error,
                "product_nodes must be a perfect square, got " + std::to_string(cfg.product_nodes));
  if (cfg.edge_factor < 2.0 || cfg.edge_factor > 3.0)
    throw error(errc::config_error, "edge_factor must lie in [2, 3]");
  if (cfg.sink_fraction < 0.05 || cfg.sink_fraction > 0.40)
    throw error(errc::config_error, "sink_fraction must lie in [0.05, 0.40]");
  if (!(cfg.theta_min >= 0.0) || !(cfg.theta_max >= cfg.theta_min))
    throw error(errc::config_error, "theta range must satisfy 0 <= min <= max");
  if (cfg.trials < 1) throw error(errc::config_error, "trials must be positive");
  if (cfg.label_min < 0 || cfg.label_max < cfg.label_min)
    throw error(errc::config_error, "label size range must satisfy 0 <= min <= max");
  if (cfg.state_label_density < 0.0 || cfg.state_label_density > 1.0)
    throw error(errc::config_error, "state_label_density must lie in [0, 1]");
}

GeneratedInstance generate_instance(const BenchConfig& cfg, int trial) {
  validate(cfg);
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(cfg.product_nodes))));
  const int target_edges = static_cast<int>(std::llround(cfg.edge_factor * n));
  const int alphabet_size = 4 * n;

  GeneratedInstance out;
  const int sym_width = name_width(alphabet_size);
  for (int i = 0; i < alphabet_size; ++i)
    out.alphabet.push_back(padded_name('p', i, sym_width));

  CounterRng sys_rng(cfg.seed, trial, kStreamSystemDag);
  CounterRng spec_rng(cfg.seed, trial, kStreamSpecDag);
  CounterRng acc_rng(cfg.seed, trial, kStreamAccepting);
  CounterRng sys_label_rng(cfg.seed, trial, kStreamSystemLabels);
  CounterRng spec_label_rng(cfg.seed, trial, kStreamSpecLabels);
  CounterRng theta_rng(cfg.seed, trial, kStreamTheta);

  const Dag sys_dag = sample_dag(sys_rng, n, target_edges);
  const Dag spec_dag = sample_dag(spec_rng, n, target_edges);
  const std::vector<int> accepting =
      sample_accepting(acc_rng, spec_dag, cfg.sink_fraction, cfg.require_accepting_leaf);

  const int state_width = name_width(n);
  std::vector<std::string> sys_names, spec_names;
  for (int i = 0; i < n; ++i) {
    sys_names.push_back(padded_name('t', i, state_width));
    spec_names.push_back(padded_name('s', i, state_width));
  }

  out.system.states = sys_names;
  out.system.initial = {sys_names[0]};
  for (const auto& [a, b] : sys_dag.edges)
    out.system.edges.emplace_back(sys_names[a], sys_names[b]);
  for (int i = 0; i < n; ++i) {
    if (sys_dag.is_leaf[i]) out.system.edges.emplace_back(sys_names[i], sys_names[i]);
  }
  std::sort(out.system.edges.begin(), out.system.edges.end());
  for (int i = 0; i < n; ++i) {
    std::set<std::string> label;
    for (int s = 0; s < alphabet_size; ++s) {
      if (sys_label_rng.next_unit() < cfg.state_label_density) label.insert(out.alphabet[s]);
    }
    out.system.labels.emplace(sys_names[i], std::move(label));
  }

  out.spec.states = spec_names;
  out.spec.initial = spec_names[0];
  for (const int s : accepting) out.spec.accepting.push_back(spec_names[s]);
  std::vector<std::pair<int, int>> spec_pairs = spec_dag.edges;
  for (int i = 0; i < n; ++i) {
    if (spec_dag.is_leaf[i]) spec_pairs.emplace_back(i, i);
  }
  std::sort(spec_pairs.begin(), spec_pairs.end());
  for (const auto& [a, b] : spec_pairs) {
    out.spec.transitions.push_back(SpecTransition{
        spec_names[a], spec_names[b],
        sample_label(spec_label_rng, out.alphabet, cfg.label_min, cfg.label_max)});
  }

  const auto steps =
      static_cast<std::uint64_t>(std::llround((cfg.theta_max - cfg.theta_min) * 1000.0));
  for (const auto& sym : out.alphabet) {
    const double raw = cfg.theta_min + 0.001 * static_cast<double>(theta_rng.next_below(steps + 1));
    out.theta_per_symbol.emplace(sym, std::round(raw * 1000.0) / 1000.0);
  }
  for (const auto& t : out.spec.transitions) {
    for (const auto& sym : t.label) {
      out.spec.preference.emplace(Removal{sym, t.from, t.to}, out.theta_per_symbol.at(sym));
    }
  }

  validate_system(out.system);
  validate_spec(out.spec);
  return out;
}

std::atomic<bool>& campaign_interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

int thread_cap_from_env() {
  const char* raw = std::getenv("SPEC_REVISE_THREADS");
  if (!raw) return 0;
  const int value = std::atoi(raw);
  return value > 0 ? value : 0;
}

namespace {

TrialRecord run_trial(const BenchConfig& cfg, int trial) {
  const GeneratedInstance inst = generate_instance(cfg, trial);
  const RevisionGraph graph = build_graph(inst.system, inst.spec);

  TrialRecord rec;
  rec.trial = trial;

  RevisionOutcome sum_out, max_out;
  rec.search_sum_seconds = time_call([&] { sum_out = find_revision(graph, Objective::sum); });
  rec.search_max_seconds = time_call([&] { max_out = find_revision(graph, Objective::max); });

  rec.status = sum_out.status;
  rec.sum_result_sum = sum_out.sum_cost;
  rec.sum_result_max = sum_out.max_cost;
  rec.sum_result_size = sum_out.revision.removals.size();
  rec.max_result_sum = max_out.sum_cost;
  rec.max_result_max = max_out.max_cost;
  rec.max_result_size = max_out.revision.removals.size();

  OracleResult oracle_sum, oracle_max;
  if (cfg.run_sum_oracle) {
    rec.oracle_sum_seconds =
        time_call([&] { oracle_sum = oracle_min_sum(graph, cfg.sum_oracle_budget); });
    rec.oracle_sum_status = oracle_sum.status;
    rec.oracle_sum_cost = oracle_sum.cost;
    rec.oracle_sum_checked = oracle_sum.subsets_checked;
  }
  rec.oracle_max_seconds =
      time_call([&] { oracle_max = oracle_min_max(graph, cfg.max_oracle_budget); });
  rec.oracle_max_status = oracle_max.status;
  rec.oracle_max_cost = oracle_max.cost;

  const bool searched = rec.status != RevisionOutcome::Status::no_revision_exists;
  if (cfg.run_sum_oracle && oracle_sum.status == OracleResult::Status::optimal && searched) {
    if (oracle_sum.cost > kTol) {
      rec.ratio = sum_out.sum_cost / oracle_sum.cost;
    } else if (sum_out.sum_cost <= kTol) {
      rec.ratio = 1.0;
    }
  }
  const bool both_revised = sum_out.status == RevisionOutcome::Status::revised &&
                            max_out.status == RevisionOutcome::Status::revised;
  if (both_revised) {
    if (rec.sum_result_sum > kTol) rec.ratio1 = rec.max_result_sum / rec.sum_result_sum;
    if (rec.max_result_max > kTol) rec.ratio2 = rec.sum_result_max / rec.max_result_max;
    if (rec.sum_result_size > 0)
      rec.size_ratio =
          static_cast<double>(rec.max_result_size) / static_cast<double>(rec.sum_result_size);
  }
  return rec;
}

}  // namespace

CampaignReport run_campaign(const BenchConfig& cfg, int max_threads) {
  validate(cfg);
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  int threads = max_threads > 0 ? max_threads : hw;
  threads = std::min(threads, cfg.trials);

  std::vector<std::optional<TrialRecord>> slots(cfg.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (;;) {
      if (campaign_interrupt_flag().load()) return;
      const int i = next.fetch_add(1);
      if (i >= cfg.trials) return;
      try {
        slots[i] = run_trial(cfg, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CampaignReport report;
  report.config = cfg;
  report.interrupted = campaign_interrupt_flag().load();
  for (auto& slot : slots) {
    if (slot) report.trials.push_back(std::move(*slot));
  }

  AggregateBuilder ratio, ratio1, ratio2, size_ratio;
  AggregateBuilder t_ss, t_sm, t_os, t_om;
  double size_sum = 0.0, size_max = 0.0;
  int sized = 0;
  for (const auto& rec : report.trials) {
    if (rec.ratio) ratio.add(*rec.ratio);
    if (rec.ratio1) ratio1.add(*rec.ratio1);
    if (rec.ratio2) ratio2.add(*rec.ratio2);
    if (rec.size_ratio) size_ratio.add(*rec.size_ratio);
    t_ss.add(rec.search_sum_seconds);
    t_sm.add(rec.search_max_seconds);
    if (cfg.run_sum_oracle) t_os.add(rec.oracle_sum_seconds);
    t_om.add(rec.oracle_max_seconds);
    switch (rec.status) {
      case RevisionOutcome::Status::revised: ++report.revised; break;
      case RevisionOutcome::Status::already_satisfiable: ++report.already_satisfiable; break;
      case RevisionOutcome::Status::no_revision_exists: ++report.no_revision; break;
    }
    if (cfg.run_sum_oracle && rec.oracle_sum_status != OracleResult::Status::timed_out)
      ++report.oracle_sum_succ;
    if (rec.oracle_max_status != OracleResult::Status::timed_out) ++report.oracle_max_succ;
    if (rec.status == RevisionOutcome::Status::revised) {
      size_sum += static_cast<double>(rec.sum_result_size);
      size_max += static_cast<double>(rec.max_result_size);
      ++sized;
    }
  }
  report.ratio = ratio.done();
  report.ratio1 = ratio1.done();
  report.ratio2 = ratio2.done();
  report.size_ratio = size_ratio.done();
  report.time_search_sum = t_ss.done();
  report.time_search_max = t_sm.done();
  report.time_oracle_sum = t_os.done();
  report.time_oracle_max = t_om.done();
  report.avg_size_sum = sized ? size_sum / sized : 0.0;
  report.avg_size_max = sized ? size_max / sized : 0.0;
  return report;
}

namespace {

std::vector<std::string> sampling_notes(const BenchConfig& cfg) {
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(cfg.product_nodes))));
  const int target = static_cast<int>(std::llround(cfg.edge_factor * n));
  const int cap = n * (n - 1) / 2;
  char buf[256];
  std::vector<std::string> notes;
  std::snprintf(buf, sizeof(buf),
                "dags: %d states per side, alphabet %d symbols, forward-edge target min(%d, %d)",
                n, 4 * n, target, cap);
  notes.emplace_back(buf);
  std::snprintf(buf, sizeof(buf),
                "labels: %d-%d symbols per transition, state label density %.2f", cfg.label_min,
                cfg.label_max, cfg.state_label_density);
  notes.emplace_back(buf);
  std::snprintf(buf, sizeof(buf), "accepting: %.0f%% of states%s", cfg.sink_fraction * 100.0,
                cfg.require_accepting_leaf ? ", resampled until a leaf accepts" : "");
  notes.emplace_back(buf);
  std::snprintf(buf, sizeof(buf), "theta: per symbol, uniform on [%.3f, %.3f] at 3 decimals",
                cfg.theta_min, cfg.theta_max);
  notes.emplace_back(buf);
  return notes;
}

std::string succ_string(int succ, int total) {
  return std::to_string(succ) + "/" + std::to_string(total);
}

void append_aggregate_row(std::string& out, const char* name, const Aggregate& a) {
  char buf[160];
  if (a.n == 0) {
    std::snprintf(buf, sizeof(buf), "  %-11s (no defined trials)\n", name);
  } else {
    std::snprintf(buf, sizeof(buf), "  %-11s min %-9.4f avg %-9.4f max %-9.4f n=%d\n", name, a.min,
                  a.avg, a.max, a.n);
  }
  out += buf;
}

void append_time_row(std::string& out, const char* name, const Aggregate& a,
                     const std::string& succ) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "  %-11s min %-9.5f avg %-9.5f max %-9.5f succ %s\n", name,
                a.min, a.avg, a.max, succ.c_str());
  out += buf;
}

nlohmann::ordered_json aggregate_json(const Aggregate& a) {
  nlohmann::ordered_json j;
  if (a.n == 0) {
    j["min"] = nullptr;
    j["avg"] = nullptr;
    j["max"] = nullptr;
  } else {
    j["min"] = a.min;
    j["avg"] = a.avg;
    j["max"] = a.max;
  }
  j["n"] = a.n;
  return j;
}

nlohmann::ordered_json config_json(const BenchConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  j["product_nodes"] = cfg.product_nodes;
  j["edge_factor"] = cfg.edge_factor;
  j["sink_fraction"] = cfg.sink_fraction;
  j["theta_min"] = cfg.theta_min;
  j["theta_max"] = cfg.theta_max;
  j["trials"] = cfg.trials;
  j["label_min"] = cfg.label_min;
  j["label_max"] = cfg.label_max;
  j["state_label_density"] = cfg.state_label_density;
  j["require_accepting_leaf"] = cfg.require_accepting_leaf;
  j["run_sum_oracle"] = cfg.run_sum_oracle;
  j["sum_oracle_max_subsets"] = cfg.sum_oracle_budget.max_subsets;
  j["sum_oracle_max_seconds"] = cfg.sum_oracle_budget.max_seconds;
  return j;
}

}  // namespace

std::string CampaignReport::to_text() const {
  const int total = static_cast<int>(trials.size());
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "campaign: product_nodes=%d trials=%d seed=%llu%s\n",
                config.product_nodes, config.trials,
                static_cast<unsigned long long>(config.seed),
                interrupted ? " (interrupted)" : "");
  out += buf;
  for (const auto& note : sampling_notes(config)) out += "  " + note + "\n";
  std::snprintf(buf, sizeof(buf),
                "  outcomes: revised=%d already_satisfiable=%d no_revision=%d\n", revised,
                already_satisfiable, no_revision);
  out += buf;

  out += "\ntable 1: exact min-sum (oracle) vs approximate min-sum, times in seconds\n";
  if (config.run_sum_oracle) {
    append_time_row(out, "oracle-sum:", time_oracle_sum, succ_string(oracle_sum_succ, total));
  } else {
    out += "  oracle-sum: (not run)\n";
  }
  append_time_row(out, "search-sum:", time_search_sum, succ_string(total, total));
  append_aggregate_row(out, "RATIO:", ratio);

  out += "\ntable 2: approximate min-sum vs min-max, times in seconds\n";
  append_time_row(out, "search-sum:", time_search_sum, succ_string(total, total));
  append_time_row(out, "search-max:", time_search_max, succ_string(total, total));
  append_time_row(out, "oracle-max:", time_oracle_max, succ_string(oracle_max_succ, total));
  append_aggregate_row(out, "RATIO1:", ratio1);
  append_aggregate_row(out, "RATIO2:", ratio2);

  out += "\ntable 3: revision set sizes\n";
  std::snprintf(buf, sizeof(buf), "  avg size: min-sum %.4f  min-max %.4f  (over %d revised)\n",
                avg_size_sum, avg_size_max, revised);
  out += buf;
  append_aggregate_row(out, "SIZE_RATIO:", size_ratio);
  return out;
}

nlohmann::ordered_json CampaignReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  j["sampling_notes"] = sampling_notes(config);
  j["interrupted"] = interrupted;
  j["outcomes"] = {{"revised", revised},
                   {"already_satisfiable", already_satisfiable},
                   {"no_revision", no_revision}};
  nlohmann::ordered_json agg;
  agg["RATIO"] = aggregate_json(ratio);
  agg["RATIO1"] = aggregate_json(ratio1);
  agg["RATIO2"] = aggregate_json(ratio2);
  agg["SIZE_RATIO"] = aggregate_json(size_ratio);
  agg["avg_size_sum"] = avg_size_sum;
  agg["avg_size_max"] = avg_size_max;
  const int total = static_cast<int>(trials.size());
  agg["succ"] = {{"search_sum", succ_string(total, total)},
                 {"search_max", succ_string(total, total)},
                 {"oracle_sum", config.run_sum_oracle ? succ_string(oracle_sum_succ, total)
                                                      : std::string("not run")},
                 {"oracle_max", succ_string(oracle_max_succ, total)}};
  j["aggregates"] = std::move(agg);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& rec : trials) {
    nlohmann::ordered_json r;
    r["trial"] = rec.trial;
    r["status"] = status_name(rec.status);
    r["sum_result"] = {{"sum", rec.sum_result_sum},
                       {"max", rec.sum_result_max},
                       {"size", rec.sum_result_size}};
    r["max_result"] = {{"sum", rec.max_result_sum},
                       {"max", rec.max_result_max},
                       {"size", rec.max_result_size}};
    if (config.run_sum_oracle) {
      r["oracle_sum"] = {{"status", status_name(rec.oracle_sum_status)},
                         {"cost", rec.oracle_sum_cost},
                         {"subsets", rec.oracle_sum_checked}};
    } else {
      r["oracle_sum"] = nullptr;
    }
    r["oracle_max"] = {{"status", status_name(rec.oracle_max_status)},
                       {"cost", rec.oracle_max_cost}};
    r["RATIO"] = rec.ratio ? nlohmann::ordered_json(*rec.ratio) : nullptr;
    r["RATIO1"] = rec.ratio1 ? nlohmann::ordered_json(*rec.ratio1) : nullptr;
    r["RATIO2"] = rec.ratio2 ? nlohmann::ordered_json(*rec.ratio2) : nullptr;
    r["SIZE_RATIO"] = rec.size_ratio ? nlohmann::ordered_json(*rec.size_ratio) : nullptr;
    rows.push_back(std::move(r));
  }
  j["trials"] = std::move(rows);
  return j;
}

nlohmann::ordered_json CampaignReport::timings_json() const {
  nlohmann::ordered_json j;
  j["aggregates"] = {{"search_sum_s", aggregate_json(time_search_sum)},
                     {"search_max_s", aggregate_json(time_search_max)},
                     {"oracle_sum_s", aggregate_json(time_oracle_sum)},
                     {"oracle_max_s", aggregate_json(time_oracle_max)}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& rec : trials) {
    rows.push_back({{"trial", rec.trial},
                    {"search_sum_s", rec.search_sum_seconds},
                    {"search_max_s", rec.search_max_seconds},
                    {"oracle_sum_s", rec.oracle_sum_seconds},
                    {"oracle_max_s", rec.oracle_max_seconds}});
  }
  j["trials"] = std::move(rows);
  return j;
}

}  // namespace specrev
