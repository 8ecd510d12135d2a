#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "specrev/benchgen.hpp"
#include "specrev/instance_io.hpp"
#include "specrev/oracle.hpp"

namespace {

using namespace specrev;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsatisfiable = 2;

struct ReviseOptions {
  std::string instance;
  std::string objective = "sum";
  std::string emit = "text";
};

int run_revise(const ReviseOptions& opt) {
  const LoadedInstance inst = load_instance(opt.instance);
  const RevisionGraph graph = build_graph(inst.system, inst.spec);
  const Objective objective = opt.objective == "max" ? Objective::max : Objective::sum;
  const RevisionOutcome outcome = find_revision(graph, objective);
  if (opt.emit == "json") {
    std::cout << outcome_to_json(outcome, graph, inst.spec, objective).dump(2) << "\n";
  } else {
    std::cout << outcome_to_text(outcome, graph, inst.spec, objective);
  }
  return outcome.status == RevisionOutcome::Status::no_revision_exists ? kExitUnsatisfiable
                                                                       : kExitOk;
}

struct VerifyOptions {
  std::string instance;
  std::string revision;
};

int run_verify(const VerifyOptions& opt) {
  const LoadedInstance inst = load_instance(opt.instance);
  const Revision rev = load_revision(opt.revision, inst.spec);
  const auto run = verify_revision(inst.system, inst.spec, rev);
  if (!run) {
    std::cout << "UNSATISFIABLE: the revised specification admits no accepting run\n";
    return kExitUnsatisfiable;
  }
  const RevisionGraph graph = build_graph(inst.system, apply_revision(inst.spec, rev));
  std::cout << "SATISFIABLE\n" << run_to_json(*run, graph).dump(2) << "\n";
  return kExitOk;
}

struct DumpOptions {
  std::string instance;
  std::string output;
};

int run_dump(const DumpOptions& opt) {
  const LoadedInstance inst = load_instance(opt.instance);
  const RevisionGraph graph = build_graph(inst.system, inst.spec);
  const std::string dot = to_dot(graph);
  if (opt.output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(opt.output);
    if (!out) throw error(errc::parse_error, "cannot write '" + opt.output + "'");
    out << dot;
  }
  return kExitOk;
}

struct BenchOptions {
  BenchConfig cfg;
  std::string config_file;
  std::string out_dir = "bench-out";
  bool no_sum_oracle = false;
};

void apply_config_file(BenchConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, path + ": " + e.what());
  }
  const auto load = [&](const char* key, auto& field) {
    if (doc.contains(key)) field = doc[key].get<std::decay_t<decltype(field)>>();
  };
  load("seed", cfg.seed);
  load("product_nodes", cfg.product_nodes);
  load("edge_factor", cfg.edge_factor);
  load("sink_fraction", cfg.sink_fraction);
  load("theta_min", cfg.theta_min);
  load("theta_max", cfg.theta_max);
  load("trials", cfg.trials);
  load("label_min", cfg.label_min);
  load("label_max", cfg.label_max);
  load("state_label_density", cfg.state_label_density);
  load("require_accepting_leaf", cfg.require_accepting_leaf);
  load("run_sum_oracle", cfg.run_sum_oracle);
  load("sum_oracle_max_subsets", cfg.sum_oracle_budget.max_subsets);
  load("sum_oracle_max_seconds", cfg.sum_oracle_budget.max_seconds);
}

void handle_interrupt(int) { campaign_interrupt_flag().store(true); }

int run_bench(BenchOptions& opt) {
  if (!opt.config_file.empty()) apply_config_file(opt.cfg, opt.config_file);
  if (opt.no_sum_oracle) opt.cfg.run_sum_oracle = false;
  validate(opt.cfg);

  std::signal(SIGINT, handle_interrupt);
  const CampaignReport report = run_campaign(opt.cfg, thread_cap_from_env());
  std::signal(SIGINT, SIG_DFL);

  std::filesystem::create_directories(opt.out_dir);
  const auto write = [&](const char* name, const std::string& content) {
    const auto path = std::filesystem::path(opt.out_dir) / name;
    std::ofstream out(path);
    if (!out) throw error(errc::parse_error, "cannot write '" + path.string() + "'");
    out << content;
  };
  write("report.txt", report.to_text());
  write("report.json", report.to_json().dump(2) + "\n");
  write("timings.json", report.timings_json().dump(2) + "\n");

  std::cout << report.to_text();
  std::cout << "reports written to " << opt.out_dir << "\n";
  if (report.interrupted) {
    std::cerr << "interrupted: partial results flushed\n";
    return 130;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-preference revision of unsatisfiable automata specifications"};
  app.require_subcommand(1);

  ReviseOptions revise_opt;
  auto* revise = app.add_subcommand("revise", "compute a minimal-preference revision");
  revise->add_option("instance", revise_opt.instance, "instance JSON file")->required();
  revise->add_option("--objective", revise_opt.objective, "sum or max")
      ->check(CLI::IsMember({"sum", "max"}));
  revise->add_option("--emit", revise_opt.emit, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check a revision against an instance");
  verify->add_option("instance", verify_opt.instance, "instance JSON file")->required();
  verify->add_option("revision", verify_opt.revision, "revision JSON file")->required();

  DumpOptions dump_opt;
  auto* dump = app.add_subcommand("dump-graph", "write the annotated product as DOT text");
  dump->add_option("instance", dump_opt.instance, "instance JSON file")->required();
  dump->add_option("--output", dump_opt.output, "output file (stdout when omitted)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "run a random-instance campaign");
  bench->add_option("--config", bench_opt.config_file, "JSON config file (flags override)");
  bench->add_option("--seed", bench_opt.cfg.seed, "campaign seed");
  bench->add_option("--product-nodes", bench_opt.cfg.product_nodes,
                    "product size (perfect square)");
  bench->add_option("--trials", bench_opt.cfg.trials, "number of instances");
  bench->add_option("--edge-factor", bench_opt.cfg.edge_factor, "edges per state, in [2,3]");
  bench->add_option("--sink-fraction", bench_opt.cfg.sink_fraction,
                    "accepting fraction, in [0.05,0.40]");
  bench->add_option("--theta-min", bench_opt.cfg.theta_min, "preference range low end");
  bench->add_option("--theta-max", bench_opt.cfg.theta_max, "preference range high end");
  bench->add_option("--label-min", bench_opt.cfg.label_min, "fewest symbols per label");
  bench->add_option("--label-max", bench_opt.cfg.label_max, "most symbols per label");
  bench->add_option("--label-density", bench_opt.cfg.state_label_density,
                    "chance a symbol holds at a state");
  bench->add_flag("--allow-no-accepting-leaf",
                  [&](std::int64_t) { bench_opt.cfg.require_accepting_leaf = false; },
                  "do not force an accepting state onto a leaf");
  bench->add_flag("--no-sum-oracle", bench_opt.no_sum_oracle, "skip the exact min-sum solver");
  bench->add_option("--oracle-max-subsets", bench_opt.cfg.sum_oracle_budget.max_subsets,
                    "exact min-sum subset budget");
  bench->add_option("--oracle-max-seconds", bench_opt.cfg.sum_oracle_budget.max_seconds,
                    "exact min-sum wall budget per trial");
  bench->add_option("--out", bench_opt.out_dir, "report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (revise->parsed()) return run_revise(revise_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (dump->parsed()) return run_dump(dump_opt);
    if (bench->parsed()) return run_bench(bench_opt);
  } catch (const specrev::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
