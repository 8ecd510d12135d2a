#include "specrev/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace specrev {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw error(errc::parse_error, path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::vector<std::string> as_string_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SystemFsm parse_system(const json& j) {
  SystemFsm fsm;
  fsm.states = as_string_list(require(j, "states", "system"), "system.states");
  if (sorted_unique(fsm.states).size() != fsm.states.size())
    fail("system.states", "duplicate state ids");
  std::sort(fsm.states.begin(), fsm.states.end());
  fsm.initial = sorted_unique(as_string_list(require(j, "initial", "system"), "system.initial"));

  const json& edges = require(j, "edges", "system");
  if (!edges.is_array()) fail("system.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "system.edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) fail(path, "expected [from, to]");
    fsm.edges.emplace_back(as_string(edges[i][0], path), as_string(edges[i][1], path));
  }
  std::sort(fsm.edges.begin(), fsm.edges.end());
  fsm.edges.erase(std::unique(fsm.edges.begin(), fsm.edges.end()), fsm.edges.end());

  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_object()) fail("system.labels", "expected an object");
    for (const auto& [state, arr] : labels.items()) {
      const auto list = as_string_list(arr, "system.labels." + state);
      fsm.labels.emplace(state, std::set<std::string>(list.begin(), list.end()));
    }
  }
  for (const auto& q : fsm.states) fsm.labels.try_emplace(q);
  return fsm;
}

SpecAutomaton parse_spec(const json& j) {
  SpecAutomaton spec;
  spec.states = as_string_list(require(j, "states", "spec"), "spec.states");
  if (sorted_unique(spec.states).size() != spec.states.size())
    fail("spec.states", "duplicate state ids");
  std::sort(spec.states.begin(), spec.states.end());
  spec.initial = as_string(require(j, "initial", "spec"), "spec.initial");
  spec.accepting =
      sorted_unique(as_string_list(require(j, "accepting", "spec"), "spec.accepting"));

  const json& transitions = require(j, "transitions", "spec");
  if (!transitions.is_array()) fail("spec.transitions", "expected an array");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string path = "spec.transitions[" + std::to_string(i) + "]";
    SpecTransition t;
    t.from = as_string(require(transitions[i], "from", path), path + ".from");
    t.to = as_string(require(transitions[i], "to", path), path + ".to");
    const auto label = as_string_list(require(transitions[i], "label", path), path + ".label");
    t.label.insert(label.begin(), label.end());
    spec.transitions.push_back(std::move(t));
  }
  std::sort(spec.transitions.begin(), spec.transitions.end(),
            [](const SpecTransition& a, const SpecTransition& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  for (std::size_t i = 1; i < spec.transitions.size(); ++i) {
    if (spec.transitions[i - 1].from == spec.transitions[i].from &&
        spec.transitions[i - 1].to == spec.transitions[i].to) {
      fail("spec.transitions", "duplicate transition (" + spec.transitions[i].from + " -> " +
                                   spec.transitions[i].to + ")");
    }
  }

  const json& prefs = require(j, "preferences", "spec");
  std::map<std::string, double> per_symbol;
  if (prefs.contains("per_symbol")) {
    const json& table = prefs["per_symbol"];
    if (!table.is_object()) fail("spec.preferences.per_symbol", "expected an object");
    for (const auto& [sym, value] : table.items()) {
      per_symbol.emplace(sym, as_number(value, "spec.preferences.per_symbol." + sym));
    }
  }
  std::map<Removal, double> per_occurrence;
  if (prefs.contains("per_occurrence")) {
    const json& list = prefs["per_occurrence"];
    if (!list.is_array()) fail("spec.preferences.per_occurrence", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "spec.preferences.per_occurrence[" + std::to_string(i) + "]";
      Removal r{as_string(require(list[i], "symbol", path), path + ".symbol"),
                as_string(require(list[i], "from", path), path + ".from"),
                as_string(require(list[i], "to", path), path + ".to")};
      const double value = as_number(require(list[i], "value", path), path + ".value");
      const SpecTransition* t = find_transition(spec, r.from, r.to);
      if (!t || !t->label.count(r.symbol))
        fail(path, "no occurrence of '" + r.symbol + "' on (" + r.from + " -> " + r.to + ")");
      per_occurrence[std::move(r)] = value;
    }
  }

  // per-occurrence entries override the per-symbol defaults
  for (const auto& t : spec.transitions) {
    for (const auto& sym : t.label) {
      Removal key{sym, t.from, t.to};
      const auto occ = per_occurrence.find(key);
      if (occ != per_occurrence.end()) {
        spec.preference.emplace(std::move(key), occ->second);
        continue;
      }
      const auto def = per_symbol.find(sym);
      if (def == per_symbol.end())
        fail("spec.preferences", "no preference level for symbol '" + sym + "' on (" + t.from +
                                     " -> " + t.to + ")");
      spec.preference.emplace(std::move(key), def->second);
    }
  }
  return spec;
}

}  // namespace

LoadedInstance parse_instance(const json& doc) {
  LoadedInstance out;
  out.system = parse_system(require(doc, "system", "instance"));
  out.spec = parse_spec(require(doc, "spec", "instance"));
  if (doc.contains("meta")) out.meta = doc["meta"];
  validate_system(out.system);
  validate_spec(out.spec);
  return out;
}

LoadedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, path.string() + ": " + e.what());
  }
  return parse_instance(doc);
}

ordered_json instance_to_json(const SystemFsm& system, const SpecAutomaton& spec,
                              const ordered_json* meta,
                              const std::map<std::string, double>* theta_per_symbol) {
  ordered_json j;
  if (meta && !meta->is_null()) j["meta"] = *meta;

  ordered_json sys;
  sys["states"] = system.states;
  sys["initial"] = system.initial;
  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : system.edges) edges.push_back({from, to});
  sys["edges"] = std::move(edges);
  ordered_json labels;
  for (const auto& [state, label] : system.labels) labels[state] = label;
  sys["labels"] = std::move(labels);
  j["system"] = std::move(sys);

  ordered_json sp;
  sp["states"] = spec.states;
  sp["initial"] = spec.initial;
  sp["accepting"] = spec.accepting;
  ordered_json transitions = ordered_json::array();
  for (const auto& t : spec.transitions) {
    transitions.push_back({{"from", t.from}, {"to", t.to}, {"label", t.label}});
  }
  sp["transitions"] = std::move(transitions);
  ordered_json prefs;
  if (theta_per_symbol) {
    ordered_json table;
    for (const auto& [sym, value] : *theta_per_symbol) table[sym] = value;
    prefs["per_symbol"] = std::move(table);
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& [r, value] : spec.preference) {
      list.push_back(
          {{"symbol", r.symbol}, {"from", r.from}, {"to", r.to}, {"value", value}});
    }
    prefs["per_occurrence"] = std::move(list);
  }
  sp["preferences"] = std::move(prefs);
  j["spec"] = std::move(sp);
  return j;
}

Revision parse_revision(const json& doc, const SpecAutomaton& spec) {
  Revision rev;
  const json& list = require(doc, "removals", "revision");
  if (!list.is_array()) fail("revision.removals", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "revision.removals[" + std::to_string(i) + "]";
    rev.removals.insert(Removal{as_string(require(list[i], "symbol", path), path + ".symbol"),
                                as_string(require(list[i], "from", path), path + ".from"),
                                as_string(require(list[i], "to", path), path + ".to")});
  }
  validate_revision(spec, rev);
  return rev;
}

Revision load_revision(const std::filesystem::path& path, const SpecAutomaton& spec) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, path.string() + ": " + e.what());
  }
  return parse_revision(doc, spec);
}

ordered_json run_to_json(const AcceptingRun& run, const RevisionGraph& graph) {
  const auto nodes = [&](const std::vector<NodeId>& seq) {
    ordered_json arr = ordered_json::array();
    for (const NodeId v : seq) {
      arr.push_back({graph.system_state_of(v), graph.spec_state_of(v)});
    }
    return arr;
  };
  return ordered_json{{"prefix", nodes(run.prefix)}, {"lasso", nodes(run.lasso)}};
}

ordered_json outcome_to_json(const RevisionOutcome& outcome, const RevisionGraph& graph,
                             const SpecAutomaton& spec, Objective objective) {
  ordered_json j;
  j["status"] = status_name(outcome.status);
  j["objective"] = objective == Objective::sum ? "sum" : "max";
  if (outcome.status == RevisionOutcome::Status::no_revision_exists) {
    j["removals"] = ordered_json::array();
    j["cost"] = nullptr;
    j["sum_cost"] = nullptr;
    j["max_cost"] = nullptr;
    j["witness"] = nullptr;
    return j;
  }
  ordered_json removals = ordered_json::array();
  for (const auto& r : outcome.revision.removals) {
    removals.push_back({{"symbol", r.symbol},
                        {"from", r.from},
                        {"to", r.to},
                        {"theta", theta(spec, r)}});
  }
  j["removals"] = std::move(removals);
  j["cost"] = outcome.cost;
  j["sum_cost"] = outcome.sum_cost;
  j["max_cost"] = outcome.max_cost;
  j["witness"] = outcome.witness ? run_to_json(*outcome.witness, graph) : ordered_json(nullptr);
  return j;
}

std::string outcome_to_text(const RevisionOutcome& outcome, const RevisionGraph& graph,
                            const SpecAutomaton& spec, Objective objective) {
  std::ostringstream out;
  out << status_name(outcome.status) << "\n";
  out << "objective: " << (objective == Objective::sum ? "sum" : "max") << "\n";
  if (outcome.status == RevisionOutcome::Status::no_revision_exists) {
    out << "no relaxation of the specification is satisfiable on this system\n";
    return out.str();
  }
  out << "cost: " << outcome.cost << "\n";
  out << "sum_cost: " << outcome.sum_cost << "\n";
  out << "max_cost: " << outcome.max_cost << "\n";
  out << "removals (" << outcome.revision.removals.size() << "):\n";
  for (const auto& r : outcome.revision.removals) {
    out << "  " << r.symbol << " @ (" << r.from << " -> " << r.to << ")  theta=" << theta(spec, r)
        << "\n";
  }
  if (outcome.witness) {
    const auto render = [&](const std::vector<NodeId>& seq) {
      std::string s;
      for (const NodeId v : seq) {
        if (!s.empty()) s += " ";
        s += graph.node_name(v);
      }
      return s;
    };
    out << "witness prefix: " << render(outcome.witness->prefix) << "\n";
    out << "witness lasso: " << render(outcome.witness->lasso) << "\n";
  }
  return out.str();
}

}  // namespace specrev
