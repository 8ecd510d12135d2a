#include "specrev/automata.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace specrev {

namespace {

bool sorted_unique(const std::vector<std::string>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool knows_state(const std::vector<std::string>& states, const std::string& s) {
  return std::binary_search(states.begin(), states.end(), s);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

void validate_system(const SystemFsm& fsm) {
  if (fsm.states.empty()) throw error(errc::invalid_structure, "system has no states");
  if (!sorted_unique(fsm.states))
    throw error(errc::invalid_structure, "system states must be sorted and unique");
  if (fsm.initial.empty()) throw error(errc::empty_initial_set, "system has no initial state");
  for (const auto& q : fsm.initial) {
    if (!knows_state(fsm.states, q))
      throw error(errc::unknown_state, "initial state '" + q + "' is not a system state");
  }
  for (const auto& [from, to] : fsm.edges) {
    if (!knows_state(fsm.states, from) || !knows_state(fsm.states, to))
      throw error(errc::dangling_edge, "edge (" + from + " -> " + to + ") leaves the state set");
  }
  for (const auto& [state, label] : fsm.labels) {
    if (!knows_state(fsm.states, state))
      throw error(errc::unknown_state, "labeling refers to unknown state '" + state + "'");
    for (const auto& sym : label) {
      if (sym.empty()) throw error(errc::invalid_structure, "empty symbol name in labeling");
    }
  }

  // forward reachability from the initial set
  std::set<std::string> seen(fsm.initial.begin(), fsm.initial.end());
  std::deque<std::string> queue(fsm.initial.begin(), fsm.initial.end());
  std::multimap<std::string, std::string> out;
  for (const auto& [from, to] : fsm.edges) out.emplace(from, to);
  while (!queue.empty()) {
    const std::string q = queue.front();
    queue.pop_front();
    auto [lo, hi] = out.equal_range(q);
    for (auto it = lo; it != hi; ++it) {
      if (seen.insert(it->second).second) queue.push_back(it->second);
    }
  }
  std::vector<std::string> unreachable;
  for (const auto& q : fsm.states) {
    if (!seen.count(q)) unreachable.push_back(q);
  }
  if (!unreachable.empty())
    throw error(errc::unreachable_state, "states not reachable from the initial set: [" +
                                             join(unreachable) + "]");
}

void validate_spec(const SpecAutomaton& spec) {
  if (spec.states.empty()) throw error(errc::invalid_structure, "specification has no states");
  if (!sorted_unique(spec.states))
    throw error(errc::invalid_structure, "specification states must be sorted and unique");
  if (!knows_state(spec.states, spec.initial))
    throw error(errc::unknown_state, "initial state '" + spec.initial + "' is not a specification state");
  if (!sorted_unique(spec.accepting))
    throw error(errc::invalid_structure, "accepting states must be sorted and unique");
  for (const auto& s : spec.accepting) {
    if (!knows_state(spec.states, s))
      throw error(errc::unknown_state, "accepting state '" + s + "' is not a specification state");
  }
  const SpecTransition* prev = nullptr;
  for (const auto& t : spec.transitions) {
    if (!knows_state(spec.states, t.from) || !knows_state(spec.states, t.to))
      throw error(errc::dangling_edge,
                  "transition (" + t.from + " -> " + t.to + ") leaves the state set");
    if (prev) {
      const auto prev_key = std::tie(prev->from, prev->to);
      const auto key = std::tie(t.from, t.to);
      if (prev_key == key)
        throw error(errc::duplicate_transition,
                    "more than one transition between " + t.from + " and " + t.to);
      if (key < prev_key)
        throw error(errc::invalid_structure, "transitions must be sorted by (from, to)");
    }
    prev = &t;
    for (const auto& sym : t.label) {
      if (sym.empty()) throw error(errc::invalid_structure, "empty symbol name on a label");
      const auto it = spec.preference.find(Removal{sym, t.from, t.to});
      if (it == spec.preference.end())
        throw error(errc::missing_preference, "no preference level for symbol '" + sym +
                                                  "' on (" + t.from + " -> " + t.to + ")");
      if (!std::isfinite(it->second) || it->second < 0.0)
        throw error(errc::invalid_structure, "preference level for symbol '" + sym + "' on (" +
                                                 t.from + " -> " + t.to +
                                                 ") must be finite and >= 0");
    }
  }
}

const SpecTransition* find_transition(const SpecAutomaton& spec, const std::string& from,
                                      const std::string& to) {
  const auto key = std::tie(from, to);
  auto it = std::lower_bound(spec.transitions.begin(), spec.transitions.end(), key,
                             [](const SpecTransition& t, const auto& k) {
                               return std::tie(t.from, t.to) < k;
                             });
  if (it == spec.transitions.end() || std::tie(it->from, it->to) != key) return nullptr;
  return &*it;
}

double theta(const SpecAutomaton& spec, const Removal& removal) {
  const auto it = spec.preference.find(removal);
  if (it == spec.preference.end())
    throw error(errc::missing_preference, "no preference level for symbol '" + removal.symbol +
                                              "' on (" + removal.from + " -> " + removal.to + ")");
  return it->second;
}

void validate_revision(const SpecAutomaton& spec, const Revision& rev) {
  for (const auto& r : rev.removals) {
    const SpecTransition* t = find_transition(spec, r.from, r.to);
    if (!t)
      throw error(errc::invalid_removal,
                  "no transition (" + r.from + " -> " + r.to + ") in the specification");
    if (!t->label.count(r.symbol))
      throw error(errc::invalid_removal, "symbol '" + r.symbol + "' is not on the label of (" +
                                             r.from + " -> " + r.to + ")");
  }
}

SpecAutomaton apply_revision(const SpecAutomaton& spec, const Revision& rev) {
  validate_revision(spec, rev);
  SpecAutomaton out = spec;
  for (const auto& r : rev.removals) {
    const auto key = std::tie(r.from, r.to);
    auto it = std::lower_bound(out.transitions.begin(), out.transitions.end(), key,
                               [](const SpecTransition& t, const auto& k) {
                                 return std::tie(t.from, t.to) < k;
                               });
    it->label.erase(r.symbol);
  }
  return out;
}

bool is_relaxation(const SpecAutomaton& base, const SpecAutomaton& relaxed) {
  if (base.states != relaxed.states || base.initial != relaxed.initial ||
      base.accepting != relaxed.accepting || base.preference != relaxed.preference) {
    return false;
  }
  if (base.transitions.size() != relaxed.transitions.size()) return false;
  for (std::size_t i = 0; i < base.transitions.size(); ++i) {
    const auto& a = base.transitions[i];
    const auto& b = relaxed.transitions[i];
    if (a.from != b.from || a.to != b.to) return false;
    if (!std::includes(a.label.begin(), a.label.end(), b.label.begin(), b.label.end()))
      return false;
  }
  return true;
}

double sum_cost(const SpecAutomaton& spec, const Revision& rev) {
  double total = 0.0;
  for (const auto& r : rev.removals) total += theta(spec, r);
  return total;
}

double max_cost(const SpecAutomaton& spec, const Revision& rev) {
  double best = 0.0;
  for (const auto& r : rev.removals) best = std::max(best, theta(spec, r));
  return best;
}

}  // namespace specrev
