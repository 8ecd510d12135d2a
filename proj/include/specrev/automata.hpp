#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "specrev/error.hpp"

namespace specrev {

/// One removable symbol occurrence: symbol `symbol` on the automaton
/// transition (from -> to). Also the element type of revision sets.
struct Removal {
  std::string symbol;
  std::string from;
  std::string to;

  auto operator<=>(const Removal&) const = default;
};

/// A set of symbol occurrences to delete from transition labels.
struct Revision {
  std::set<Removal> removals;

  bool operator==(const Revision&) const = default;
};

/// Environment abstraction: a finite state machine whose states carry the
/// symbols that hold there. All vectors are sorted and duplicate free; state
/// ids are compared lexicographically, and that order is the canonical order
/// used for every deterministic tie-break downstream.
struct SystemFsm {
  std::vector<std::string> states;
  std::vector<std::string> initial;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::set<std::string>> labels;

  bool operator==(const SystemFsm&) const = default;
};

struct SpecTransition {
  std::string from;
  std::string to;
  std::set<std::string> label;

  bool operator==(const SpecTransition&) const = default;
};

/// Specification automaton with per-occurrence preference levels. At most one
/// transition per ordered state pair; transitions are sorted by (from, to).
/// `preference` must cover every symbol occurring on every transition label;
/// values are finite and >= 0. An empty transition label is satisfied by every
/// system state.
struct SpecAutomaton {
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> accepting;
  std::vector<SpecTransition> transitions;
  std::map<Removal, double> preference;

  bool operator==(const SpecAutomaton&) const = default;
};

/// Throws on any structural violation; reachability of every state from the
/// initial set is required.
void validate_system(const SystemFsm& fsm);

void validate_spec(const SpecAutomaton& spec);

/// nullptr when the ordered pair has no transition.
const SpecTransition* find_transition(const SpecAutomaton& spec, const std::string& from,
                                      const std::string& to);

/// Preference level of one occurrence; throws MissingPreference.
double theta(const SpecAutomaton& spec, const Removal& removal);

/// Every removal must name an existing transition and a symbol currently on
/// its label; throws InvalidRemoval otherwise.
void validate_revision(const SpecAutomaton& spec, const Revision& rev);

/// Returns a copy of `spec` with the removed symbols deleted from their
/// transition labels. States, initial, accepting and preferences are kept; a
/// label that becomes empty keeps its transition.
SpecAutomaton apply_revision(const SpecAutomaton& spec, const Revision& rev);

/// True iff `relaxed` has the same states, initial, accepting and preferences
/// as `base`, the same transition pairs, and every label included in the
/// corresponding label of `base`.
bool is_relaxation(const SpecAutomaton& base, const SpecAutomaton& relaxed);

/// Sum of preference levels over the revision (0 for the empty revision).
double sum_cost(const SpecAutomaton& spec, const Revision& rev);

/// Largest preference level in the revision (0 for the empty revision).
double max_cost(const SpecAutomaton& spec, const Revision& rev);

}  // namespace specrev
