#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "specrev/automata.hpp"
#include "specrev/product.hpp"
#include "specrev/search.hpp"

namespace specrev {

struct LoadedInstance {
  SystemFsm system;
  SpecAutomaton spec;
  nlohmann::ordered_json meta;  // passed through untouched
};

/// Parses and validates one instance document. Errors name the offending
/// field, e.g. "spec.transitions[3].label".
LoadedInstance parse_instance(const nlohmann::json& doc);
LoadedInstance load_instance(const std::filesystem::path& path);

/// Serializes an instance. Preferences are written per occurrence unless a
/// complete per-symbol table is supplied.
nlohmann::ordered_json instance_to_json(
    const SystemFsm& system, const SpecAutomaton& spec,
    const nlohmann::ordered_json* meta = nullptr,
    const std::map<std::string, double>* theta_per_symbol = nullptr);

/// Reads a revision document ({"removals": [{symbol, from, to}, ...]}, as
/// emitted by the revise command) and checks it against the specification.
Revision parse_revision(const nlohmann::json& doc, const SpecAutomaton& spec);
Revision load_revision(const std::filesystem::path& path, const SpecAutomaton& spec);

nlohmann::ordered_json run_to_json(const AcceptingRun& run, const RevisionGraph& graph);

/// Stable machine-readable form of a revision search outcome.
nlohmann::ordered_json outcome_to_json(const RevisionOutcome& outcome, const RevisionGraph& graph,
                                       const SpecAutomaton& spec, Objective objective);

std::string outcome_to_text(const RevisionOutcome& outcome, const RevisionGraph& graph,
                            const SpecAutomaton& spec, Objective objective);

}  // namespace specrev
