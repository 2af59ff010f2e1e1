#pragma once

#include <string>

#include <json.hpp>

#include "blockdet/automaton.hpp"
#include "blockdet/bkw.hpp"
#include "blockdet/determinism.hpp"
#include "blockdet/glushkov.hpp"
#include "blockdet/syntax.hpp"
#include "blockdet/transform.hpp"
#include "blockdet/witnesses.hpp"

namespace blockdet {

using Json = nlohmann::ordered_json;

/// Node kinds "empty", "epsilon", "literal", "union", "concat", "star". Literals
/// carry "block" (letters, no brackets) and "index" when marked.
Json to_json(const Regex& regex);
Regex regex_from_json(const Json& json);

/// {"alphabet", "states", "initials", "finals", "transitions": [{"from", "label", "to"}]}
Json to_json(const BlockAutomaton& a);
BlockAutomaton automaton_from_json(const Json& json);

/// The automaton fields plus "positions" (state -> index and block) and the
/// Null/First/Last/Follow "table".
Json to_json(const GlushkovAutomaton& g);
Json to_json(const PositionTable& table);

Json to_json(const KCheck& check);
Json to_json(const DeterminismReport& report);
Json to_json(const OracleResult& result);

Json to_json(const OrbitDecomposition& decomposition);
Json to_json(const OrbitViolation& violation);
Json to_json(const BkwNode& node);
Json to_json(const BkwTrace& trace);
Json to_json(const BlockCertificate& certificate);

Json to_json(const ExpandedSymbol& symbol);
Json to_json(const ChiExpression& chi_expression);

Json to_json(const WitnessReport& report);

/// Graphviz digraph: doubled circles for finals, a source-less arrow per initial.
std::string to_dot(const BlockAutomaton& a, const std::string& name = "A");

/// Line-oriented listing: initials, finals, one transition per line.
std::string to_text(const BlockAutomaton& a);
/// Indented BKW recursion tree.
std::string to_text(const BkwTrace& trace);

} // namespace blockdet
