#include "blockdet/serialize.hpp"

#include <sstream>

#include "blockdet/error.hpp"

namespace blockdet {

namespace {

const char* kind_name(RegexKind kind) {
    switch (kind) {
    case RegexKind::Empty:
        return "empty";
    case RegexKind::Epsilon:
        return "epsilon";
    case RegexKind::Literal:
        return "literal";
    case RegexKind::Union:
        return "union";
    case RegexKind::Concat:
        return "concat";
    case RegexKind::Star:
        return "star";
    }
    return "?";
}

const Json& field(const Json& json, const char* key) {
    if (!json.is_object() || !json.contains(key)) {
        throw Error(std::string("JSON: missing field \"") + key + "\"");
    }
    return json.at(key);
}

std::string string_field(const Json& json, const char* key) {
    const Json& value = field(json, key);
    if (!value.is_string()) {
        throw Error(std::string("JSON: field \"") + key + "\" must be a string");
    }
    return value.get<std::string>();
}

Json transition_json(const Transition& t) {
    return Json{{"from", t.from}, {"label", t.label.letters()}, {"to", t.to}};
}

Json violations_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const Violation& v : violations) {
        Json item{{"first", transition_json(v.first)}, {"second", transition_json(v.second)}};
        if (v.witness) {
            item["witness"] = *v.witness;
        }
        out.push_back(std::move(item));
    }
    return out;
}

Json blocks_json(const std::set<Block>& blocks) {
    Json out = Json::array();
    for (const Block& b : blocks) {
        out.push_back(b.letters());
    }
    return out;
}

} // namespace

Json to_json(const Regex& regex) {
    Json out{{"kind", kind_name(regex.kind())}};
    switch (regex.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        break;
    case RegexKind::Literal:
        out["block"] = regex.block().letters();
        if (regex.index() != 0) {
            out["index"] = regex.index();
        }
        break;
    case RegexKind::Union:
    case RegexKind::Concat:
        out["left"] = to_json(regex.left());
        out["right"] = to_json(regex.right());
        break;
    case RegexKind::Star:
        out["child"] = to_json(regex.child());
        break;
    }
    return out;
}

Regex regex_from_json(const Json& json) {
    const std::string kind = string_field(json, "kind");
    if (kind == "empty") {
        return Regex::empty();
    }
    if (kind == "epsilon") {
        return Regex::epsilon();
    }
    if (kind == "literal") {
        const int index = json.contains("index") ? json.at("index").get<int>() : 0;
        return Regex::literal(Block(string_field(json, "block")), index);
    }
    if (kind == "union") {
        return Regex::alternation(regex_from_json(field(json, "left")), regex_from_json(field(json, "right")));
    }
    if (kind == "concat") {
        return Regex::concatenation(regex_from_json(field(json, "left")), regex_from_json(field(json, "right")));
    }
    if (kind == "star") {
        return Regex::star(regex_from_json(field(json, "child")));
    }
    throw Error("JSON: unknown expression kind \"" + kind + "\"");
}

Json to_json(const BlockAutomaton& a) {
    Json transitions = Json::array();
    for (const Transition& t : a.transitions()) {
        transitions.push_back(transition_json(t));
    }
    return Json{{"alphabet", blocks_json(a.alphabet())},
                {"states", a.states()},
                {"initials", a.initials()},
                {"finals", a.finals()},
                {"transitions", std::move(transitions)}};
}

BlockAutomaton automaton_from_json(const Json& json) {
    BlockAutomaton a;
    if (json.contains("alphabet")) {
        for (const Json& b : json.at("alphabet")) {
            a.add_symbol(Block(b.get<std::string>()));
        }
    }
    for (const Json& q : field(json, "states")) {
        a.add_state(q.get<std::string>());
    }
    for (const char* key : {"initials", "finals"}) {
        if (!json.contains(key)) {
            continue;
        }
        for (const Json& q : json.at(key)) {
            const State state = q.get<std::string>();
            if (!a.has_state(state)) {
                throw Error("JSON: " + std::string(key) + " lists unknown state \"" + state + "\"");
            }
            std::string(key) == "initials" ? a.add_initial(state) : a.add_final(state);
        }
    }
    if (json.contains("transitions")) {
        for (const Json& t : json.at("transitions")) {
            const State from = string_field(t, "from");
            const State to = string_field(t, "to");
            if (!a.has_state(from) || !a.has_state(to)) {
                throw Error("JSON: transition uses an undeclared state");
            }
            a.add_transition(from, Block(string_field(t, "label")), to);
        }
    }
    return a;
}

Json to_json(const PositionTable& table) {
    Json follow = Json::object();
    for (const auto& [x, targets] : table.follow) {
        follow[std::to_string(x)] = targets;
    }
    return Json{{"nullable", table.nullable}, {"first", table.first}, {"last", table.last}, {"follow", follow}};
}

Json to_json(const GlushkovAutomaton& g) {
    Json out = to_json(g.automaton);
    Json positions = Json::array();
    for (const auto& [state, position] : g.position_of_state) {
        positions.push_back(Json{{"state", state}, {"index", position.index}, {"block", position.block.letters()}});
    }
    out["marked"] = to_marked_string(g.marked.ast);
    out["positions"] = std::move(positions);
    out["table"] = to_json(blockdet::positions(g.marked));
    return out;
}

Json to_json(const KCheck& check) {
    Json out{{"k", check.k}, {"verdict", check.verdict}, {"violations", violations_json(check.violations)}};
    if (!check.reason.empty()) {
        out["reason"] = check.reason;
    }
    return out;
}

Json to_json(const DeterminismReport& report) {
    Json out{{"deterministic", report.deterministic}};
    if (report.k_block) {
        out["k_block"] = to_json(*report.k_block);
    }
    if (report.k_lookahead) {
        out["k_lookahead"] = to_json(*report.k_lookahead);
    }
    if (report.min_lookahead) {
        out["min_lookahead"] = *report.min_lookahead ? Json(**report.min_lookahead) : Json("none");
    }
    return out;
}

Json to_json(const OracleResult& result) {
    Json out{{"holds", result.holds}};
    if (result.witness) {
        const OracleWitness& w = *result.witness;
        out["witness"] = Json{{"prefix", w.prefix},
                              {"first_position", w.first_position},
                              {"second_position", w.second_position},
                              {"first_word", w.first_word},
                              {"second_word", w.second_word},
                              {"reason", w.reason}};
    }
    return out;
}

Json to_json(const OrbitDecomposition& decomposition) {
    Json out = Json::array();
    for (const Orbit& orbit : decomposition.orbits) {
        out.push_back(Json{{"states", orbit.states},
                           {"trivial", orbit.trivial},
                           {"in_gates", orbit.in_gates},
                           {"out_gates", orbit.out_gates}});
    }
    return out;
}

Json to_json(const OrbitViolation& violation) {
    Json out{{"orbit", violation.orbit}, {"p", violation.p}, {"q", violation.q}};
    out["missing"] = violation.missing ? transition_json(*violation.missing) : Json(nullptr);
    out["message"] = violation.describe();
    return out;
}

Json to_json(const BkwNode& node) {
    Json out{{"fingerprint", node.fingerprint}};
    out["origin"] = node.origin ? Json(*node.origin) : Json(nullptr);
    out["states"] = node.state_count;
    out["S"] = blocks_json(node.consistent);
    out["orbitProperty"] = node.orbit_property;
    if (node.violation) {
        out["violation"] = to_json(*node.violation);
    }
    out["failure"] = node.failure ? Json(to_string(*node.failure)) : Json(nullptr);
    Json children = Json::array();
    for (const BkwNode& child : node.children) {
        children.push_back(to_json(child));
    }
    out["children"] = std::move(children);
    return out;
}

Json to_json(const BkwTrace& trace) {
    return Json{{"verdict", trace.verdict}, {"trace", to_json(trace.root)}};
}

Json to_json(const BlockCertificate& certificate) {
    Json abstraction = Json::object();
    for (const auto& [block, symbol] : certificate.abstraction) {
        abstraction[block.letters()] = symbol.letters();
    }
    Json out{{"verdict", certificate.verdict},
             {"k_block", to_json(certificate.block_check)},
             {"abstraction", abstraction},
             {"abstraction_deterministic", certificate.abstraction_deterministic}};
    out["bkw"] = certificate.bkw ? to_json(*certificate.bkw) : Json(nullptr);
    if (!certificate.reason.empty()) {
        out["reason"] = certificate.reason;
    }
    return out;
}

Json to_json(const ExpandedSymbol& symbol) {
    return Json{{"text", symbol.text()},
                {"letter", std::string(1, symbol.letter)},
                {"block_index", symbol.block_index},
                {"offset", symbol.offset},
                {"block_length", symbol.block_length}};
}

Json to_json(const ChiExpression& chi_expression) {
    Json omega = Json::array();
    for (const ExpandedSymbol& x : chi_expression.omega) {
        omega.push_back(to_json(x));
    }
    return Json{{"expression", chi_expression.to_string()},
                {"dropped", to_string(chi_expression.dropped())},
                {"omega", std::move(omega)},
                {"ast", to_json(chi_expression.marked.ast)}};
}

Json to_json(const WitnessReport& report) {
    Json claims = Json::array();
    for (const Claim& c : report.claims) {
        Json item{{"claim", c.name}, {"holds", c.holds}};
        if (!c.detail.empty()) {
            item["detail"] = c.detail;
        }
        claims.push_back(std::move(item));
    }
    return Json{{"family", to_string(report.spec.family)},
                {"parameter", report.spec.parameter},
                {"all_hold", report.all_hold()},
                {"claims", std::move(claims)}};
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out + "\"";
}

} // namespace

std::string to_dot(const BlockAutomaton& a, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
    std::size_t n = 0;
    for (const State& q : a.initials()) {
        out << "  __init" << n << " [shape=point, style=invis];\n";
        out << "  __init" << n++ << " -> " << quoted(q) << ";\n";
    }
    for (const State& q : a.states()) {
        out << "  " << quoted(q) << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (const Transition& t : a.transitions()) {
        out << "  " << quoted(t.from) << " -> " << quoted(t.to) << " [label=" << quoted(t.label.letters()) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_text(const BlockAutomaton& a) {
    std::ostringstream out;
    auto list = [&](const char* title, const std::set<State>& states) {
        out << title << ':';
        for (const State& q : states) {
            out << ' ' << q;
        }
        out << '\n';
    };
    list("states", a.states());
    list("initials", a.initials());
    list("finals", a.finals());
    for (const Transition& t : a.transitions()) {
        out << t.from << " -" << t.label.text() << "-> " << t.to << '\n';
    }
    return out.str();
}

namespace {

void render(const BkwNode& node, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    out << (node.origin ? "orbit of " + *node.origin : std::string("automaton")) << " [" << node.state_count
        << " states] S={";
    bool first = true;
    for (const Block& b : node.consistent) {
        out << (first ? "" : ",") << b.text();
        first = false;
    }
    out << "}";
    if (node.failure) {
        out << " FAIL " << to_string(*node.failure);
        if (node.violation) {
            out << ": " << node.violation->describe();
        }
    } else {
        out << " ok";
    }
    out << '\n';
    for (const BkwNode& child : node.children) {
        render(child, depth + 1, out);
    }
}

} // namespace

std::string to_text(const BkwTrace& trace) {
    std::ostringstream out;
    out << (trace.verdict ? "pass" : "fail") << '\n';
    render(trace.root, 1, out);
    return out.str();
}

} // namespace blockdet
