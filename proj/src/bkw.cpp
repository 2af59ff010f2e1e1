#include "blockdet/bkw.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>

#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"

namespace blockdet {

namespace {

/// Tarjan's algorithm; components come out in reverse topological order.
class SccFinder {
public:
    explicit SccFinder(const BlockAutomaton& a) : a_(a) {
        for (const State& q : a.states()) {
            if (!index_.contains(q)) {
                visit(q);
            }
        }
    }

    std::vector<std::set<State>> components;

private:
    void visit(const State& q) {
        const int id = counter_++;
        index_[q] = id;
        low_[q] = id;
        stack_.push_back(q);
        on_stack_.insert(q);
        for (const Transition& t : a_.outgoing(q)) {
            if (!index_.contains(t.to)) {
                visit(t.to);
                low_[q] = std::min(low_[q], low_[t.to]);
            } else if (on_stack_.contains(t.to)) {
                low_[q] = std::min(low_[q], index_[t.to]);
            }
        }
        if (low_[q] == id) {
            std::set<State> component;
            State top;
            do {
                top = stack_.back();
                stack_.pop_back();
                on_stack_.erase(top);
                component.insert(top);
            } while (top != q);
            components.push_back(std::move(component));
        }
    }

    const BlockAutomaton& a_;
    int counter_ = 0;
    std::map<State, int> index_;
    std::map<State, int> low_;
    std::vector<State> stack_;
    std::set<State> on_stack_;
};

std::string fingerprint(const BlockAutomaton& a) {
    std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : canonical_form(a)) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

std::string state_list(const std::set<State>& states) {
    std::string text = "{";
    for (const State& q : states) {
        text += (text.size() > 1 ? "," : "") + q;
    }
    return text + "}";
}

} // namespace

OrbitDecomposition orbit_decomposition(const BlockAutomaton& a) {
    SccFinder finder(a);
    std::sort(finder.components.begin(), finder.components.end(),
              [](const auto& x, const auto& y) { return *x.begin() < *y.begin(); });

    OrbitDecomposition result;
    for (auto& component : finder.components) {
        const std::size_t id = result.orbits.size();
        for (const State& q : component) {
            result.orbit_of.emplace(q, id);
        }
        result.orbits.push_back(Orbit{std::move(component), false, {}, {}});
    }
    for (Orbit& orbit : result.orbits) {
        if (orbit.states.size() == 1) {
            const State& q = *orbit.states.begin();
            const auto out = a.outgoing(q);
            orbit.trivial = std::none_of(out.begin(), out.end(), [&](const Transition& t) { return t.to == q; });
        }
    }
    for (const State& q : a.initials()) {
        result.orbits[result.orbit_of.at(q)].in_gates.insert(q);
    }
    for (const State& q : a.finals()) {
        result.orbits[result.orbit_of.at(q)].out_gates.insert(q);
    }
    for (const Transition& t : a.transitions()) {
        const std::size_t from = result.orbit_of.at(t.from);
        const std::size_t to = result.orbit_of.at(t.to);
        if (from != to) {
            result.orbits[from].out_gates.insert(t.from);
            result.orbits[to].in_gates.insert(t.to);
        }
    }
    return result;
}

std::string OrbitViolation::describe() const {
    std::string text = "orbit " + state_list(orbit) + ": ";
    if (!missing) {
        return text + "out-gate " + p + " is final but out-gate " + q + " is not";
    }
    return text + "out-gate " + p + " has " + missing->label.text() + "->" + missing->to + " but out-gate " + q +
           " does not";
}

OrbitPropertyResult orbit_property(const BlockAutomaton& a) {
    const OrbitDecomposition decomposition = orbit_decomposition(a);
    for (const Orbit& orbit : decomposition.orbits) {
        for (const State& p : orbit.out_gates) {
            for (const State& q : orbit.out_gates) {
                if (p == q) {
                    continue;
                }
                if (a.is_final(p) && !a.is_final(q)) {
                    return {false, OrbitViolation{orbit.states, p, q, std::nullopt}};
                }
                for (const Transition& t : a.outgoing(p)) {
                    if (!orbit.states.contains(t.to) && !a.transitions().contains(Transition{q, t.label, t.to})) {
                        return {false, OrbitViolation{orbit.states, p, q, t}};
                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

std::set<Block> consistent_symbols(const BlockAutomaton& a) {
    std::set<Block> result;
    if (a.finals().empty()) {
        return result;
    }
    std::set<Block> labels;
    for (const Transition& t : a.transitions()) {
        labels.insert(t.label);
    }
    for (const Block& symbol : labels) {
        std::optional<std::set<State>> common;
        for (const State& f : a.finals()) {
            std::set<State> targets;
            for (const Transition& t : a.outgoing(f)) {
                if (t.label == symbol) {
                    targets.insert(t.to);
                }
            }
            if (!common) {
                common = std::move(targets);
            } else {
                std::set<State> both;
                std::set_intersection(common->begin(), common->end(), targets.begin(), targets.end(),
                                      std::inserter(both, both.begin()));
                common = std::move(both);
            }
            if (common->empty()) {
                break;
            }
        }
        if (!common->empty()) {
            result.insert(symbol);
        }
    }
    return result;
}

BlockAutomaton s_cut(const BlockAutomaton& a, const std::set<Block>& cut) {
    const std::set<Block> consistent = consistent_symbols(a);
    for (const Block& symbol : cut) {
        if (!consistent.contains(symbol)) {
            throw PreconditionError("s_cut: symbol " + symbol.text() + " is not consistent");
        }
    }
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    for (const State& q : a.states()) {
        out.add_state(q);
    }
    out.set_initials(a.initials());
    out.set_finals(a.finals());
    for (const Transition& t : a.transitions()) {
        if (!(a.is_final(t.from) && cut.contains(t.label))) {
            out.add_transition(t);
        }
    }
    return out;
}

BlockAutomaton orbit_automaton(const BlockAutomaton& a, const State& q) {
    if (!a.has_state(q)) {
        throw PreconditionError("orbit_automaton: unknown state " + q);
    }
    const OrbitDecomposition decomposition = orbit_decomposition(a);
    const Orbit& orbit = decomposition.orbit(q);
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    for (const State& p : orbit.states) {
        out.add_state(p);
    }
    out.add_initial(q);
    out.set_finals(orbit.out_gates);
    for (const Transition& t : a.transitions()) {
        if (orbit.states.contains(t.from) && orbit.states.contains(t.to)) {
            out.add_transition(t);
        }
    }
    return out;
}

std::string to_string(BkwFailure failure) {
    switch (failure) {
    case BkwFailure::OrbitProperty:
        return "orbit-property";
    case BkwFailure::NoConsistentSymbol:
        return "no-consistent-symbol";
    case BkwFailure::Recursion:
        return "recursion";
    }
    return "unknown";
}

namespace {

BkwNode bkw_node(const BlockAutomaton& a, std::optional<State> origin) {
    BkwNode node;
    node.fingerprint = fingerprint(a);
    node.origin = std::move(origin);
    node.state_count = a.states().size();
    if (a.states().empty()) {
        return node;
    }
    node.consistent = consistent_symbols(a);

    const OrbitDecomposition whole = orbit_decomposition(a);
    if (whole.orbits.size() == 1 && !whole.orbits.front().trivial && node.consistent.empty()) {
        node.failure = BkwFailure::NoConsistentSymbol;
        return node;
    }

    const BlockAutomaton cut = s_cut(a, node.consistent);
    const OrbitPropertyResult property = orbit_property(cut);
    node.orbit_property = property.holds;
    if (!property) {
        node.violation = property.violation;
        node.failure = BkwFailure::OrbitProperty;
        return node;
    }

    const OrbitDecomposition parts = orbit_decomposition(cut);
    for (const Orbit& orbit : parts.orbits) {
        if (orbit.trivial) {
            continue;
        }
        for (const State& q : orbit.states) {
            BkwNode child = bkw_node(minimize(orbit_automaton(cut, q)), q);
            const bool failed = child.failure.has_value();
            node.children.push_back(std::move(child));
            if (failed) {
                node.failure = BkwFailure::Recursion;
                return node;
            }
        }
    }
    return node;
}

} // namespace

BkwTrace bkw_test(const BlockAutomaton& a) {
    if (!is_deterministic(a) && !a.states().empty()) {
        throw PreconditionError("the BKW test requires a deterministic automaton");
    }
    BkwTrace trace;
    trace.root = bkw_node(trim(a), std::nullopt);
    trace.verdict = !trace.root.failure.has_value();
    return trace;
}

bool is_one_unambiguous(const BlockAutomaton& a) {
    return bkw_test(minimal_dfa(a)).verdict;
}

bool is_one_unambiguous(const Regex& expression) {
    if (expression.kind() == RegexKind::Empty) {
        return true;
    }
    return is_one_unambiguous(glushkov(expression).automaton);
}

BlockCertificate certify_k_block_language(const BlockAutomaton& k_automaton, int k) {
    static const std::string kSymbols = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

    BlockCertificate result;
    result.block_check = is_k_block_deterministic(k_automaton, k);
    if (!result.block_check) {
        result.reason = "not " + std::to_string(k) + "-block deterministic";
        if (!result.block_check.reason.empty()) {
            result.reason += ": " + result.block_check.reason;
        }
        return result;
    }

    std::set<Block> blocks = k_automaton.alphabet();
    for (const Transition& t : k_automaton.transitions()) {
        blocks.insert(t.label);
    }
    if (blocks.size() > kSymbols.size()) {
        throw PreconditionError("block abstraction supports at most " + std::to_string(kSymbols.size()) +
                                " distinct blocks");
    }
    std::size_t next = 0;
    for (const Block& b : blocks) {
        result.abstraction.emplace(b, Block(kSymbols[next++]));
    }
    const BlockAutomaton abstracted = trim(alphabetic_image(k_automaton, result.abstraction));
    result.abstraction_deterministic = is_deterministic(abstracted) || abstracted.states().empty();
    if (!result.abstraction_deterministic) {
        result.reason = "block abstraction is not deterministic";
        return result;
    }
    result.bkw = bkw_test(abstracted);
    result.verdict = result.bkw->verdict;
    if (!result.verdict) {
        result.reason = "block abstraction fails the BKW test";
    }
    return result;
}

} // namespace blockdet
