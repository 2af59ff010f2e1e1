#include "blockdet/glushkov.hpp"

#include "blockdet/error.hpp"

namespace blockdet {

State glushkov_state_name(const Position& position) {
    return position.block.letters() + "_" + std::to_string(position.index);
}

GlushkovAutomaton glushkov(const Regex& expression) {
    if (expression.kind() == RegexKind::Empty) {
        throw PreconditionError("the Glushkov automaton of 'empty' is not defined");
    }
    GlushkovAutomaton result{BlockAutomaton{}, mark(expression), {}};
    const PositionTable table = positions(result.marked);

    BlockAutomaton& a = result.automaton;
    a.add_initial(kGlushkovInitial);
    if (table.nullable) {
        a.add_final(kGlushkovInitial);
    }
    std::map<int, State> names;
    for (const Position& p : result.marked.positions) {
        State name = glushkov_state_name(p);
        a.add_state(name);
        a.add_symbol(p.block);
        result.position_of_state.emplace(name, p);
        names.emplace(p.index, std::move(name));
    }
    for (int x : table.last) {
        a.add_final(names.at(x));
    }
    for (int y : table.first) {
        a.add_transition(kGlushkovInitial, result.marked.block_at(y), names.at(y));
    }
    for (const auto& [x, targets] : table.follow) {
        for (int y : targets) {
            a.add_transition(names.at(x), result.marked.block_at(y), names.at(y));
        }
    }
    return result;
}

bool check_glushkov_shape(const BlockAutomaton& a) {
    if (a.initials().size() != 1) {
        return false;
    }
    const State& start = *a.initials().begin();
    std::map<State, Block> entering;
    for (const Transition& t : a.transitions()) {
        if (t.to == start) {
            return false;
        }
        auto [it, inserted] = entering.emplace(t.to, t.label);
        if (!inserted && it->second != t.label) {
            return false;
        }
    }
    return true;
}

BlockAutomaton alphabetic_image(const BlockAutomaton& a, const std::map<Block, Block>& injection) {
    std::set<Block> used = a.alphabet();
    for (const Transition& t : a.transitions()) {
        used.insert(t.label);
    }
    std::map<Block, Block> preimage;
    for (const Block& b : used) {
        auto it = injection.find(b);
        if (it == injection.end()) {
            throw PreconditionError("alphabetic image: no image for symbol " + b.text());
        }
        auto [pre, inserted] = preimage.emplace(it->second, b);
        if (!inserted) {
            throw PreconditionError("alphabetic image: " + pre->second.text() + " and " + b.text() +
                                    " share the image " + it->second.text());
        }
    }

    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(injection.at(b));
    }
    for (const State& q : a.states()) {
        out.add_state(q);
    }
    out.set_initials(a.initials());
    out.set_finals(a.finals());
    for (const Transition& t : a.transitions()) {
        out.add_transition(t.from, injection.at(t.label), t.to);
    }
    return out;
}

} // namespace blockdet
