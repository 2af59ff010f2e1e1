#include "blockdet/transform.hpp"

#include <functional>
#include <map>

#include "blockdet/error.hpp"

namespace blockdet {

bool eliminable(const BlockAutomaton& a, const State& q) {
    if (!a.has_state(q)) {
        throw PreconditionError("eliminable: unknown state " + q);
    }
    if (a.is_initial(q) || a.is_final(q)) {
        return false;
    }
    for (const Transition& t : a.outgoing(q)) {
        if (t.to == q) {
            return false;
        }
    }
    return true;
}

BlockAutomaton eliminate(const BlockAutomaton& a, const State& q) {
    if (!eliminable(a, q)) {
        throw PreconditionError("state " + q + " cannot be eliminated (initial, final or self-looping)");
    }
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    for (const State& p : a.states()) {
        if (p != q) {
            out.add_state(p);
        }
    }
    out.set_initials(a.initials());
    out.set_finals(a.finals());
    for (const Transition& t : a.transitions()) {
        if (t.from != q && t.to != q) {
            out.add_transition(t);
        }
    }
    const std::vector<Transition> into = a.incoming(q);
    const std::vector<Transition> from = a.outgoing(q);
    for (const Transition& u : into) {
        for (const Transition& v : from) {
            out.add_transition(u.from, u.label + v.label, v.to);
        }
    }
    return out;
}

BlockAutomaton eliminate_set(const BlockAutomaton& a, const std::set<State>& states) {
    for (const State& q : states) {
        if (!eliminable(a, q)) {
            throw PreconditionError("state " + q + " cannot be eliminated (initial, final or self-looping)");
        }
    }
    // Acyclicity of the induced subgraph by depth-first search.
    std::map<State, int> color;  // 0 unseen, 1 on the current path, 2 done
    std::function<void(const State&)> visit = [&](const State& q) {
        color[q] = 1;
        for (const Transition& t : a.outgoing(q)) {
            if (!states.contains(t.to)) {
                continue;
            }
            if (color[t.to] == 1) {
                throw PreconditionError("states to eliminate induce a cycle through " + t.to);
            }
            if (color[t.to] == 0) {
                visit(t.to);
            }
        }
        color[q] = 2;
    };
    for (const State& q : states) {
        if (color[q] == 0) {
            visit(q);
        }
    }

    BlockAutomaton out = a;
    for (const State& q : states) {
        out = eliminate(out, q);
    }
    return out;
}

std::string ExpandedSymbol::text() const {
    return std::string(1, letter) + "@" + std::to_string(block_index) + "." + std::to_string(offset);
}

std::vector<ExpandedSymbol> phi(const Position& position) {
    std::vector<ExpandedSymbol> word;
    const std::string& letters = position.block.letters();
    const int length = static_cast<int>(letters.size());
    for (int j = 0; j < length; ++j) {
        word.push_back(ExpandedSymbol{letters[static_cast<std::size_t>(j)], position.index, j + 1, length});
    }
    return word;
}

Position phi_inverse(const std::vector<ExpandedSymbol>& word) {
    if (word.empty()) {
        throw PreconditionError("phi_inverse: empty word");
    }
    const int index = word.front().block_index;
    const int length = word.front().block_length;
    if (static_cast<int>(word.size()) != length) {
        throw PreconditionError("phi_inverse: word does not cover exactly one block");
    }
    std::string letters;
    for (std::size_t j = 0; j < word.size(); ++j) {
        const ExpandedSymbol& x = word[j];
        if (x.block_index != index || x.block_length != length || x.offset != static_cast<int>(j) + 1) {
            throw PreconditionError("phi_inverse: " + x.text() + " is out of place");
        }
        letters.push_back(x.letter);
    }
    return Position{index, Block(letters)};
}

std::string ChiExpression::to_string() const {
    return blockdet::to_string(
        marked.ast, [this](const Regex& literal) { return symbol(literal.index()).text(); }, " ");
}

ChiExpression chi(const MarkedExpression& block_marked) {
    std::vector<ExpandedSymbol> omega;
    std::vector<Position> positions;
    int next = 0;
    std::function<Regex(const Regex&)> rewrite = [&](const Regex& e) -> Regex {
        switch (e.kind()) {
        case RegexKind::Empty:
        case RegexKind::Epsilon:
            return e;
        case RegexKind::Literal: {
            std::vector<Regex> letters;
            for (const ExpandedSymbol& x : phi(Position{e.index(), e.block()})) {
                ++next;
                omega.push_back(x);
                positions.push_back(Position{next, Block(x.letter)});
                letters.push_back(Regex::literal(Block(x.letter), next));
            }
            return concat_all(letters);
        }
        case RegexKind::Union: {
            Regex left = rewrite(e.left());
            return Regex::alternation(left, rewrite(e.right()));
        }
        case RegexKind::Concat: {
            Regex left = rewrite(e.left());
            return Regex::concatenation(left, rewrite(e.right()));
        }
        case RegexKind::Star:
            return Regex::star(rewrite(e.child()));
        }
        throw Error("chi: unknown node kind");
    };
    Regex ast = rewrite(block_marked.ast);
    return ChiExpression{MarkedExpression{std::move(ast), std::move(positions)}, std::move(omega)};
}

bool is_block_complete(const std::vector<ExpandedSymbol>& word) {
    if (word.empty()) {
        return true;
    }
    if (word.front().offset != 1 || word.back().offset != word.back().block_length) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const ExpandedSymbol& x = word[i];
        const ExpandedSymbol& y = word[i + 1];
        if (y.offset == x.offset + 1) {
            if (y.block_index != x.block_index) {
                return false;
            }
        } else if (x.offset != x.block_length || y.offset != 1) {
            return false;
        }
    }
    return true;
}

} // namespace blockdet
