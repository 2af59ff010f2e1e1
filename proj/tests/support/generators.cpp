#include "generators.hpp"

namespace blockdet::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Block random_block(Rng& rng, int max_width, const std::string& letters) {
    std::string text;
    const int width = uniform(rng, 1, max_width);
    for (int i = 0; i < width; ++i) {
        text.push_back(letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))]);
    }
    return Block(text);
}

Regex with_exactly(Rng& rng, int positions, const ExpressionShape& shape) {
    Regex e = Regex::epsilon();
    if (positions == 1) {
        e = Regex::literal(random_block(rng, shape.max_width, shape.letters));
    } else {
        const int left = uniform(rng, 1, positions - 1);
        Regex lhs = with_exactly(rng, left, shape);
        Regex rhs = with_exactly(rng, positions - left, shape);
        e = uniform(rng, 0, 1) == 0 ? Regex::concatenation(lhs, rhs) : Regex::alternation(lhs, rhs);
    }
    switch (uniform(rng, 0, 5)) {
    case 0:
        return Regex::star(e);
    case 1:
        return Regex::alternation(e, Regex::epsilon());
    default:
        return e;
    }
}

} // namespace

Regex random_expression(Rng& rng, const ExpressionShape& shape) {
    return with_exactly(rng, uniform(rng, 1, shape.max_positions), shape);
}

BlockAutomaton random_automaton(Rng& rng, const AutomatonShape& shape) {
    BlockAutomaton a;
    for (int q = 0; q < shape.states; ++q) {
        a.add_state(std::to_string(q));
    }
    a.add_initial("0");
    a.add_final(std::to_string(uniform(rng, 0, shape.states - 1)));
    for (int q = 0; q < shape.states; ++q) {
        if (uniform(rng, 0, 2) == 0) {
            a.add_final(std::to_string(q));
        }
    }
    for (int i = 0; i < shape.transitions; ++i) {
        const State from = std::to_string(uniform(rng, 0, shape.states - 1));
        const State to = std::to_string(uniform(rng, 0, shape.states - 1));
        const Block label = random_block(rng, shape.deterministic ? 1 : shape.max_width, shape.letters);
        bool taken = false;
        if (shape.deterministic) {
            for (const Transition& t : a.outgoing(from)) {
                taken = taken || t.label == label;
            }
        }
        if (!taken) {
            a.add_transition(from, label, to);
        }
    }
    return a;
}

} // namespace blockdet::testing
