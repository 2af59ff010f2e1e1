#pragma once

#include <map>

#include "blockdet/automaton.hpp"
#include "blockdet/syntax.hpp"

namespace blockdet {

/// The position automaton of an expression. The initial state is `i`; the state of
/// position n with block w is `<letters of w>_<n>`, e.g. `aa_1`.
struct GlushkovAutomaton {
    BlockAutomaton automaton;
    MarkedExpression marked;
    std::map<State, Position> position_of_state;
};

inline const State kGlushkovInitial = "i";

State glushkov_state_name(const Position& position);

GlushkovAutomaton glushkov(const Regex& expression);

/// Standard (single initial state without incoming transitions) and homogeneous
/// (all transitions entering a state share one label). These are necessary
/// conditions for being a Glushkov automaton, not a full characterization.
bool check_glushkov_shape(const BlockAutomaton& a);

/// Relabels every transition through `injection`. Throws if the mapping misses a
/// symbol of `a` or is not injective on the symbols of `a`.
BlockAutomaton alphabetic_image(const BlockAutomaton& a, const std::map<Block, Block>& injection);

} // namespace blockdet
