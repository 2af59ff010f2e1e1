#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "blockdet/automaton.hpp"

namespace blockdet::testing {

using Edge = std::tuple<std::string, std::string, std::string>;  // from, label letters, to

BlockAutomaton make_automaton(const std::vector<std::string>& initials, const std::vector<std::string>& finals,
                              const std::vector<Edge>& edges);

// Hand-drawn automata, transcribed state by state.
BlockAutomaton fig1_glushkov();      // (a+b)*a+eps
BlockAutomaton fig2_glushkov();      // b*a(b*a)*(a+b)
BlockAutomaton fig3_glushkov();      // [aa]*([ab]b+ba)b*
BlockAutomaton fig4_minimal();       // minimal DFA of the expansion of fig3
BlockAutomaton fig6_before();        // q between r1, r2 and s1, s2 with a loop through s1
BlockAutomaton fig6_after();         // fig6_before with q eliminated
BlockAutomaton fig7_minimal();
BlockAutomaton fig7_standardized();  // fresh initial i'
BlockAutomaton fig7_eliminated();    // i eliminated, blocks [ba] and [bb]

/// Block expressions used for the transform checks.
const std::vector<std::string>& block_corpus();
/// Width-1 and block expressions used for general round trips and agreement checks.
const std::vector<std::string>& expression_corpus();
/// Automata with at most 12 states.
std::vector<BlockAutomaton> automaton_corpus();

} // namespace blockdet::testing
