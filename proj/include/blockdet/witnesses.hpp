#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blockdet/automaton.hpp"
#include "blockdet/syntax.hpp"

namespace blockdet {

enum class Family {
    HanwoodMk,
    HanwoodEkExpr,
    HanwoodFkExpr,
    BlockAk,
    BlockBk,
    BlockExpr,
    UnaryAj,
    UnaryEjExpr,
    CounterexampleFig7,
};

std::string to_string(Family family);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();
/// Least parameter the family accepts.
int minimum_parameter(Family family);

struct WitnessSpec {
    Family family;
    int parameter = 1;
};

// Automaton families. State names: M_k uses q_1..q_k, 1, 2, 3; A_k and B_k use
// alpha_j, beta_j, f; the unary A_j uses alpha_0..alpha_2j; the counter-example
// uses i, 1, 2.

/// Minimal DFA of (a^k)*(a^(k-1)bb + ba)b*, k >= 2.
BlockAutomaton hanwood_M(int k);
/// [a^k]*([a^(k-1)b]b + ba)b*, k >= 2.
Regex hanwood_E(int k);
/// (a^(k-1)([aa]a^(k-2))*([ab]a + bb) + ba)b*, k >= 2.
Regex hanwood_F(int k);
/// The deterministic automaton over {a, b, c} whose language needs blocks of width k.
BlockAutomaton block_A(int k);
/// A_k with alpha_j, beta_j (j < k) eliminated.
BlockAutomaton block_B(int k);
/// (a(eps + [b^(k-1)c]))*(eps + [b^k]).
Regex block_expression(int k);
/// The (2j+1)-cycle over {a} with finals alpha_0 and alpha_j.
BlockAutomaton unary_A(int j);
/// (a^(2j+1))*(eps + a^j).
Regex unary_E(int j);
/// Minimal DFA with states i, 1, 2 none of which can be eliminated.
BlockAutomaton counterexample();

using Witness = std::variant<BlockAutomaton, Regex>;

/// Throws PreconditionError when the parameter is below the family's minimum.
Witness build(const WitnessSpec& spec);

struct Claim {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct WitnessReport {
    WitnessSpec spec;
    std::vector<Claim> claims;

    bool all_hold() const;
};

inline constexpr int kDefaultMaxParameter = 6;

/// Runs the claim suite of the family's group (M/E/F, A/B/expr, unary, or the
/// counter-example) at the given parameter.
WitnessReport verify(const WitnessSpec& spec, int max_parameter = kDefaultMaxParameter);

/// An automaton obtained from A_k (or its standardization) by eliminating a set
/// of states, narrow enough to be a (k-1)-block candidate.
struct EliminationCandidate {
    bool standardized = false;
    std::set<State> eliminated;
    BlockAutomaton automaton;
    bool certified = false;
};

/// Every elimination of an acyclic set of eliminable states of A_k and of its
/// standardization whose result has width <= k-1, with the outcome of
/// certify_k_block_language(result, k-1).
std::vector<EliminationCandidate> narrower_elimination_candidates(int k);

} // namespace blockdet
