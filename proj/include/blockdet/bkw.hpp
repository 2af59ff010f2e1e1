#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blockdet/automaton.hpp"
#include "blockdet/determinism.hpp"
#include "blockdet/syntax.hpp"

namespace blockdet {

struct Orbit {
    std::set<State> states;
    /// A single state without a self-loop.
    bool trivial = false;
    /// Initial, or entered by a transition from outside the orbit.
    std::set<State> in_gates;
    /// Final, or left by a transition to outside the orbit.
    std::set<State> out_gates;
};

/// Strongly connected components, ordered by their least state.
struct OrbitDecomposition {
    std::vector<Orbit> orbits;
    std::map<State, std::size_t> orbit_of;

    const Orbit& orbit(const State& q) const { return orbits.at(orbit_of.at(q)); }
};

OrbitDecomposition orbit_decomposition(const BlockAutomaton& a);

/// Why two out-gates `p` and `q` of one orbit are told apart: either `p` is final
/// and `q` is not (`missing` empty), or `p` has the transition `missing` to outside
/// the orbit and `q` has no copy of it.
struct OrbitViolation {
    std::set<State> orbit;
    State p;
    State q;
    std::optional<Transition> missing;

    std::string describe() const;
};

struct OrbitPropertyResult {
    bool holds = true;
    std::optional<OrbitViolation> violation;

    explicit operator bool() const noexcept { return holds; }
};

OrbitPropertyResult orbit_property(const BlockAutomaton& a);

/// Every symbol a such that all final states have an a-transition to one common
/// state. Empty when there is no final state.
std::set<Block> consistent_symbols(const BlockAutomaton& a);

/// Removes, for each a in `cut`, the a-transitions leaving final states. The result
/// is not trimmed: states cut off from the initial state keep their orbits.
BlockAutomaton s_cut(const BlockAutomaton& a, const std::set<Block>& cut);

/// Restriction to the orbit of `q`, with initial state `q` and the orbit's out-gates
/// as final states.
BlockAutomaton orbit_automaton(const BlockAutomaton& a, const State& q);

enum class BkwFailure { OrbitProperty, NoConsistentSymbol, Recursion };

std::string to_string(BkwFailure failure);

struct BkwNode {
    std::string fingerprint;
    /// The state whose orbit automaton this node tests; empty at the root.
    std::optional<State> origin;
    std::size_t state_count = 0;
    std::set<Block> consistent;
    bool orbit_property = true;
    std::optional<OrbitViolation> violation;
    std::optional<BkwFailure> failure;
    std::vector<BkwNode> children;
};

struct BkwTrace {
    bool verdict = true;
    BkwNode root;

    explicit operator bool() const noexcept { return verdict; }
};

/// The recursive one-unambiguity test over a deterministic automaton. On a minimal
/// automaton the verdict decides one-unambiguity of the language; on any other
/// deterministic automaton a passing verdict is a sufficient certificate.
BkwTrace bkw_test(const BlockAutomaton& a);

bool is_one_unambiguous(const BlockAutomaton& a);
bool is_one_unambiguous(const Regex& expression);

struct BlockCertificate {
    bool verdict = false;
    KCheck block_check;
    /// Block of K -> the fresh width-1 symbol standing for it.
    std::map<Block, Block> abstraction;
    bool abstraction_deterministic = false;
    std::optional<BkwTrace> bkw;
    std::string reason;

    explicit operator bool() const noexcept { return verdict; }
};

/// K is k-block deterministic and its block abstraction (each distinct block mapped
/// injectively to a fresh letter) is deterministic and passes the BKW test. A true
/// verdict certifies that L(K) is a k-block deterministic language.
BlockCertificate certify_k_block_language(const BlockAutomaton& k_automaton, int k);

} // namespace blockdet
