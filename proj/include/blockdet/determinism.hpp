#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockdet/automaton.hpp"
#include "blockdet/syntax.hpp"

namespace blockdet {

/// Two distinct transitions leaving the same state that break a determinism
/// condition. For lookahead checks `witness` is the least word of length k-1
/// readable from both targets.
struct Violation {
    Transition first;
    Transition second;
    std::optional<std::string> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a k-parameterized check. Violations are sorted, so the first one is
/// the lexicographically least witness pair. `reason` explains a failure that is
/// not caused by a transition pair (too many initial states, too wide a label).
struct KCheck {
    int k = 1;
    bool verdict = true;
    std::vector<Violation> violations;
    std::string reason;

    explicit operator bool() const noexcept { return verdict; }
};

struct DeterminismReport {
    bool deterministic = false;
    std::optional<KCheck> k_block;
    std::optional<KCheck> k_lookahead;
    /// Outer optional: whether it was computed. Inner nullopt: no k exists.
    std::optional<std::optional<int>> min_lookahead;
};

/// One initial state and no two distinct transitions sharing source and label.
bool is_deterministic(const BlockAutomaton& a);

/// width(a) <= k, one initial state, and the labels of distinct transitions
/// leaving a state are pairwise non-prefix.
KCheck is_k_block_deterministic(const BlockAutomaton& a, int k);

/// One initial state, and any two distinct transitions (p, x, q1), (p, x, q2) have
/// no common word of length k-1 readable from q1 and from q2. Decided on the
/// graph of state pairs; requires a width-1 automaton.
KCheck is_k_lookahead_deterministic(const BlockAutomaton& a, int k);

/// Least k for which `a` is k-lookahead deterministic, nullopt when none exists
/// (a violating pair of targets reads common words of every length).
std::optional<int> min_lookahead(const BlockAutomaton& a);

KCheck is_k_block_deterministic_expression(const Regex& expression, int k);
KCheck is_k_lookahead_deterministic_expression(const Regex& expression, int k);

DeterminismReport determinism_report(const BlockAutomaton& a, std::optional<int> block_k,
                                     std::optional<int> lookahead_k, bool with_min_lookahead);

enum class OracleKind { Block, Lookahead };

/// A concrete counterexample found by the brute-force oracle. `first_word` and
/// `second_word` are marked words of the language sharing the prefix `prefix`
/// and continuing with the distinct positions `first_position` and
/// `second_position`.
struct OracleWitness {
    std::vector<int> prefix;
    int first_position = 0;
    int second_position = 0;
    std::vector<int> first_word;
    std::vector<int> second_word;
    std::string reason;
};

struct OracleResult {
    bool holds = true;
    std::optional<OracleWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// Checks the marked-word characterization of block (resp. lookahead)
/// determinism by enumerating every prefix of the marked language with at most
/// `max_length` positions. Independent of the Glushkov construction.
OracleResult marked_language_oracle(OracleKind kind, const Regex& expression, int k, std::size_t max_length);

} // namespace blockdet
