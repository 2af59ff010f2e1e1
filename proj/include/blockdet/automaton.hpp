#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blockdet/syntax.hpp"

namespace blockdet {

/// State identifiers are opaque tokens. Identifiers generated by the library for
/// fresh states start with `$`.
using State = std::string;

struct Transition {
    State from;
    Block label;
    State to;

    friend auto operator<=>(const Transition&, const Transition&) = default;
    friend bool operator==(const Transition&, const Transition&) = default;
};

/// A finite automaton whose labels are blocks. Plain automata are the width-1 case.
class BlockAutomaton {
public:
    BlockAutomaton() = default;

    void add_symbol(const Block& symbol) { alphabet_.insert(symbol); }
    void add_state(const State& state) { states_.insert(state); }
    void add_initial(const State& state);
    void add_final(const State& state);
    /// Inserts both end points and the label into the state set and the alphabet.
    void add_transition(const State& from, const Block& label, const State& to);
    void add_transition(const Transition& t) { add_transition(t.from, t.label, t.to); }
    void set_initials(std::set<State> initials);
    void set_finals(std::set<State> finals);

    const std::set<Block>& alphabet() const noexcept { return alphabet_; }
    const std::set<State>& states() const noexcept { return states_; }
    const std::set<State>& initials() const noexcept { return initials_; }
    const std::set<State>& finals() const noexcept { return finals_; }
    const std::set<Transition>& transitions() const noexcept { return transitions_; }

    bool has_state(const State& q) const { return states_.contains(q); }
    bool is_initial(const State& q) const { return initials_.contains(q); }
    bool is_final(const State& q) const { return finals_.contains(q); }

    /// Transitions leaving `q`, ordered by label then target.
    std::vector<Transition> outgoing(const State& q) const;
    std::vector<Transition> incoming(const State& q) const;

    /// Longest label length, 0 without transitions.
    std::size_t width() const;

    /// Same states, initials, finals and transitions. The alphabet is not compared.
    bool same_structure(const BlockAutomaton& other) const;

    /// A state identifier not used by this automaton, `$<hint>` or `$<hint><n>`.
    State fresh_state(std::string_view hint) const;

    friend bool operator==(const BlockAutomaton&, const BlockAutomaton&) = default;

private:
    std::set<Block> alphabet_;
    std::set<State> states_;
    std::set<State> initials_;
    std::set<State> finals_;
    std::set<Transition> transitions_;
};

/// Base letters occurring in the labels and alphabet of `a`.
std::set<char> base_letters(const BlockAutomaton& a);

bool accepts(const BlockAutomaton& a, std::string_view word);

BlockAutomaton trim(const BlockAutomaton& a);

/// Adds a fresh initial state with copies of the initial states' outgoing
/// transitions; the old initial states stay but are no longer initial. The result
/// is not trimmed.
BlockAutomaton standardize(const BlockAutomaton& a);

/// Replaces every transition labelled by a block of length m > 1 with a chain
/// through m-1 fresh states.
BlockAutomaton expand_blocks(const BlockAutomaton& a);

/// Subset construction over width-1 automata; the result is trimmed.
BlockAutomaton determinize(const BlockAutomaton& a);

/// Merges equivalent states of a deterministic automaton (partition refinement).
/// Labels are treated as atomic symbols. The result is trimmed and partial.
BlockAutomaton minimize(const BlockAutomaton& a);

/// Minimal deterministic automaton of L(a) over the base alphabet.
BlockAutomaton minimal_dfa(const BlockAutomaton& a);

/// Text encoding of a deterministic automaton by breadth-first numbering from the
/// initial state, labels in sorted order. Equal iff the reachable parts are
/// isomorphic (and the state counts agree).
std::string canonical_form(const BlockAutomaton& a);

/// Isomorphism of deterministic automata by canonical breadth-first numbering.
bool isomorphic(const BlockAutomaton& a, const BlockAutomaton& b);

/// L(a) = L(b) over the base alphabet.
bool equivalent(const BlockAutomaton& a, const BlockAutomaton& b);

/// Shortlex-least word in the symmetric difference of L(a) and L(b), if any.
std::optional<std::string> distinguishing_word(const BlockAutomaton& a, const BlockAutomaton& b);

/// Accepted words of length <= max_length, shortlex ordered.
std::vector<std::string> enumerate(const BlockAutomaton& a, std::size_t max_length);

/// Shortlex order: by length, then lexicographically.
struct ShortLex {
    bool operator()(const std::string& lhs, const std::string& rhs) const {
        return lhs.size() != rhs.size() ? lhs.size() < rhs.size() : lhs < rhs;
    }
};

} // namespace blockdet
