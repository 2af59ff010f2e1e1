#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "blockdet/automaton.hpp"
#include "blockdet/syntax.hpp"

namespace blockdet {

/// Not initial, not final, no self-loop.
bool eliminable(const BlockAutomaton& a, const State& q);

/// Removes `q` and adds (r, uv, s) for every pair (r, u, q), (q, v, s).
BlockAutomaton eliminate(const BlockAutomaton& a, const State& q);

/// Eliminates every state of `states` in ascending identifier order. Each state must
/// be eliminable and the subgraph they induce must be acyclic.
BlockAutomaton eliminate_set(const BlockAutomaton& a, const std::set<State>& states);

/// The letter at `offset` (1-based) of the block at position `block_index`.
struct ExpandedSymbol {
    char letter = 'a';
    int block_index = 1;
    int offset = 1;
    int block_length = 1;

    /// `a@5.1` for the first letter of block 5.
    std::string text() const;

    friend bool operator==(const ExpandedSymbol&, const ExpandedSymbol&) = default;
    friend std::strong_ordering operator<=>(const ExpandedSymbol& lhs, const ExpandedSymbol& rhs) {
        if (auto c = lhs.block_index <=> rhs.block_index; c != 0) {
            return c;
        }
        if (auto c = lhs.offset <=> rhs.offset; c != 0) {
            return c;
        }
        if (auto c = lhs.letter <=> rhs.letter; c != 0) {
            return c;
        }
        return lhs.block_length <=> rhs.block_length;
    }
};

std::vector<ExpandedSymbol> phi(const Position& position);
/// Inverse of `phi` on its image; throws when `word` is not the image of one block.
Position phi_inverse(const std::vector<ExpandedSymbol>& word);

/// A block expression with every block literal replaced by the concatenation of
/// its letters. `marked` is a width-1 expression whose n-th position is `omega[n-1]`.
struct ChiExpression {
    MarkedExpression marked;
    std::vector<ExpandedSymbol> omega;

    const ExpandedSymbol& symbol(int index) const { return omega.at(static_cast<std::size_t>(index - 1)); }
    /// Text with literals written as `a@i.j`.
    std::string to_string() const;
    /// The plain expression over the base letters.
    Regex dropped() const { return drop(marked); }
};

ChiExpression chi(const MarkedExpression& block_marked);

/// The empty word, or a word that starts a block, ends a block, stays inside one
/// block while offsets increase by one, and only jumps from a block's last letter
/// to another block's first letter.
bool is_block_complete(const std::vector<ExpandedSymbol>& word);

} // namespace blockdet
