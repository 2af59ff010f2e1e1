#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace blockdet {

/// A non-empty word over the base alphabet, used as one symbol of a block
/// expression or as one transition label. Base letters are ASCII alphanumerics.
class Block {
public:
    explicit Block(std::string letters);
    explicit Block(char letter) : Block(std::string(1, letter)) {}

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    /// `a` for width-1 blocks, `[ab]` otherwise.
    std::string text() const;

    /// True when this block is a (not necessarily proper) prefix of `other`.
    bool is_prefix_of(const Block& other) const noexcept;

    friend auto operator<=>(const Block&, const Block&) = default;
    friend bool operator==(const Block&, const Block&) = default;

    static bool is_letter(char c) noexcept;

private:
    std::string letters_;
};

Block operator+(const Block& lhs, const Block& rhs);

enum class RegexKind { Empty, Epsilon, Literal, Union, Concat, Star };

/// Immutable syntax tree of a (block) regular expression. Literal nodes carry a
/// block and a position index; index 0 means the literal is unmarked.
class Regex {
public:
    static Regex empty();
    static Regex epsilon();
    static Regex literal(Block block, int index = 0);
    static Regex alternation(Regex left, Regex right);
    static Regex concatenation(Regex left, Regex right);
    static Regex star(Regex child);

    RegexKind kind() const noexcept;
    const Block& block() const;
    int index() const;
    Regex left() const;
    Regex right() const;
    Regex child() const;

    /// Structural equality, including position indices.
    friend bool operator==(const Regex& lhs, const Regex& rhs);

    /// Either the single node `empty` or free of `empty` nodes.
    bool is_trimmed() const;
    std::size_t literal_count() const;
    /// Longest block length, 0 when there is no literal.
    std::size_t width() const;
    std::set<Block> blocks() const;

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Concatenates a non-empty sequence left to right; `epsilon` for an empty one.
Regex concat_all(const std::vector<Regex>& parts);
/// `literal(block)` repeated `count` times as a concatenation, `epsilon` for 0.
Regex power(const Block& block, int count);

/// Parses the concrete grammar:
///   expr   := term ('+' term)*
///   term   := factor ('.'? factor)*
///   factor := atom '*'*
///   atom   := letter | '[' letter+ ']' | '(' expr ')' | 'eps' | 'empty'
/// Whitespace is ignored. Keywords win over letters, so `eps` is the empty word;
/// write `e.p.s` or `[e]ps` for the three letters.
Regex parse(std::string_view text);

/// Canonical text; parse(to_string(e)) == drop(e). Indices are not printed.
std::string to_string(const Regex& regex);
/// Text with position subscripts, e.g. `[aa]_1*([ab]_2b_3+b_4a_5)b_6*`.
std::string to_marked_string(const Regex& regex);
/// Printer with caller-chosen literal rendering. Adjacent literals are separated by
/// `separator` (empty for plain juxtaposition).
std::string to_string(const Regex& regex, const std::function<std::string(const Regex&)>& literal_text,
                      std::string_view separator);

struct Position {
    int index;
    Block block;

    friend bool operator==(const Position&, const Position&) = default;
};

/// An expression whose literals carry unique indices 1..n assigned left to right.
struct MarkedExpression {
    Regex ast;
    std::vector<Position> positions;

    const Block& block_at(int index) const;
    std::size_t size() const noexcept { return positions.size(); }
};

MarkedExpression mark(const Regex& regex);
Regex drop(const Regex& regex);
inline Regex drop(const MarkedExpression& marked) { return drop(marked.ast); }

struct PositionTable {
    bool nullable = false;
    std::set<int> first;
    std::set<int> last;
    /// Every position is a key, possibly mapped to an empty set.
    std::map<int, std::set<int>> follow;
};

PositionTable positions(const MarkedExpression& marked);

/// All words of the marked language (sequences of position indices) with at most
/// `max_length` positions, by the inductive language semantics.
std::set<std::vector<int>> marked_words(const MarkedExpression& marked, std::size_t max_length);

} // namespace blockdet
