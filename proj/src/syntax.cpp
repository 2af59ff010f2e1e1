#include "blockdet/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "blockdet/error.hpp"

namespace blockdet {

// ---------------------------------------------------------------------------
// Block

bool Block::is_letter(char c) noexcept {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

Block::Block(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw PreconditionError("block must contain at least one letter");
    }
    for (char c : letters_) {
        if (!is_letter(c)) {
            throw PreconditionError(std::string("invalid base letter '") + c + "' in block");
        }
    }
}

std::string Block::text() const {
    return letters_.size() == 1 ? letters_ : "[" + letters_ + "]";
}

bool Block::is_prefix_of(const Block& other) const noexcept {
    return other.letters_.compare(0, letters_.size(), letters_) == 0;
}

Block operator+(const Block& lhs, const Block& rhs) {
    return Block(lhs.letters() + rhs.letters());
}

// ---------------------------------------------------------------------------
// Regex

struct Regex::Node {
    RegexKind kind;
    std::optional<Block> block;  // literal only
    int index = 0;               // literal only
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

Regex Regex::empty() {
    static const auto node = std::make_shared<const Node>(Node{RegexKind::Empty, {}, 0, nullptr, nullptr});
    return Regex(node);
}

Regex Regex::epsilon() {
    static const auto node = std::make_shared<const Node>(Node{RegexKind::Epsilon, {}, 0, nullptr, nullptr});
    return Regex(node);
}

Regex Regex::literal(Block block, int index) {
    if (index < 0) {
        throw PreconditionError("position index must be non-negative");
    }
    return Regex(std::make_shared<const Node>(Node{RegexKind::Literal, std::move(block), index, nullptr, nullptr}));
}

Regex Regex::alternation(Regex left, Regex right) {
    return Regex(std::make_shared<const Node>(
        Node{RegexKind::Union, {}, 0, std::move(left.node_), std::move(right.node_)}));
}

Regex Regex::concatenation(Regex left, Regex right) {
    return Regex(std::make_shared<const Node>(
        Node{RegexKind::Concat, {}, 0, std::move(left.node_), std::move(right.node_)}));
}

Regex Regex::star(Regex child) {
    return Regex(std::make_shared<const Node>(Node{RegexKind::Star, {}, 0, std::move(child.node_), nullptr}));
}

RegexKind Regex::kind() const noexcept { return node_->kind; }

const Block& Regex::block() const {
    if (node_->kind != RegexKind::Literal) {
        throw PreconditionError("block() on a non-literal node");
    }
    return *node_->block;
}

int Regex::index() const {
    if (node_->kind != RegexKind::Literal) {
        throw PreconditionError("index() on a non-literal node");
    }
    return node_->index;
}

Regex Regex::left() const {
    if (node_->kind != RegexKind::Union && node_->kind != RegexKind::Concat) {
        throw PreconditionError("left() on a node without operands");
    }
    return Regex(node_->left);
}

Regex Regex::right() const {
    if (node_->kind != RegexKind::Union && node_->kind != RegexKind::Concat) {
        throw PreconditionError("right() on a node without operands");
    }
    return Regex(node_->right);
}

Regex Regex::child() const {
    if (node_->kind != RegexKind::Star) {
        throw PreconditionError("child() on a non-star node");
    }
    return Regex(node_->left);
}

namespace {

template <class NodeT>
bool equal_nodes(const NodeT* a, const NodeT* b) {
    if (a == b) {
        return true;
    }
    if (a->kind != b->kind) {
        return false;
    }
    switch (a->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return true;
    case RegexKind::Literal:
        return a->block == b->block && a->index == b->index;
    case RegexKind::Star:
        return equal_nodes(a->left.get(), b->left.get());
    case RegexKind::Union:
    case RegexKind::Concat:
        return equal_nodes(a->left.get(), b->left.get()) && equal_nodes(a->right.get(), b->right.get());
    }
    return false;
}

} // namespace

bool operator==(const Regex& lhs, const Regex& rhs) {
    return equal_nodes(lhs.node_.get(), rhs.node_.get());
}

namespace {

template <class F>
void for_each_literal(const Regex& regex, F&& f) {
    switch (regex.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return;
    case RegexKind::Literal:
        f(regex);
        return;
    case RegexKind::Star:
        for_each_literal(regex.child(), f);
        return;
    case RegexKind::Union:
    case RegexKind::Concat:
        for_each_literal(regex.left(), f);
        for_each_literal(regex.right(), f);
        return;
    }
}

bool contains_empty(const Regex& regex) {
    switch (regex.kind()) {
    case RegexKind::Empty:
        return true;
    case RegexKind::Epsilon:
    case RegexKind::Literal:
        return false;
    case RegexKind::Star:
        return contains_empty(regex.child());
    case RegexKind::Union:
    case RegexKind::Concat:
        return contains_empty(regex.left()) || contains_empty(regex.right());
    }
    return false;
}

} // namespace

bool Regex::is_trimmed() const {
    return kind() == RegexKind::Empty || !contains_empty(*this);
}

std::size_t Regex::literal_count() const {
    std::size_t count = 0;
    for_each_literal(*this, [&](const Regex&) { ++count; });
    return count;
}

std::size_t Regex::width() const {
    std::size_t width = 0;
    for_each_literal(*this, [&](const Regex& lit) { width = std::max(width, lit.block().size()); });
    return width;
}

std::set<Block> Regex::blocks() const {
    std::set<Block> result;
    for_each_literal(*this, [&](const Regex& lit) { result.insert(lit.block()); });
    return result;
}

Regex concat_all(const std::vector<Regex>& parts) {
    if (parts.empty()) {
        return Regex::epsilon();
    }
    Regex result = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        result = Regex::concatenation(result, parts[i]);
    }
    return result;
}

Regex power(const Block& block, int count) {
    std::vector<Regex> parts(static_cast<std::size_t>(std::max(count, 0)), Regex::literal(block));
    return concat_all(parts);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Regex parse_all() {
        skip_space();
        if (at_end()) {
            throw ParseError("empty expression", pos_);
        }
        Regex result = parse_union();
        skip_space();
        if (!at_end()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool starts_with(std::string_view word) const { return text_.substr(pos_).starts_with(word); }

    bool at_atom_start() {
        skip_space();
        if (at_end()) {
            return false;
        }
        char c = text_[pos_];
        return c == '(' || c == '[' || Block::is_letter(c) || starts_with("ε") || starts_with("∅");
    }

    Regex parse_union() {
        Regex result = parse_concat();
        for (;;) {
            skip_space();
            if (at_end() || text_[pos_] != '+') {
                return result;
            }
            ++pos_;
            result = Regex::alternation(result, parse_concat());
        }
    }

    Regex parse_concat() {
        Regex result = parse_factor();
        for (;;) {
            skip_space();
            if (!at_end() && text_[pos_] == '.') {
                ++pos_;
                result = Regex::concatenation(result, parse_factor());
            } else if (at_atom_start()) {
                result = Regex::concatenation(result, parse_factor());
            } else {
                return result;
            }
        }
    }

    Regex parse_factor() {
        Regex result = parse_atom();
        for (;;) {
            skip_space();
            if (at_end() || text_[pos_] != '*') {
                return result;
            }
            ++pos_;
            result = Regex::star(result);
        }
    }

    Regex parse_atom() {
        skip_space();
        if (at_end()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Regex inner = parse_union();
            skip_space();
            if (at_end() || text_[pos_] != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (c == '[') {
            ++pos_;
            std::string letters;
            for (;;) {
                skip_space();
                if (at_end()) {
                    throw ParseError("unterminated block", start);
                }
                char d = text_[pos_];
                if (d == ']') {
                    break;
                }
                if (!Block::is_letter(d)) {
                    throw ParseError(std::string("invalid letter '") + d + "' in block", pos_);
                }
                letters.push_back(d);
                ++pos_;
            }
            if (letters.empty()) {
                throw ParseError("empty block []", start);
            }
            ++pos_;
            return Regex::literal(Block(std::move(letters)));
        }
        if (starts_with("empty")) {
            pos_ += 5;
            return Regex::empty();
        }
        if (starts_with("eps")) {
            pos_ += 3;
            return Regex::epsilon();
        }
        if (starts_with("ε")) {
            pos_ += std::string_view("ε").size();
            return Regex::epsilon();
        }
        if (starts_with("∅")) {
            pos_ += std::string_view("∅").size();
            return Regex::empty();
        }
        if (Block::is_letter(c)) {
            ++pos_;
            return Regex::literal(Block(c));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Regex parse(std::string_view text) {
    return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

enum Precedence { kUnion = 1, kConcat = 2, kStar = 3 };

class Printer {
public:
    Printer(const std::function<std::string(const Regex&)>& literal_text, std::string_view separator)
        : literal_text_(literal_text), separator_(separator) {}

    std::string print(const Regex& regex, int context) const {
        switch (regex.kind()) {
        case RegexKind::Empty:
            return "empty";
        case RegexKind::Epsilon:
            return "eps";
        case RegexKind::Literal:
            return literal_text_(regex);
        case RegexKind::Star:
            return print(regex.child(), kStar) + "*";
        case RegexKind::Union: {
            std::string s = print(regex.left(), kUnion) + "+" + print(regex.right(), kConcat);
            return context > kUnion ? "(" + s + ")" : s;
        }
        case RegexKind::Concat: {
            std::string lhs = print(regex.left(), kConcat);
            std::string rhs = print(regex.right(), kStar);
            std::string s = lhs + join(lhs, rhs) + rhs;
            return context > kConcat ? "(" + s + ")" : s;
        }
        }
        return {};
    }

private:
    std::string join(const std::string& lhs, const std::string& rhs) const {
        if (!separator_.empty()) {
            return std::string(separator_);
        }
        // A trailing letter `e` followed by letters could reparse as a keyword.
        if (!lhs.empty() && lhs.back() == 'e' && !rhs.empty() && Block::is_letter(rhs.front())) {
            return ".";
        }
        return {};
    }

    const std::function<std::string(const Regex&)>& literal_text_;
    std::string_view separator_;
};

} // namespace

std::string to_string(const Regex& regex, const std::function<std::string(const Regex&)>& literal_text,
                      std::string_view separator) {
    return Printer(literal_text, separator).print(regex, 0);
}

std::string to_string(const Regex& regex) {
    return to_string(regex, [](const Regex& lit) { return lit.block().text(); }, "");
}

std::string to_marked_string(const Regex& regex) {
    return to_string(
        regex,
        [](const Regex& lit) {
            return lit.index() == 0 ? lit.block().text() : lit.block().text() + "_" + std::to_string(lit.index());
        },
        "");
}

// ---------------------------------------------------------------------------
// Marking

const Block& MarkedExpression::block_at(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > positions.size()) {
        throw PreconditionError("position index " + std::to_string(index) + " out of range");
    }
    return positions[static_cast<std::size_t>(index) - 1].block;
}

namespace {

Regex mark_rec(const Regex& regex, std::vector<Position>& out) {
    switch (regex.kind()) {
    case RegexKind::Empty:
        throw PreconditionError("cannot mark an expression containing 'empty' as a subterm");
    case RegexKind::Epsilon:
        return regex;
    case RegexKind::Literal: {
        const int index = static_cast<int>(out.size()) + 1;
        out.push_back(Position{index, regex.block()});
        return Regex::literal(regex.block(), index);
    }
    case RegexKind::Star:
        return Regex::star(mark_rec(regex.child(), out));
    case RegexKind::Union: {
        Regex lhs = mark_rec(regex.left(), out);
        return Regex::alternation(lhs, mark_rec(regex.right(), out));
    }
    case RegexKind::Concat: {
        Regex lhs = mark_rec(regex.left(), out);
        return Regex::concatenation(lhs, mark_rec(regex.right(), out));
    }
    }
    return regex;
}

} // namespace

MarkedExpression mark(const Regex& regex) {
    if (regex.kind() == RegexKind::Empty) {
        throw PreconditionError("cannot mark the 'empty' expression");
    }
    MarkedExpression marked{Regex::epsilon(), {}};
    marked.ast = mark_rec(regex, marked.positions);
    return marked;
}

Regex drop(const Regex& regex) {
    switch (regex.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return regex;
    case RegexKind::Literal:
        return regex.index() == 0 ? regex : Regex::literal(regex.block());
    case RegexKind::Star:
        return Regex::star(drop(regex.child()));
    case RegexKind::Union:
        return Regex::alternation(drop(regex.left()), drop(regex.right()));
    case RegexKind::Concat:
        return Regex::concatenation(drop(regex.left()), drop(regex.right()));
    }
    return regex;
}

// ---------------------------------------------------------------------------
// Position functions

namespace {

struct Partial {
    bool nullable;
    std::set<int> first;
    std::set<int> last;
};

Partial positions_rec(const Regex& regex, std::map<int, std::set<int>>& follow) {
    switch (regex.kind()) {
    case RegexKind::Empty:
        return {false, {}, {}};
    case RegexKind::Epsilon:
        return {true, {}, {}};
    case RegexKind::Literal: {
        const int x = regex.index();
        if (x == 0) {
            throw PreconditionError("position functions require a marked expression");
        }
        follow.try_emplace(x);
        return {false, {x}, {x}};
    }
    case RegexKind::Union: {
        Partial l = positions_rec(regex.left(), follow);
        Partial r = positions_rec(regex.right(), follow);
        l.first.insert(r.first.begin(), r.first.end());
        l.last.insert(r.last.begin(), r.last.end());
        return {l.nullable || r.nullable, std::move(l.first), std::move(l.last)};
    }
    case RegexKind::Concat: {
        Partial l = positions_rec(regex.left(), follow);
        Partial r = positions_rec(regex.right(), follow);
        for (int x : l.last) {
            follow[x].insert(r.first.begin(), r.first.end());
        }
        Partial out{l.nullable && r.nullable, l.first, r.last};
        if (l.nullable) {
            out.first.insert(r.first.begin(), r.first.end());
        }
        if (r.nullable) {
            out.last.insert(l.last.begin(), l.last.end());
        }
        return out;
    }
    case RegexKind::Star: {
        Partial c = positions_rec(regex.child(), follow);
        for (int x : c.last) {
            follow[x].insert(c.first.begin(), c.first.end());
        }
        return {true, std::move(c.first), std::move(c.last)};
    }
    }
    return {false, {}, {}};
}

} // namespace

PositionTable positions(const MarkedExpression& marked) {
    PositionTable table;
    Partial root = positions_rec(marked.ast, table.follow);
    table.nullable = root.nullable;
    table.first = std::move(root.first);
    table.last = std::move(root.last);
    return table;
}

// ---------------------------------------------------------------------------
// Bounded marked language

namespace {

using Word = std::vector<int>;
using Language = std::set<Word>;

Language concat_bounded(const Language& lhs, const Language& rhs, std::size_t max_length) {
    std::vector<std::vector<const Word*>> by_length(max_length + 1);
    for (const Word& v : rhs) {
        if (v.size() <= max_length) {
            by_length[v.size()].push_back(&v);
        }
    }
    Language out;
    for (const Word& u : lhs) {
        for (std::size_t len = 0; u.size() + len <= max_length; ++len) {
            for (const Word* v : by_length[len]) {
                Word w = u;
                w.insert(w.end(), v->begin(), v->end());
                out.insert(std::move(w));
            }
        }
    }
    return out;
}

Language words_rec(const Regex& regex, std::size_t max_length) {
    switch (regex.kind()) {
    case RegexKind::Empty:
        return {};
    case RegexKind::Epsilon:
        return {Word{}};
    case RegexKind::Literal:
        if (max_length == 0) {
            return {};
        }
        return {Word{regex.index()}};
    case RegexKind::Union: {
        Language l = words_rec(regex.left(), max_length);
        Language r = words_rec(regex.right(), max_length);
        l.insert(r.begin(), r.end());
        return l;
    }
    case RegexKind::Concat:
        return concat_bounded(words_rec(regex.left(), max_length), words_rec(regex.right(), max_length),
                              max_length);
    case RegexKind::Star: {
        Language base = words_rec(regex.child(), max_length);
        base.erase(Word{});
        Language result{Word{}};
        Language frontier{Word{}};
        while (!frontier.empty()) {
            Language next;
            for (const Word& w : concat_bounded(frontier, base, max_length)) {
                if (result.insert(w).second) {
                    next.insert(w);
                }
            }
            frontier = std::move(next);
        }
        return result;
    }
    }
    return {};
}

} // namespace

std::set<std::vector<int>> marked_words(const MarkedExpression& marked, std::size_t max_length) {
    return words_rec(marked.ast, max_length);
}

} // namespace blockdet
