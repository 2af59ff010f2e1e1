#include "blockdet/determinism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"

namespace blockdet {

bool is_deterministic(const BlockAutomaton& a) {
    if (a.initials().size() != 1) {
        return false;
    }
    const Transition* previous = nullptr;
    for (const Transition& t : a.transitions()) {
        if (previous != nullptr && previous->from == t.from && previous->label == t.label) {
            return false;
        }
        previous = &t;
    }
    return true;
}

namespace {

std::string initial_count_reason(const BlockAutomaton& a) {
    return std::to_string(a.initials().size()) + " initial states (exactly one required)";
}

} // namespace

KCheck is_k_block_deterministic(const BlockAutomaton& a, int k) {
    if (k < 1) {
        throw PreconditionError("block width k must be positive");
    }
    KCheck result{k, true, {}, {}};
    if (a.width() > static_cast<std::size_t>(k)) {
        result.verdict = false;
        result.reason = "width " + std::to_string(a.width()) + " exceeds k=" + std::to_string(k);
    } else if (a.initials().size() != 1) {
        result.verdict = false;
        result.reason = initial_count_reason(a);
    }
    for (const State& p : a.states()) {
        const std::vector<Transition> out = a.outgoing(p);
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                if (out[i].label.is_prefix_of(out[j].label) || out[j].label.is_prefix_of(out[i].label)) {
                    result.violations.push_back(Violation{out[i], out[j], std::nullopt});
                }
            }
        }
    }
    if (!result.violations.empty()) {
        result.verdict = false;
    }
    return result;
}

namespace {

/// The graph of state pairs: (q1, q2) -> (r1, r2) when some letter leads q1 to r1
/// and q2 to r2.
class PairGraph {
public:
    explicit PairGraph(const BlockAutomaton& a) {
        if (a.width() > 1) {
            throw PreconditionError("lookahead determinism requires a width-1 automaton");
        }
        for (const State& q : a.states()) {
            index_.emplace(q, static_cast<int>(names_.size()));
            names_.push_back(q);
        }
        successors_.resize(names_.size());
        for (const Transition& t : a.transitions()) {
            const char c = t.label.letters()[0];
            letters_.insert(c);
            successors_[static_cast<std::size_t>(index_.at(t.from))][c].push_back(index_.at(t.to));
        }
    }

    int index(const State& q) const { return index_.at(q); }
    std::size_t size() const { return names_.size(); }
    const std::set<char>& letters() const { return letters_; }

    std::vector<std::pair<int, int>> step(std::pair<int, int> p, char c) const {
        std::vector<std::pair<int, int>> out;
        const auto& s1 = successors_[static_cast<std::size_t>(p.first)];
        const auto& s2 = successors_[static_cast<std::size_t>(p.second)];
        auto i1 = s1.find(c);
        auto i2 = s2.find(c);
        if (i1 == s1.end() || i2 == s2.end()) {
            return out;
        }
        for (int r1 : i1->second) {
            for (int r2 : i2->second) {
                out.emplace_back(r1, r2);
            }
        }
        return out;
    }

    std::vector<std::pair<int, int>> successors(std::pair<int, int> p) const {
        std::vector<std::pair<int, int>> out;
        for (char c : letters_) {
            auto s = step(p, c);
            out.insert(out.end(), s.begin(), s.end());
        }
        return out;
    }

    /// readable[d][i * n + j]: some word of length d is readable from both i and j.
    std::vector<std::vector<bool>> common_readable(int depth) const {
        const std::size_t n = names_.size();
        std::vector<std::vector<bool>> readable(static_cast<std::size_t>(depth) + 1, std::vector<bool>(n * n, false));
        std::fill(readable[0].begin(), readable[0].end(), true);
        for (int d = 1; d <= depth; ++d) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    for (auto [r1, r2] : successors({static_cast<int>(i), static_cast<int>(j)})) {
                        if (readable[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(r1) * n +
                                                                       static_cast<std::size_t>(r2)]) {
                            readable[static_cast<std::size_t>(d)][i * n + j] = true;
                            break;
                        }
                    }
                }
            }
        }
        return readable;
    }

    /// Least word of length `length` readable from both states of `start`.
    std::string least_common_word(std::pair<int, int> start, int length,
                                  const std::vector<std::vector<bool>>& readable) const {
        const std::size_t n = names_.size();
        std::set<std::pair<int, int>> current{start};
        std::string word;
        for (int remaining = length; remaining > 0; --remaining) {
            for (char c : letters_) {
                std::set<std::pair<int, int>> next;
                for (auto p : current) {
                    for (auto [r1, r2] : step(p, c)) {
                        if (readable[static_cast<std::size_t>(remaining - 1)]
                                    [static_cast<std::size_t>(r1) * n + static_cast<std::size_t>(r2)]) {
                            next.emplace(r1, r2);
                        }
                    }
                }
                if (!next.empty()) {
                    word.push_back(c);
                    current = std::move(next);
                    break;
                }
            }
        }
        return word;
    }

private:
    std::vector<State> names_;
    std::map<State, int> index_;
    std::vector<std::map<char, std::vector<int>>> successors_;
    std::set<char> letters_;
};

/// Pairs of distinct transitions sharing source and label.
std::vector<std::pair<Transition, Transition>> same_label_pairs(const BlockAutomaton& a) {
    std::vector<std::pair<Transition, Transition>> pairs;
    for (const State& p : a.states()) {
        const std::vector<Transition> out = a.outgoing(p);
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size() && out[j].label == out[i].label; ++j) {
                pairs.emplace_back(out[i], out[j]);
            }
        }
    }
    return pairs;
}

} // namespace

KCheck is_k_lookahead_deterministic(const BlockAutomaton& a, int k) {
    if (k < 1) {
        throw PreconditionError("lookahead k must be positive");
    }
    const PairGraph graph(a);
    KCheck result{k, true, {}, {}};
    if (a.initials().size() != 1) {
        result.verdict = false;
        result.reason = initial_count_reason(a);
    }
    const auto readable = graph.common_readable(k - 1);
    const std::size_t n = graph.size();
    for (const auto& [t1, t2] : same_label_pairs(a)) {
        const int q1 = graph.index(t1.to);
        const int q2 = graph.index(t2.to);
        if (readable[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(q1) * n + static_cast<std::size_t>(q2)]) {
            result.violations.push_back(Violation{t1, t2, graph.least_common_word({q1, q2}, k - 1, readable)});
        }
    }
    if (!result.violations.empty()) {
        result.verdict = false;
    }
    return result;
}

std::optional<int> min_lookahead(const BlockAutomaton& a) {
    const PairGraph graph(a);
    if (a.initials().size() != 1) {
        return std::nullopt;
    }
    // Longest common readable word from each pair, -1 marking "in progress" to detect
    // cycles; a reachable cycle means common words of every length.
    std::map<std::pair<int, int>, int> longest;
    bool unbounded = false;
    auto visit = [&](auto&& self, std::pair<int, int> p) -> int {
        auto [it, inserted] = longest.emplace(p, -1);
        if (!inserted) {
            if (it->second < 0) {
                unbounded = true;
                return 0;
            }
            return it->second;
        }
        int best = 0;
        for (auto next : graph.successors(p)) {
            best = std::max(best, 1 + self(self, next));
            if (unbounded) {
                return 0;
            }
        }
        longest[p] = best;
        return best;
    };

    int k = 1;
    for (const auto& [t1, t2] : same_label_pairs(a)) {
        const int length = visit(visit, {graph.index(t1.to), graph.index(t2.to)});
        if (unbounded) {
            return std::nullopt;
        }
        k = std::max(k, length + 2);
    }
    return k;
}

KCheck is_k_block_deterministic_expression(const Regex& expression, int k) {
    return is_k_block_deterministic(glushkov(expression).automaton, k);
}

KCheck is_k_lookahead_deterministic_expression(const Regex& expression, int k) {
    if (expression.width() > 1) {
        throw PreconditionError("lookahead determinism of an expression requires width-1 literals");
    }
    return is_k_lookahead_deterministic(glushkov(expression).automaton, k);
}

DeterminismReport determinism_report(const BlockAutomaton& a, std::optional<int> block_k,
                                     std::optional<int> lookahead_k, bool with_min_lookahead) {
    DeterminismReport report;
    report.deterministic = is_deterministic(a);
    if (block_k) {
        report.k_block = is_k_block_deterministic(a, *block_k);
    }
    if (lookahead_k) {
        report.k_lookahead = is_k_lookahead_deterministic(a, *lookahead_k);
    }
    if (with_min_lookahead) {
        report.min_lookahead = min_lookahead(a);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Brute-force oracle on marked words

namespace {

struct Trie {
    struct Node {
        std::map<int, std::size_t> children;
        std::vector<int> path;
        std::optional<std::vector<int>> first_word;  // first inserted word through this node
    };
    std::vector<Node> nodes{Node{}};

    void insert(const std::vector<int>& word) {
        std::size_t current = 0;
        for (std::size_t i = 0;; ++i) {
            if (!nodes[current].first_word) {
                nodes[current].first_word = word;
            }
            if (i == word.size()) {
                break;
            }
            auto it = nodes[current].children.find(word[i]);
            if (it == nodes[current].children.end()) {
                Node child;
                child.path = nodes[current].path;
                child.path.push_back(word[i]);
                nodes.push_back(std::move(child));
                it = nodes[current].children.emplace(word[i], nodes.size() - 1).first;
            }
            current = it->second;
        }
    }

    /// Trie nodes at exactly `depth` steps below `node`.
    void descendants(std::size_t node, int depth, std::vector<std::size_t>& out) const {
        if (depth == 0) {
            out.push_back(node);
            return;
        }
        for (const auto& [x, child] : nodes[node].children) {
            descendants(child, depth - 1, out);
        }
    }
};

bool empty_language(const Regex& e) {
    switch (e.kind()) {
    case RegexKind::Empty:
        return true;
    case RegexKind::Epsilon:
    case RegexKind::Literal:
    case RegexKind::Star:
        return false;
    case RegexKind::Union:
        return empty_language(e.left()) && empty_language(e.right());
    case RegexKind::Concat:
        return empty_language(e.left()) || empty_language(e.right());
    }
    return true;
}

using Words = std::set<std::vector<int>>;

Words language(const Regex& e, std::size_t n) { return marked_words(MarkedExpression{e, {}}, n); }

Words concat_bounded(const Words& lhs, const Words& rhs, std::size_t n) {
    std::vector<std::vector<const std::vector<int>*>> by_length(n + 1);
    for (const std::vector<int>& v : rhs) {
        if (v.size() <= n) {
            by_length[v.size()].push_back(&v);
        }
    }
    Words out;
    for (const std::vector<int>& u : lhs) {
        for (std::size_t len = 0; u.size() + len <= n; ++len) {
            for (const std::vector<int>* v : by_length[len]) {
                std::vector<int> w = u;
                w.insert(w.end(), v->begin(), v->end());
                out.insert(std::move(w));
            }
        }
    }
    return out;
}

/// Prefixes of L(e) with at most n positions, computed on the syntax tree.
Words prefixes(const Regex& e, std::size_t n) {
    if (empty_language(e)) {
        return {};
    }
    switch (e.kind()) {
    case RegexKind::Empty:
        return {};
    case RegexKind::Epsilon:
        return {{}};
    case RegexKind::Literal:
        return n == 0 ? Words{{}} : Words{{}, {e.index()}};
    case RegexKind::Union: {
        Words out = prefixes(e.left(), n);
        out.merge(prefixes(e.right(), n));
        return out;
    }
    case RegexKind::Concat: {
        Words out = prefixes(e.left(), n);
        out.merge(concat_bounded(language(e.left(), n), prefixes(e.right(), n), n));
        return out;
    }
    case RegexKind::Star:
        return concat_bounded(language(e, n), prefixes(e.child(), n), n);
    }
    return {};
}

std::string dropped(const std::vector<int>& path, std::size_t from, const MarkedExpression& marked) {
    std::string text;
    for (std::size_t i = from; i < path.size(); ++i) {
        text += marked.block_at(path[i]).letters();
    }
    return text;
}

} // namespace

OracleResult marked_language_oracle(OracleKind kind, const Regex& expression, int k, std::size_t max_length) {
    if (k < 1) {
        throw PreconditionError("oracle k must be positive");
    }
    const MarkedExpression marked = mark(expression);
    if (kind == OracleKind::Lookahead && expression.width() > 1) {
        throw PreconditionError("lookahead oracle requires width-1 literals");
    }
    if (kind == OracleKind::Block) {
        for (const Position& p : marked.positions) {
            if (p.block.size() > static_cast<std::size_t>(k)) {
                OracleWitness w;
                w.first_position = w.second_position = p.index;
                w.reason = "block " + p.block.text() + " is wider than k=" + std::to_string(k);
                return OracleResult{false, std::move(w)};
            }
        }
    }

    Trie trie;
    for (const std::vector<int>& word : prefixes(marked.ast, max_length)) {
        trie.insert(word);
    }

    for (std::size_t node = 0; node < trie.nodes.size(); ++node) {
        const auto& children = trie.nodes[node].children;
        for (auto i = children.begin(); i != children.end(); ++i) {
            for (auto j = std::next(i); j != children.end(); ++j) {
                const auto& [x, cx] = *i;
                const auto& [y, cy] = *j;
                OracleWitness w;
                w.prefix = trie.nodes[node].path;
                w.first_position = x;
                w.second_position = y;
                if (kind == OracleKind::Block) {
                    const Block& bx = marked.block_at(x);
                    const Block& by = marked.block_at(y);
                    if (bx.is_prefix_of(by) || by.is_prefix_of(bx)) {
                        w.first_word = trie.nodes[cx].first_word.value();
                        w.second_word = trie.nodes[cy].first_word.value();
                        w.reason = bx.text() + " and " + by.text() + " are prefix-related";
                        return OracleResult{false, std::move(w)};
                    }
                    continue;
                }
                std::vector<std::size_t> ends_x;
                std::vector<std::size_t> ends_y;
                trie.descendants(cx, k - 1, ends_x);
                trie.descendants(cy, k - 1, ends_y);
                std::map<std::string, std::size_t> lookahead_y;
                for (std::size_t e : ends_y) {
                    lookahead_y.emplace(dropped(trie.nodes[e].path, w.prefix.size(), marked), e);
                }
                for (std::size_t e : ends_x) {
                    const std::string text = dropped(trie.nodes[e].path, w.prefix.size(), marked);
                    auto match = lookahead_y.find(text);
                    if (match != lookahead_y.end()) {
                        w.first_word = trie.nodes[e].first_word.value();
                        w.second_word = trie.nodes[match->second].first_word.value();
                        w.reason = "both continuations read " + text;
                        return OracleResult{false, std::move(w)};
                    }
                }
            }
        }
    }
    return OracleResult{true, std::nullopt};
}

} // namespace blockdet
