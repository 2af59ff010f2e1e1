#include "blockdet/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <utility>

#include "blockdet/error.hpp"

namespace blockdet {

void BlockAutomaton::add_initial(const State& state) {
    states_.insert(state);
    initials_.insert(state);
}

void BlockAutomaton::add_final(const State& state) {
    states_.insert(state);
    finals_.insert(state);
}

void BlockAutomaton::add_transition(const State& from, const Block& label, const State& to) {
    states_.insert(from);
    states_.insert(to);
    alphabet_.insert(label);
    transitions_.insert(Transition{from, label, to});
}

void BlockAutomaton::set_initials(std::set<State> initials) {
    states_.insert(initials.begin(), initials.end());
    initials_ = std::move(initials);
}

void BlockAutomaton::set_finals(std::set<State> finals) {
    states_.insert(finals.begin(), finals.end());
    finals_ = std::move(finals);
}

std::vector<Transition> BlockAutomaton::outgoing(const State& q) const {
    std::vector<Transition> out;
    // Transitions are ordered by source first, so the ones leaving q are contiguous.
    for (auto it = transitions_.lower_bound(Transition{q, Block('0'), {}}); it != transitions_.end() && it->from == q;
         ++it) {
        out.push_back(*it);
    }
    return out;
}

std::vector<Transition> BlockAutomaton::incoming(const State& q) const {
    std::vector<Transition> in;
    for (const Transition& t : transitions_) {
        if (t.to == q) {
            in.push_back(t);
        }
    }
    return in;
}

std::size_t BlockAutomaton::width() const {
    std::size_t width = 0;
    for (const Transition& t : transitions_) {
        width = std::max(width, t.label.size());
    }
    return width;
}

bool BlockAutomaton::same_structure(const BlockAutomaton& other) const {
    return states_ == other.states_ && initials_ == other.initials_ && finals_ == other.finals_ &&
           transitions_ == other.transitions_;
}

State BlockAutomaton::fresh_state(std::string_view hint) const {
    State candidate = "$" + std::string(hint);
    for (int n = 1; states_.contains(candidate); ++n) {
        candidate = "$" + std::string(hint) + std::to_string(n);
    }
    return candidate;
}

std::set<char> base_letters(const BlockAutomaton& a) {
    std::set<char> letters;
    for (const Block& b : a.alphabet()) {
        letters.insert(b.letters().begin(), b.letters().end());
    }
    for (const Transition& t : a.transitions()) {
        letters.insert(t.label.letters().begin(), t.label.letters().end());
    }
    return letters;
}

bool accepts(const BlockAutomaton& a, std::string_view word) {
    std::set<std::pair<State, std::size_t>> seen;
    std::deque<std::pair<State, std::size_t>> queue;
    for (const State& q : a.initials()) {
        if (seen.emplace(q, 0).second) {
            queue.emplace_back(q, 0);
        }
    }
    while (!queue.empty()) {
        auto [q, offset] = queue.front();
        queue.pop_front();
        if (offset == word.size() && a.is_final(q)) {
            return true;
        }
        for (const Transition& t : a.outgoing(q)) {
            if (word.substr(offset).starts_with(t.label.letters())) {
                std::pair<State, std::size_t> next{t.to, offset + t.label.size()};
                if (seen.insert(next).second) {
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return false;
}

namespace {

std::set<State> forward_reach(const BlockAutomaton& a) {
    std::set<State> seen(a.initials().begin(), a.initials().end());
    std::vector<State> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
        State q = std::move(stack.back());
        stack.pop_back();
        for (const Transition& t : a.outgoing(q)) {
            if (seen.insert(t.to).second) {
                stack.push_back(t.to);
            }
        }
    }
    return seen;
}

std::set<State> backward_reach(const BlockAutomaton& a) {
    std::map<State, std::vector<State>> predecessors;
    for (const Transition& t : a.transitions()) {
        predecessors[t.to].push_back(t.from);
    }
    std::set<State> seen(a.finals().begin(), a.finals().end());
    std::vector<State> stack(seen.begin(), seen.end());
    while (!stack.empty()) {
        State q = std::move(stack.back());
        stack.pop_back();
        for (const State& p : predecessors[q]) {
            if (seen.insert(p).second) {
                stack.push_back(p);
            }
        }
    }
    return seen;
}

BlockAutomaton restrict_to(const BlockAutomaton& a, const std::set<State>& keep) {
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    for (const State& q : keep) {
        out.add_state(q);
        if (a.is_initial(q)) {
            out.add_initial(q);
        }
        if (a.is_final(q)) {
            out.add_final(q);
        }
    }
    for (const Transition& t : a.transitions()) {
        if (keep.contains(t.from) && keep.contains(t.to)) {
            out.add_transition(t);
        }
    }
    return out;
}

bool has_deterministic_shape(const BlockAutomaton& a) {
    if (a.initials().size() > 1) {
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

void require_deterministic(const BlockAutomaton& a, std::string_view operation) {
    if (!has_deterministic_shape(a) || (a.initials().empty() && !a.states().empty())) {
        throw PreconditionError(std::string(operation) + " requires a deterministic automaton");
    }
}

std::string subset_name(const std::set<State>& subset) {
    std::string name = "{";
    bool first = true;
    for (const State& q : subset) {
        if (!first) {
            name += ",";
        }
        name += q;
        first = false;
    }
    return name + "}";
}

} // namespace

BlockAutomaton trim(const BlockAutomaton& a) {
    std::set<State> forward = forward_reach(a);
    std::set<State> backward = backward_reach(a);
    std::set<State> useful;
    std::set_intersection(forward.begin(), forward.end(), backward.begin(), backward.end(),
                          std::inserter(useful, useful.end()));
    return restrict_to(a, useful);
}

BlockAutomaton standardize(const BlockAutomaton& a) {
    BlockAutomaton out = a;
    const State start = a.fresh_state("i");
    out.set_initials({start});
    bool accepts_empty = false;
    for (const State& i : a.initials()) {
        accepts_empty = accepts_empty || a.is_final(i);
        for (const Transition& t : a.outgoing(i)) {
            out.add_transition(start, t.label, t.to);
        }
    }
    if (accepts_empty) {
        out.add_final(start);
    }
    return out;
}

BlockAutomaton expand_blocks(const BlockAutomaton& a) {
    BlockAutomaton out;
    for (const State& q : a.states()) {
        out.add_state(q);
    }
    out.set_initials(a.initials());
    out.set_finals(a.finals());
    for (const Block& b : a.alphabet()) {
        for (char c : b.letters()) {
            out.add_symbol(Block(c));
        }
    }
    for (const Transition& t : a.transitions()) {
        const std::string& letters = t.label.letters();
        State current = t.from;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            State next = out.fresh_state("x");
            out.add_transition(current, Block(letters[i]), next);
            current = std::move(next);
        }
        out.add_transition(current, Block(letters.back()), t.to);
    }
    return out;
}

BlockAutomaton determinize(const BlockAutomaton& a) {
    if (a.width() > 1) {
        throw PreconditionError("determinize requires a width-1 automaton; expand blocks first");
    }
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    if (a.initials().empty()) {
        return out;
    }

    std::map<std::set<State>, State> names;
    std::set<State> used_names;
    auto name_of = [&](const std::set<State>& subset) {
        auto it = names.find(subset);
        if (it != names.end()) {
            return it->second;
        }
        State name = subset_name(subset);
        for (int n = 1; used_names.contains(name); ++n) {
            name = subset_name(subset) + "#" + std::to_string(n);
        }
        used_names.insert(name);
        names.emplace(subset, name);
        return name;
    };

    std::deque<std::set<State>> queue{a.initials()};
    out.add_initial(name_of(a.initials()));
    std::set<std::set<State>> done;
    while (!queue.empty()) {
        std::set<State> subset = std::move(queue.front());
        queue.pop_front();
        if (!done.insert(subset).second) {
            continue;
        }
        const State source = name_of(subset);
        std::map<Block, std::set<State>> successors;
        for (const State& q : subset) {
            if (a.is_final(q)) {
                out.add_final(source);
            }
            for (const Transition& t : a.outgoing(q)) {
                successors[t.label].insert(t.to);
            }
        }
        for (auto& [label, target] : successors) {
            out.add_transition(source, label, name_of(target));
            if (!done.contains(target)) {
                queue.push_back(target);
            }
        }
    }
    return trim(out);
}

BlockAutomaton minimize(const BlockAutomaton& input) {
    require_deterministic(input, "minimize");
    BlockAutomaton a = trim(input);
    if (a.states().empty()) {
        return a;
    }

    std::map<State, int> cls;
    for (const State& q : a.states()) {
        cls[q] = a.is_final(q) ? 1 : 0;
    }
    std::size_t class_count = 0;
    for (;;) {
        using Signature = std::pair<int, std::vector<std::pair<Block, int>>>;
        std::map<Signature, int> ids;
        std::map<State, int> next;
        for (const State& q : a.states()) {
            Signature sig{cls[q], {}};
            for (const Transition& t : a.outgoing(q)) {
                sig.second.emplace_back(t.label, cls[t.to]);
            }
            auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next[q] = it->second;
        }
        cls = std::move(next);
        if (ids.size() == class_count) {
            break;
        }
        class_count = ids.size();
    }

    std::map<int, State> representative;
    for (const auto& [q, c] : cls) {
        representative.try_emplace(c, q);  // states iterate in order, so the least name wins
    }
    BlockAutomaton out;
    for (const Block& b : a.alphabet()) {
        out.add_symbol(b);
    }
    for (const State& q : a.states()) {
        const State& r = representative[cls[q]];
        out.add_state(r);
        if (a.is_initial(q)) {
            out.add_initial(r);
        }
        if (a.is_final(q)) {
            out.add_final(r);
        }
    }
    for (const Transition& t : a.transitions()) {
        out.add_transition(representative[cls[t.from]], t.label, representative[cls[t.to]]);
    }
    return out;
}

BlockAutomaton minimal_dfa(const BlockAutomaton& a) {
    return minimize(determinize(expand_blocks(a)));
}

std::string canonical_form(const BlockAutomaton& a) {
    require_deterministic(a, "isomorphic");
    std::ostringstream out;
    out << a.states().size() << ';';
    if (a.initials().empty()) {
        return out.str();
    }
    std::map<State, std::size_t> number;
    std::deque<State> queue{*a.initials().begin()};
    number.emplace(queue.front(), 0);
    while (!queue.empty()) {
        State q = std::move(queue.front());
        queue.pop_front();
        out << number[q] << (a.is_final(q) ? "F" : "N") << ':';
        for (const Transition& t : a.outgoing(q)) {
            auto [it, inserted] = number.emplace(t.to, number.size());
            if (inserted) {
                queue.push_back(t.to);
            }
            out << t.label.letters() << '>' << it->second << ',';
        }
        out << ';';
    }
    return out.str();
}

bool isomorphic(const BlockAutomaton& a, const BlockAutomaton& b) {
    return canonical_form(a) == canonical_form(b);
}

bool equivalent(const BlockAutomaton& a, const BlockAutomaton& b) {
    return isomorphic(minimal_dfa(a), minimal_dfa(b));
}

std::optional<std::string> distinguishing_word(const BlockAutomaton& a, const BlockAutomaton& b) {
    const BlockAutomaton da = minimal_dfa(a);
    const BlockAutomaton db = minimal_dfa(b);
    std::set<char> letters = base_letters(da);
    std::set<char> more = base_letters(db);
    letters.insert(more.begin(), more.end());

    // A missing state stands for the dead state of a partial automaton.
    using Config = std::pair<std::optional<State>, std::optional<State>>;
    auto start_of = [](const BlockAutomaton& d) -> std::optional<State> {
        if (d.initials().empty()) {
            return std::nullopt;
        }
        return *d.initials().begin();
    };
    auto step = [](const BlockAutomaton& d, const std::optional<State>& q, char c) -> std::optional<State> {
        if (!q) {
            return std::nullopt;
        }
        for (const Transition& t : d.outgoing(*q)) {
            if (t.label.letters()[0] == c) {
                return t.to;
            }
        }
        return std::nullopt;
    };
    auto is_final = [](const BlockAutomaton& d, const std::optional<State>& q) { return q && d.is_final(*q); };

    std::set<Config> seen;
    std::deque<std::pair<Config, std::string>> queue;
    Config start{start_of(da), start_of(db)};
    seen.insert(start);
    queue.emplace_back(start, "");
    while (!queue.empty()) {
        auto [config, word] = std::move(queue.front());
        queue.pop_front();
        if (is_final(da, config.first) != is_final(db, config.second)) {
            return word;
        }
        for (char c : letters) {
            Config next{step(da, config.first, c), step(db, config.second, c)};
            if (!next.first && !next.second) {
                continue;
            }
            if (seen.insert(next).second) {
                queue.emplace_back(next, word + c);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> enumerate(const BlockAutomaton& a, std::size_t max_length) {
    const BlockAutomaton e = expand_blocks(a);
    const std::set<char> letters = base_letters(e);
    std::vector<std::string> result;

    std::map<std::string, std::set<State>> level{{"", e.initials()}};
    for (std::size_t length = 0;; ++length) {
        for (const auto& [word, subset] : level) {
            if (std::any_of(subset.begin(), subset.end(), [&](const State& q) { return e.is_final(q); })) {
                result.push_back(word);
            }
        }
        if (length == max_length) {
            break;
        }
        std::map<std::string, std::set<State>> next;
        for (const auto& [word, subset] : level) {
            std::map<char, std::set<State>> successors;
            for (const State& q : subset) {
                for (const Transition& t : e.outgoing(q)) {
                    successors[t.label.letters()[0]].insert(t.to);
                }
            }
            for (auto& [c, targets] : successors) {
                next.emplace(word + c, std::move(targets));
            }
        }
        if (next.empty()) {
            break;
        }
        level = std::move(next);
    }
    return result;
}

} // namespace blockdet
