#include <doctest.h>

#include "blockdet/bkw.hpp"
#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"
#include "blockdet/witnesses.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace blockdet;
using namespace blockdet::testing;

namespace {

std::set<std::set<State>> nontrivial(const OrbitDecomposition& d) {
    std::set<std::set<State>> out;
    for (const Orbit& o : d.orbits) {
        if (!o.trivial) {
            out.insert(o.states);
        }
    }
    return out;
}

BlockAutomaton relabel(const BlockAutomaton& a, const std::string& prefix) {
    BlockAutomaton out;
    for (const State& q : a.states()) {
        out.add_state(prefix + q);
    }
    for (const State& q : a.initials()) {
        out.add_initial(prefix + q);
    }
    for (const State& q : a.finals()) {
        out.add_final(prefix + q);
    }
    for (const Transition& t : a.transitions()) {
        out.add_transition(prefix + t.from, t.label, prefix + t.to);
    }
    return out;
}

} // namespace

TEST_CASE("orbits of Fig. 4") {
    const OrbitDecomposition d = orbit_decomposition(fig4_minimal());
    CHECK(d.orbits.size() == 4);
    CHECK(nontrivial(d) == std::set<std::set<State>>{{"i", "1"}, {"4"}});
    CHECK(d.orbit("i").out_gates == std::set<State>{"i", "1"});
    CHECK(d.orbit("i").in_gates == std::set<State>{"i"});
    CHECK(d.orbit("2").trivial);
}

TEST_CASE("orbits of A_2") {
    const OrbitDecomposition d = orbit_decomposition(block_A(2));
    CHECK(nontrivial(d) == std::set<std::set<State>>{{"beta_2", "alpha_2", "alpha_1"}});
    CHECK(d.orbit("beta_1").trivial);
    CHECK(d.orbit("f").trivial);
    BlockAutomaton single;
    single.add_initial("p");
    const OrbitDecomposition s = orbit_decomposition(single);
    REQUIRE(s.orbits.size() == 1);
    CHECK(s.orbits[0].trivial);
}

TEST_CASE("orbit property") {
    const OrbitPropertyResult f4 = orbit_property(fig4_minimal());
    CHECK_FALSE(f4.holds);
    REQUIRE(f4.violation);
    CHECK(f4.violation->orbit == std::set<State>{"i", "1"});
    CHECK_FALSE(f4.violation->describe().empty());
    CHECK(orbit_property(fig1_glushkov()).holds);
    const BlockAutomaton loop = make_automaton({"p"}, {"q"}, {{"p", "a", "p"}, {"p", "b", "q"}});
    CHECK(orbit_property(loop).holds);
}

TEST_CASE("consistent symbols") {
    CHECK(consistent_symbols(fig4_minimal()) == std::set<Block>{Block('b')});
    const BlockAutomaton loop = make_automaton({"p"}, {"p"}, {{"p", "a", "p"}});
    CHECK(consistent_symbols(loop) == std::set<Block>{Block('a')});
    const BlockAutomaton split =
        make_automaton({"p"}, {"p", "q"}, {{"p", "b", "q"}, {"p", "a", "r"}, {"q", "a", "p"}, {"r", "b", "q"}});
    CHECK(consistent_symbols(split).empty());
}

TEST_CASE("S-cut") {
    const BlockAutomaton cut = s_cut(fig4_minimal(), {Block('b')});
    BlockAutomaton expected = fig4_minimal();
    expected = make_automaton({"i"}, {"4"},
                              {{"i", "a", "1"}, {"i", "b", "2"}, {"1", "a", "i"}, {"1", "b", "3"}, {"2", "a", "4"},
                               {"3", "b", "4"}});
    CHECK(cut.same_structure(expected));
    CHECK(s_cut(fig4_minimal(), {}).same_structure(fig4_minimal()));
    const BlockAutomaton loop = make_automaton({"p"}, {"p"}, {{"p", "a", "p"}});
    const BlockAutomaton bare = s_cut(loop, {Block('a')});
    CHECK(bare.transitions().empty());
    CHECK(bare.finals() == std::set<State>{"p"});
    CHECK_THROWS_AS(s_cut(fig4_minimal(), {Block('a')}), PreconditionError);
}

TEST_CASE("orbit automata") {
    const BlockAutomaton o = orbit_automaton(fig4_minimal(), "i");
    CHECK(o.same_structure(make_automaton({"i"}, {"i", "1"}, {{"i", "a", "1"}, {"1", "a", "i"}})));
    const BlockAutomaton t = orbit_automaton(fig4_minimal(), "2");
    CHECK(t.states() == std::set<State>{"2"});
    CHECK(t.finals() == std::set<State>{"2"});
    CHECK(t.transitions().empty());
    // The restriction keeps the a-loop on alpha_2 next to the three-state cycle.
    const BlockAutomaton a2 = orbit_automaton(block_A(2), "beta_2");
    CHECK(a2.same_structure(make_automaton(
        {"beta_2"}, {"beta_2", "alpha_2", "alpha_1"},
        {{"beta_2", "a", "alpha_2"}, {"alpha_2", "a", "alpha_2"}, {"alpha_2", "b", "alpha_1"}, {"alpha_1", "c", "beta_2"}})));
}

TEST_CASE("BKW test") {
    const BkwTrace f4 = bkw_test(fig4_minimal());
    CHECK_FALSE(f4.verdict);
    REQUIRE(f4.root.failure);
    CHECK(*f4.root.failure == BkwFailure::OrbitProperty);
    REQUIRE(f4.root.violation);
    CHECK(f4.root.violation->orbit == std::set<State>{"i", "1"});
    CHECK(f4.root.consistent == std::set<Block>{Block('b')});
    CHECK_THROWS_AS(bkw_test(fig1_glushkov()), PreconditionError);
    CHECK_FALSE(bkw_test(minimal_dfa(fig2_glushkov())).verdict);
    CHECK(bkw_test(minimal_dfa(fig1_glushkov())).verdict);
    CHECK(to_string(BkwFailure::NoConsistentSymbol) == "no-consistent-symbol");
}

TEST_CASE("a single orbit without consistent symbols fails") {
    // Four states in one orbit; the two finals disagree on both letters.
    const BlockAutomaton m = minimal_dfa(glushkov(parse("(a+b)*a(a+b)")).automaton);
    REQUIRE(m.states().size() == 4);
    CHECK(orbit_decomposition(m).orbits.size() == 1);
    CHECK(consistent_symbols(m).empty());
    const BkwTrace trace = bkw_test(m);
    CHECK_FALSE(trace.verdict);
    REQUIRE(trace.root.failure);
    CHECK(*trace.root.failure == BkwFailure::NoConsistentSymbol);
}

TEST_CASE("one-unambiguity") {
    CHECK(is_one_unambiguous(parse("(a+b)*a+eps")));
    CHECK_FALSE(is_one_unambiguous(parse("[aa]*([ab]b+ba)b*")));
    CHECK(is_one_unambiguous(parse("eps")));
    CHECK_FALSE(is_one_unambiguous(parse("b*a(b*a)*(a+b)")));
    CHECK_FALSE(is_one_unambiguous(parse("(a+b)*a(a+b)")));
    CHECK(is_one_unambiguous(parse("(a+b)*a")));
}

TEST_CASE("block certificates") {
    CHECK(certify_k_block_language(block_B(2), 2).verdict);
    CHECK(certify_k_block_language(fig7_eliminated(), 2).verdict);
    const BlockCertificate f4 = certify_k_block_language(fig4_minimal(), 1);
    CHECK_FALSE(f4.verdict);
    REQUIRE(f4.bkw);
    CHECK_FALSE(f4.bkw->verdict);
    const BlockCertificate wide = certify_k_block_language(block_B(3), 2);
    CHECK_FALSE(wide.verdict);
    CHECK_FALSE(wide.bkw);
    const BlockCertificate b3 = certify_k_block_language(block_B(3), 3);
    std::set<Block> images;
    for (const auto& [block, symbol] : b3.abstraction) {
        CHECK(symbol.size() == 1);
        images.insert(symbol);
    }
    CHECK(images.size() == b3.abstraction.size());
    const BlockAutomaton b3_automaton = block_B(3);
    for (const Transition& t : b3_automaton.transitions()) {
        CHECK(b3.abstraction.contains(t.label));
    }
}

TEST_CASE("property: deterministic Glushkov automata pass BKW") {
    Rng rng(51);
    int deterministic = 0;
    std::vector<Regex> corpus;
    for (const std::string& text : expression_corpus()) {
        corpus.push_back(parse(text));
    }
    for (int round = 0; round < 400; ++round) {
        corpus.push_back(random_expression(rng, {6, 1, "abc"}));
    }
    for (const Regex& e : corpus) {
        const BlockAutomaton g = glushkov(e).automaton;
        if (e.width() > 1 || !is_deterministic(g)) {
            continue;
        }
        ++deterministic;
        CAPTURE(to_string(e));
        CHECK(bkw_test(g).verdict);
        CHECK(is_one_unambiguous(e));
    }
    CHECK(deterministic > 50);
}

TEST_CASE("property: BKW is invariant under state renaming") {
    Rng rng(52);
    for (int round = 0; round < 120; ++round) {
        const BlockAutomaton a = random_automaton(rng, {5, 9, 1, "ab", true});
        const bool verdict = bkw_test(minimize(trim(a))).verdict;
        CHECK(bkw_test(minimize(trim(relabel(a, "z")))).verdict == verdict);
    }
}

TEST_CASE("property: passing BKW carries over to the minimal automaton") {
    Rng rng(53);
    int passing = 0;
    for (int round = 0; round < 200; ++round) {
        const BlockAutomaton a = trim(random_automaton(rng, {6, 10, 1, "ab", true}));
        if (a.states().empty() || !bkw_test(a).verdict) {
            continue;
        }
        ++passing;
        CHECK(bkw_test(minimize(a)).verdict);
    }
    CHECK(passing > 20);
}
