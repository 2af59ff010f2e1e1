#include <doctest.h>

#include "blockdet/bkw.hpp"
#include "blockdet/determinism.hpp"
#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"
#include "blockdet/transform.hpp"
#include "blockdet/witnesses.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace blockdet;
using namespace blockdet::testing;

TEST_CASE("family names round trip") {
    CHECK(all_families().size() == 9);
    for (Family f : all_families()) {
        CHECK(family_from_name(to_string(f)) == f);
    }
    CHECK_FALSE(family_from_name("nope"));
    CHECK(minimum_parameter(Family::HanwoodMk) == 2);
    CHECK(minimum_parameter(Family::UnaryAj) == 1);
}

TEST_CASE("A_2") {
    const BlockAutomaton expected = make_automaton(
        {"beta_2"}, {"beta_2", "alpha_2", "f"},
        {{"beta_2", "a", "alpha_2"}, {"beta_2", "b", "beta_1"}, {"beta_1", "b", "f"}, {"alpha_2", "a", "alpha_2"},
         {"alpha_2", "b", "alpha_1"}, {"alpha_1", "b", "f"}, {"alpha_1", "c", "beta_2"}});
    CHECK(block_A(2).same_structure(expected));
}

TEST_CASE("B_2") {
    const BlockAutomaton expected =
        make_automaton({"beta_2"}, {"beta_2", "alpha_2", "f"},
                       {{"beta_2", "bb", "f"}, {"beta_2", "a", "alpha_2"}, {"alpha_2", "a", "alpha_2"},
                        {"alpha_2", "bb", "f"}, {"alpha_2", "bc", "beta_2"}});
    CHECK(block_B(2).same_structure(expected));
    CHECK(block_B(1).width() == 1);
}

TEST_CASE("M_3") {
    const BlockAutomaton expected = make_automaton(
        {"q_3"}, {"3"},
        {{"q_3", "a", "q_2"}, {"q_2", "a", "q_1"}, {"q_1", "a", "q_3"}, {"q_3", "b", "1"}, {"q_1", "b", "2"},
         {"1", "a", "3"}, {"2", "b", "3"}, {"3", "b", "3"}});
    CHECK(hanwood_M(3).same_structure(expected));
}

TEST_CASE("unary A_2") {
    const BlockAutomaton a = unary_A(2);
    CHECK(a.states().size() == 5);
    CHECK(a.finals() == std::set<State>{"alpha_0", "alpha_2"});
    CHECK(a.initials() == std::set<State>{"alpha_0"});
    CHECK(a.transitions().size() == 5);
}

TEST_CASE("expressions") {
    CHECK(to_string(hanwood_E(3)) == "[aaa]*([aab]b+ba)b*");
    CHECK(to_string(hanwood_F(3)) == "(aa([aa]a)*([ab]a+bb)+ba)b*");
    CHECK(to_string(hanwood_F(2)) == "(a[aa]*([ab]a+bb)+ba)b*");
    CHECK(to_string(block_expression(2)) == "(a(eps+[bc]))*(eps+[bb])");
    CHECK(to_string(unary_E(2)) == "(aaaaa)*(eps+aa)");
}

TEST_CASE("counter-example") {
    CHECK(counterexample().same_structure(fig7_minimal()));
}

TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(hanwood_M(1), PreconditionError);
    CHECK_THROWS_AS(unary_A(0), PreconditionError);
    CHECK_THROWS_AS(build({Family::BlockAk, 0}), PreconditionError);
    CHECK_THROWS_AS(verify({Family::BlockAk, 7}), PreconditionError);
    CHECK(std::holds_alternative<Regex>(build({Family::HanwoodFkExpr, 2})));
    CHECK(std::holds_alternative<BlockAutomaton>(build({Family::BlockBk, 2})));
}

TEST_CASE("claim suites hold") {
    for (Family f : all_families()) {
        const int low = minimum_parameter(f);
        for (int p = low; p <= 4; ++p) {
            const WitnessReport report = verify({f, p});
            CAPTURE(to_string(f));
            CAPTURE(p);
            CHECK_FALSE(report.claims.empty());
            for (const Claim& c : report.claims) {
                CAPTURE(c.name);
                CAPTURE(c.detail);
                CHECK(c.holds);
            }
        }
    }
}

TEST_CASE("independent check: b^m in L(A_k) iff m = k") {
    for (int k = 2; k <= 5; ++k) {
        const std::set<std::string> language = path_language(block_A(k), k + 2);
        for (int m = 1; m <= k + 2; ++m) {
            CHECK(language.contains(std::string(static_cast<std::size_t>(m), 'b')) == (m == k));
        }
    }
}

TEST_CASE("unary A_j are deterministic, trimmed and minimal") {
    for (int j = 1; j <= 5; ++j) {
        const BlockAutomaton a = unary_A(j);
        CHECK(is_deterministic(a));
        CHECK(trim(a) == a);
        CHECK(isomorphic(minimize(a), a));
    }
}

TEST_CASE("narrower eliminations of A_k are never certified") {
    for (int k = 2; k <= 5; ++k) {
        const auto candidates = narrower_elimination_candidates(k);
        CHECK_FALSE(candidates.empty());
        for (const EliminationCandidate& c : candidates) {
            CHECK(c.automaton.width() <= static_cast<std::size_t>(k - 1));
            CHECK(equivalent(c.automaton, block_A(k)));
            CHECK_FALSE(c.certified);
            const BlockCertificate cert = certify_k_block_language(c.automaton, k - 1);
            CHECK_FALSE(cert.verdict);
            const bool failed_bkw = cert.bkw && !cert.bkw->verdict;
            CHECK((!cert.block_check.verdict || !cert.abstraction_deterministic || failed_bkw));
        }
    }
}

TEST_CASE("Fig. 7 family") {
    const BlockAutomaton m = minimal_dfa(counterexample());
    for (const State& q : m.states()) {
        CHECK_FALSE(eliminable(m, q));
    }
    const BlockAutomaton k = eliminate(standardize(counterexample()), "i");
    CHECK(certify_k_block_language(k, 2).verdict);
    CHECK(isomorphic(k, fig7_eliminated()));
}
