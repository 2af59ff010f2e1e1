#include "fixtures.hpp"

#include "blockdet/glushkov.hpp"
#include "blockdet/witnesses.hpp"

namespace blockdet::testing {

BlockAutomaton make_automaton(const std::vector<std::string>& initials, const std::vector<std::string>& finals,
                              const std::vector<Edge>& edges) {
    BlockAutomaton a;
    for (const auto& q : initials) {
        a.add_initial(q);
    }
    for (const auto& q : finals) {
        a.add_final(q);
    }
    for (const auto& [from, label, to] : edges) {
        a.add_transition(from, Block(label), to);
    }
    return a;
}

BlockAutomaton fig1_glushkov() {
    return make_automaton({"i"}, {"i", "a_3"},
                          {{"i", "a", "a_1"},
                           {"i", "b", "b_2"},
                           {"i", "a", "a_3"},
                           {"a_1", "a", "a_1"},
                           {"a_1", "b", "b_2"},
                           {"a_1", "a", "a_3"},
                           {"b_2", "a", "a_1"},
                           {"b_2", "b", "b_2"},
                           {"b_2", "a", "a_3"}});
}

BlockAutomaton fig2_glushkov() {
    return make_automaton({"i"}, {"a_5", "b_6"},
                          {{"i", "b", "b_1"},
                           {"i", "a", "a_2"},
                           {"b_1", "b", "b_1"},
                           {"b_1", "a", "a_2"},
                           {"a_2", "b", "b_3"},
                           {"a_2", "a", "a_4"},
                           {"a_2", "a", "a_5"},
                           {"a_2", "b", "b_6"},
                           {"b_3", "b", "b_3"},
                           {"b_3", "a", "a_4"},
                           {"a_4", "b", "b_3"},
                           {"a_4", "a", "a_4"},
                           {"a_4", "a", "a_5"},
                           {"a_4", "b", "b_6"}});
}

BlockAutomaton fig3_glushkov() {
    return make_automaton({"i"}, {"b_3", "a_5", "b_6"},
                          {{"i", "aa", "aa_1"},
                           {"i", "ab", "ab_2"},
                           {"i", "b", "b_4"},
                           {"aa_1", "aa", "aa_1"},
                           {"aa_1", "ab", "ab_2"},
                           {"aa_1", "b", "b_4"},
                           {"ab_2", "b", "b_3"},
                           {"b_3", "b", "b_6"},
                           {"b_4", "a", "a_5"},
                           {"a_5", "b", "b_6"},
                           {"b_6", "b", "b_6"}});
}

BlockAutomaton fig4_minimal() {
    return make_automaton({"i"}, {"4"},
                          {{"i", "a", "1"},
                           {"i", "b", "2"},
                           {"1", "a", "i"},
                           {"1", "b", "3"},
                           {"2", "a", "4"},
                           {"3", "b", "4"},
                           {"4", "b", "4"}});
}

BlockAutomaton fig6_before() {
    return make_automaton({"r1", "r2"}, {"s1", "s2"},
                          {{"r1", "a", "q"},
                           {"r2", "b", "q"},
                           {"q", "c", "s1"},
                           {"q", "d", "s2"},
                           {"s1", "e", "q"}});
}

BlockAutomaton fig6_after() {
    BlockAutomaton a = make_automaton({"r1", "r2"}, {"s1", "s2"},
                                      {{"r1", "ac", "s1"},
                                       {"r1", "ad", "s2"},
                                       {"r2", "bc", "s1"},
                                       {"r2", "bd", "s2"},
                                       {"s1", "ec", "s1"},
                                       {"s1", "ed", "s2"}});
    return a;
}

BlockAutomaton fig7_minimal() {
    return make_automaton({"i"}, {"1", "2"}, {{"i", "a", "1"}, {"i", "b", "2"}, {"1", "b", "i"}});
}

BlockAutomaton fig7_standardized() {
    return make_automaton({"i'"}, {"1", "2"},
                          {{"i'", "a", "1"}, {"i'", "b", "2"}, {"i", "a", "1"}, {"i", "b", "2"}, {"1", "b", "i"}});
}

BlockAutomaton fig7_eliminated() {
    return make_automaton({"i'"}, {"1", "2"},
                          {{"i'", "a", "1"}, {"i'", "b", "2"}, {"1", "ba", "1"}, {"1", "bb", "2"}});
}

const std::vector<std::string>& block_corpus() {
    static const std::vector<std::string> corpus{
        "[aa]*([ab]b+ba)b*",
        "([aba]+[abb])*[aa]",
        "(a([bc]+eps))*(eps+[bb])",
        "(a([bbc]+eps))*(eps+[bbb])",
        "(a+b)*a+eps",
        "b*a(b*a)*(a+b)",
        "(aaaaa)*(eps+aa)",
        "[ab]+[ac]",
        "([abc]+[abd])*",
        "(a+[ba])*[bb]",
        "[ab]*[ba]",
        "([aa]+b)*a",
    };
    return corpus;
}

const std::vector<std::string>& expression_corpus() {
    static const std::vector<std::string> corpus{
        "(a+b)*a+eps",
        "b*a(b*a)*(a+b)",
        "[aa]*([ab]b+ba)b*",
        "(a+b)*a",
        "a*b*",
        "(ab+b)*",
        "(a+eps)(b+eps)a",
        "((a+b)(a+b))*",
        "(aaa)*(eps+a)",
        "a(ba)*+b",
        "[ab]+[ac]",
        "([abc]+[abd])*",
        "(a+[ba])*[bb]",
        "eps",
        "a",
    };
    return corpus;
}

std::vector<BlockAutomaton> automaton_corpus() {
    std::vector<BlockAutomaton> corpus{fig1_glushkov(), fig2_glushkov(), fig3_glushkov(), fig4_minimal(),
                                       fig6_before(),   fig6_after(),    fig7_minimal(),  fig7_standardized(),
                                       fig7_eliminated()};
    for (int k = 2; k <= 4; ++k) {
        corpus.push_back(hanwood_M(k));
        corpus.push_back(block_A(k));
        corpus.push_back(block_B(k));
    }
    for (int j = 1; j <= 4; ++j) {
        corpus.push_back(unary_A(j));
    }
    for (const std::string& e : expression_corpus()) {
        corpus.push_back(glushkov(parse(e)).automaton);
    }
    return corpus;
}

} // namespace blockdet::testing
