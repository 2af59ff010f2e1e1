#include <doctest.h>

#include <algorithm>
#include <map>

#include "blockdet/error.hpp"
#include "blockdet/syntax.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace blockdet;
using namespace blockdet::testing;

TEST_CASE("blocks") {
    CHECK(Block("ab").text() == "[ab]");
    CHECK(Block('a').text() == "a");
    CHECK(Block("a").is_prefix_of(Block("ab")));
    CHECK(Block("ab").is_prefix_of(Block("ab")));
    CHECK_FALSE(Block("ab").is_prefix_of(Block("a")));
    CHECK_FALSE(Block("b").is_prefix_of(Block("ab")));
    CHECK((Block("ab") + Block('c')).letters() == "abc");
    CHECK_THROWS_AS(Block(""), Error);
    CHECK_THROWS_AS(Block("a-"), Error);
    CHECK_NOTHROW(Block("a1"));
}

TEST_CASE("parser precedence and printing") {
    const Regex e = parse("a+b c*");
    REQUIRE(e.kind() == RegexKind::Union);
    CHECK(e.right().kind() == RegexKind::Concat);
    CHECK(e.right().right().kind() == RegexKind::Star);
    CHECK(to_string(parse("(a+b)*a+eps")) == "(a+b)*a+eps");
    CHECK(to_string(parse("((a))")) == "a");
    CHECK(to_string(parse("[aa]*([ab]b+ba)b*")) == "[aa]*([ab]b+ba)b*");
    CHECK(parse("a.b") == parse("ab"));
    CHECK(parse("eps").kind() == RegexKind::Epsilon);
    CHECK(parse("empty").kind() == RegexKind::Empty);
}

TEST_CASE("parse errors carry an offset") {
    for (const char* bad : {"", "(a", "a+", "[ab", "[]", "a)", "*a", "a+*", "#"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse(bad), ParseError);
    }
    try {
        parse("ab)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("width, blocks, literal count") {
    const Regex e = parse("[aa]*([ab]b+ba)b*");
    CHECK(e.width() == 2);
    CHECK(e.literal_count() == 6);
    CHECK(e.blocks() == std::set<Block>{Block("aa"), Block("ab"), Block('a'), Block('b')});
    CHECK(e.is_trimmed());
    CHECK_FALSE(parse("a+empty").is_trimmed());
    CHECK(parse("empty").is_trimmed());
}

TEST_CASE("marking indexes literals left to right") {
    const MarkedExpression m = mark(parse("[aa]*([ab]b+ba)b*"));
    REQUIRE(m.size() == 6);
    CHECK(to_marked_string(m.ast) == "[aa]_1*([ab]_2b_3+b_4a_5)b_6*");
    CHECK(m.block_at(1) == Block("aa"));
    CHECK(m.block_at(5) == Block('a'));
    CHECK(m.positions[3] == Position{4, Block('b')});
    CHECK_THROWS_AS(mark(parse("a+empty")), PreconditionError);
}

TEST_CASE("positions of b*a(b*a)*(a+b)") {
    const PositionTable t = positions(mark(parse("b*a(b*a)*(a+b)")));
    CHECK_FALSE(t.nullable);
    CHECK(t.first == std::set<int>{1, 2});
    CHECK(t.last == std::set<int>{5, 6});
    CHECK(t.follow.at(1) == std::set<int>{1, 2});
    CHECK(t.follow.at(2) == std::set<int>{3, 4, 5, 6});
    CHECK(t.follow.at(3) == std::set<int>{3, 4});
    CHECK(t.follow.at(4) == std::set<int>{3, 4, 5, 6});
    CHECK(t.follow.at(5).empty());
    CHECK(t.follow.at(6).empty());
}

TEST_CASE("power and concat_all") {
    CHECK(to_string(power(Block('b'), 3)) == "bbb");
    CHECK(power(Block('b'), 0).kind() == RegexKind::Epsilon);
    CHECK(concat_all({}).kind() == RegexKind::Epsilon);
    CHECK(to_string(concat_all({parse("a"), parse("b+c")})) == "a(b+c)");
}

TEST_CASE("property: marked words match the reference marked language") {
    Rng rng(11);
    for (int round = 0; round < 150; ++round) {
        const Regex e = random_expression(rng, {6, 3, "ab"});
        const MarkedExpression m = mark(e);
        CAPTURE(to_marked_string(m.ast));
        CHECK(marked_words(m, 6) == marked_language(m.ast, 6));
    }
}

TEST_CASE("property: dropping marked words yields the letter language") {
    Rng rng(12);
    for (int round = 0; round < 100; ++round) {
        const Regex e = random_expression(rng, {5, 2, "ab"});
        const MarkedExpression m = mark(e);
        std::set<std::string> spelled;
        for (const auto& w : marked_language(m.ast, 6)) {
            const std::string text = spell(w, m.ast);
            if (text.size() <= 6) {
                spelled.insert(text);
            }
        }
        CAPTURE(to_string(e));
        CHECK(spelled == expression_language(e, 6));
    }
}

namespace {

struct Observed {
    bool nullable = false;
    std::set<int> first;
    std::map<int, std::set<int>> follow;
};

Observed observe(const MarkedExpression& m, std::size_t n) {
    Observed out;
    for (const auto& w : marked_language(m.ast, n)) {
        out.nullable = out.nullable || w.empty();
        if (!w.empty()) {
            out.first.insert(w.front());
        }
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            out.follow[w[i]].insert(w[i + 1]);
        }
    }
    return out;
}

} // namespace

TEST_CASE("property: First and Follow contain what enumeration to length 6 sees") {
    Rng rng(13);
    for (int round = 0; round < 120; ++round) {
        const Regex e = random_expression(rng, {8, 2, "abc"});
        const MarkedExpression m = mark(e);
        const PositionTable t = positions(m);
        const Observed seen = observe(m, 6);
        CAPTURE(to_marked_string(m.ast));
        CHECK(t.nullable == seen.nullable);
        for (int x : seen.first) {
            CHECK(t.first.contains(x));
        }
        for (const auto& [x, ys] : seen.follow) {
            for (int y : ys) {
                CHECK(t.follow.at(x).contains(y));
            }
        }
    }
}

// A shortest word through a follow pair (x, y) walks a simple path to x, steps
// to y, then a simple path to the end: at most 2n positions.
TEST_CASE("property: First and Follow equal enumeration to length 2n") {
    Rng rng(15);
    for (int round = 0; round < 120; ++round) {
        const Regex e = random_expression(rng, {4, 2, "abc"});
        const MarkedExpression m = mark(e);
        const PositionTable t = positions(m);
        const Observed seen = observe(m, std::max<std::size_t>(2 * m.size(), 1));
        CAPTURE(to_marked_string(m.ast));
        CHECK(t.nullable == seen.nullable);
        CHECK(t.first == seen.first);
        for (const auto& [x, ys] : t.follow) {
            const auto it = seen.follow.find(x);
            CHECK((it == seen.follow.end() ? std::set<int>{} : it->second) == ys);
        }
    }
}

TEST_CASE("property: drop and mark are inverse") {
    Rng rng(14);
    for (int round = 0; round < 100; ++round) {
        const Regex e = random_expression(rng, {6, 3, "abc"});
        CHECK(drop(mark(e)) == e);
        const MarkedExpression m = mark(e);
        CHECK(mark(drop(m)).ast == m.ast);
        CHECK(parse(to_string(e)) == e);
    }
    for (const std::string& text : expression_corpus()) {
        const Regex e = parse(text);
        CHECK(drop(mark(e)) == e);
    }
}
