#include "blockdet/witnesses.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "blockdet/bkw.hpp"
#include "blockdet/determinism.hpp"
#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"
#include "blockdet/transform.hpp"

namespace blockdet {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    int minimum;
};

constexpr std::array<FamilyInfo, 9> kFamilies{{
    {Family::HanwoodMk, "hanwood_Mk", 2},
    {Family::HanwoodEkExpr, "hanwood_Ek_expr", 2},
    {Family::HanwoodFkExpr, "hanwood_Fk_expr", 2},
    {Family::BlockAk, "block_Ak", 1},
    {Family::BlockBk, "block_Bk", 1},
    {Family::BlockExpr, "block_expr", 1},
    {Family::UnaryAj, "unary_Aj", 1},
    {Family::UnaryEjExpr, "unary_Ej_expr", 1},
    {Family::CounterexampleFig7, "counterexample_fig7", 1},
}};

const FamilyInfo& info(Family family) {
    for (const FamilyInfo& entry : kFamilies) {
        if (entry.family == family) {
            return entry;
        }
    }
    throw Error("unknown witness family");
}

void require_parameter(Family family, int parameter) {
    const int minimum = info(family).minimum;
    if (parameter < minimum) {
        throw PreconditionError(std::string(info(family).name) + " requires a parameter >= " +
                                std::to_string(minimum) + ", got " + std::to_string(parameter));
    }
}

std::string indexed(std::string_view base, int j) {
    return std::string(base) + "_" + std::to_string(j);
}

Block letters(char c, int count) {
    return Block(std::string(static_cast<std::size_t>(count), c));
}

/// Concatenation that leaves out `eps` factors.
Regex seq(std::vector<Regex> parts) {
    std::erase_if(parts, [](const Regex& r) { return r.kind() == RegexKind::Epsilon; });
    return concat_all(parts);
}

Regex lit(char c) {
    return Regex::literal(Block(c));
}

Regex lit(const Block& b) {
    return Regex::literal(b);
}

Regex alt(Regex left, Regex right) {
    return Regex::alternation(std::move(left), std::move(right));
}

} // namespace

std::string to_string(Family family) {
    return info(family).name;
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const FamilyInfo& entry : kFamilies) {
        if (name == entry.name) {
            return entry.family;
        }
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const FamilyInfo& entry : kFamilies) {
            out.push_back(entry.family);
        }
        return out;
    }();
    return families;
}

int minimum_parameter(Family family) {
    return info(family).minimum;
}

BlockAutomaton hanwood_M(int k) {
    require_parameter(Family::HanwoodMk, k);
    BlockAutomaton m;
    for (char c : {'a', 'b'}) {
        m.add_symbol(Block(c));
    }
    m.add_initial(indexed("q", k));
    m.add_final("3");
    for (int j = k; j >= 2; --j) {
        m.add_transition(indexed("q", j), Block('a'), indexed("q", j - 1));
    }
    m.add_transition(indexed("q", 1), Block('a'), indexed("q", k));
    m.add_transition(indexed("q", k), Block('b'), "1");
    m.add_transition(indexed("q", 1), Block('b'), "2");
    m.add_transition("1", Block('a'), "3");
    m.add_transition("2", Block('b'), "3");
    m.add_transition("3", Block('b'), "3");
    return m;
}

Regex hanwood_E(int k) {
    require_parameter(Family::HanwoodEkExpr, k);
    const Regex loop = Regex::star(lit(letters('a', k)));
    const Regex exit = alt(seq({lit(letters('a', k - 1) + Block('b')), lit('b')}), seq({lit('b'), lit('a')}));
    return seq({loop, exit, Regex::star(lit('b'))});
}

Regex hanwood_F(int k) {
    require_parameter(Family::HanwoodFkExpr, k);
    const Regex inner = Regex::star(seq({lit(Block("aa")), power(Block('a'), k - 2)}));
    const Regex tail = alt(seq({lit(Block("ab")), lit('a')}), seq({lit('b'), lit('b')}));
    const Regex left = seq({power(Block('a'), k - 1), inner, tail});
    return seq({alt(left, seq({lit('b'), lit('a')})), Regex::star(lit('b'))});
}

BlockAutomaton block_A(int k) {
    require_parameter(Family::BlockAk, k);
    BlockAutomaton a;
    for (char c : {'a', 'b', 'c'}) {
        a.add_symbol(Block(c));
    }
    const State alpha_k = indexed("alpha", k);
    const State beta_k = indexed("beta", k);
    for (int j = 1; j <= k; ++j) {
        a.add_state(indexed("alpha", j));
        a.add_state(indexed("beta", j));
    }
    a.add_state("f");
    a.add_initial(beta_k);
    a.add_final("f");
    a.add_final(alpha_k);
    a.add_final(beta_k);
    a.add_transition(beta_k, Block('a'), alpha_k);
    a.add_transition(indexed("beta", 1), Block('b'), "f");
    a.add_transition(alpha_k, Block('a'), alpha_k);
    a.add_transition(indexed("alpha", 1), Block('b'), "f");
    a.add_transition(indexed("alpha", 1), Block('c'), beta_k);
    for (int j = 2; j <= k; ++j) {
        a.add_transition(indexed("alpha", j), Block('b'), indexed("alpha", j - 1));
        a.add_transition(indexed("beta", j), Block('b'), indexed("beta", j - 1));
    }
    return a;
}

BlockAutomaton block_B(int k) {
    require_parameter(Family::BlockBk, k);
    BlockAutomaton b;
    for (char c : {'a', 'b', 'c'}) {
        b.add_symbol(Block(c));
    }
    const State alpha_k = indexed("alpha", k);
    const State beta_k = indexed("beta", k);
    b.add_initial(beta_k);
    b.add_final("f");
    b.add_final(alpha_k);
    b.add_final(beta_k);
    b.add_transition(beta_k, letters('b', k), "f");
    b.add_transition(beta_k, Block('a'), alpha_k);
    b.add_transition(alpha_k, Block('a'), alpha_k);
    b.add_transition(alpha_k, letters('b', k), "f");
    b.add_transition(alpha_k, k == 1 ? Block('c') : letters('b', k - 1) + Block('c'), beta_k);
    return b;
}

Regex block_expression(int k) {
    require_parameter(Family::BlockExpr, k);
    const Block bc = k == 1 ? Block('c') : letters('b', k - 1) + Block('c');
    const Regex body = seq({lit('a'), alt(Regex::epsilon(), lit(bc))});
    return seq({Regex::star(body), alt(Regex::epsilon(), lit(letters('b', k)))});
}

BlockAutomaton unary_A(int j) {
    require_parameter(Family::UnaryAj, j);
    BlockAutomaton a;
    a.add_symbol(Block('a'));
    a.add_initial(indexed("alpha", 0));
    a.add_final(indexed("alpha", 0));
    a.add_final(indexed("alpha", j));
    for (int i = 0; i < 2 * j; ++i) {
        a.add_transition(indexed("alpha", i), Block('a'), indexed("alpha", i + 1));
    }
    a.add_transition(indexed("alpha", 2 * j), Block('a'), indexed("alpha", 0));
    return a;
}

Regex unary_E(int j) {
    require_parameter(Family::UnaryEjExpr, j);
    return seq({Regex::star(power(Block('a'), 2 * j + 1)), alt(Regex::epsilon(), power(Block('a'), j))});
}

BlockAutomaton counterexample() {
    BlockAutomaton a;
    a.add_initial("i");
    a.add_final("1");
    a.add_final("2");
    a.add_transition("i", Block('a'), "1");
    a.add_transition("i", Block('b'), "2");
    a.add_transition("1", Block('b'), "i");
    return a;
}

Witness build(const WitnessSpec& spec) {
    require_parameter(spec.family, spec.parameter);
    const int k = spec.parameter;
    switch (spec.family) {
    case Family::HanwoodMk:
        return hanwood_M(k);
    case Family::HanwoodEkExpr:
        return hanwood_E(k);
    case Family::HanwoodFkExpr:
        return hanwood_F(k);
    case Family::BlockAk:
        return block_A(k);
    case Family::BlockBk:
        return block_B(k);
    case Family::BlockExpr:
        return block_expression(k);
    case Family::UnaryAj:
        return unary_A(k);
    case Family::UnaryEjExpr:
        return unary_E(k);
    case Family::CounterexampleFig7:
        return counterexample();
    }
    throw Error("unknown witness family");
}

bool WitnessReport::all_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

std::vector<EliminationCandidate> narrower_elimination_candidates(int k) {
    require_parameter(Family::BlockAk, k);
    if (k < 2) {
        return {};
    }
    std::vector<EliminationCandidate> out;
    const BlockAutomaton plain = block_A(k);
    for (bool standardized : {false, true}) {
        const BlockAutomaton base = standardized ? trim(standardize(plain)) : plain;
        std::vector<State> pool;
        for (const State& q : base.states()) {
            if (eliminable(base, q)) {
                pool.push_back(q);
            }
        }
        const std::size_t subsets = std::size_t{1} << pool.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::set<State> chosen;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if ((mask >> i) & 1U) {
                    chosen.insert(pool[i]);
                }
            }
            BlockAutomaton result;
            try {
                result = eliminate_set(base, chosen);
            } catch (const PreconditionError&) {
                continue;  // induces a cycle
            }
            if (result.width() > static_cast<std::size_t>(k - 1)) {
                continue;
            }
            const bool certified = certify_k_block_language(result, k - 1).verdict;
            out.push_back(EliminationCandidate{standardized, std::move(chosen), std::move(result), certified});
        }
    }
    return out;
}

namespace {

std::string param(std::string_view name, int k) {
    return std::string(name) + "(" + std::to_string(k) + ")";
}

Claim claim(std::string name, bool holds, std::string detail = {}) {
    return Claim{std::move(name), holds, std::move(detail)};
}

std::string difference_detail(const BlockAutomaton& a, const BlockAutomaton& b) {
    const auto word = distinguishing_word(a, b);
    return word ? "differ on \"" + *word + "\"" : std::string{};
}

void hanwood_claims(int k, std::vector<Claim>& claims) {
    const BlockAutomaton m = hanwood_M(k);
    const BlockAutomaton e = glushkov(hanwood_E(k)).automaton;
    const BlockAutomaton f = glushkov(hanwood_F(k)).automaton;
    claims.push_back(claim(param("M", k) + " is a minimal deterministic automaton",
                           is_deterministic(m) && isomorphic(minimize(m), m)));
    claims.push_back(claim("L(" + param("M", k) + ") = L(" + param("E", k) + ")", equivalent(m, e),
                           difference_detail(m, e)));
    const KCheck e_block = is_k_block_deterministic_expression(hanwood_E(k), k);
    claims.push_back(claim(param("E", k) + " is " + std::to_string(k) + "-block deterministic", e_block.verdict));
    const KCheck f_block = is_k_block_deterministic_expression(hanwood_F(k), 2);
    claims.push_back(claim(param("F", k) + " is 2-block deterministic", f_block.verdict, f_block.reason));
    claims.push_back(claim("L(" + param("F", k) + ") = L(" + param("M", k) + ")", equivalent(f, m),
                           difference_detail(f, m)));
    const BlockAutomaton k_aut = eliminate(standardize(m), indexed("q", k));
    const BlockCertificate certificate = certify_k_block_language(k_aut, 2);
    claims.push_back(claim("standardize then eliminate q_" + std::to_string(k) + " certifies 2-block determinism",
                           certificate.verdict && equivalent(k_aut, m), certificate.reason));
}

void block_claims(int k, std::vector<Claim>& claims) {
    const BlockAutomaton a = block_A(k);
    const BlockAutomaton b = block_B(k);
    claims.push_back(claim(param("A", k) + " is deterministic and trimmed", is_deterministic(a) && trim(a) == a));
    std::set<State> chain;
    for (int j = 1; j < k; ++j) {
        chain.insert(indexed("alpha", j));
        chain.insert(indexed("beta", j));
    }
    const BlockAutomaton eliminated = eliminate_set(a, chain);
    claims.push_back(claim("eliminating alpha_j, beta_j (j < k) from " + param("A", k) + " yields " + param("B", k),
                           eliminated.same_structure(b)));
    const BlockCertificate certificate = certify_k_block_language(b, k);
    claims.push_back(claim("certify_k_block_language(" + param("B", k) + ", " + std::to_string(k) + ")",
                           certificate.verdict, certificate.reason));
    const Regex expr = block_expression(k);
    const KCheck expr_block = is_k_block_deterministic_expression(expr, k);
    claims.push_back(claim(to_string(expr) + " is " + std::to_string(k) + "-block deterministic", expr_block.verdict,
                           expr_block.reason));
    const BlockAutomaton g = glushkov(expr).automaton;
    claims.push_back(claim("L(" + to_string(expr) + ") = L(" + param("A", k) + ")", equivalent(g, a),
                           difference_detail(g, a)));
    bool only_k = true;
    std::string detail;
    for (int m = 1; m <= k + 2; ++m) {
        const bool accepted = accepts(a, std::string(static_cast<std::size_t>(m), 'b'));
        if (accepted != (m == k)) {
            only_k = false;
            detail = "b^" + std::to_string(m) + (accepted ? " accepted" : " rejected");
        }
    }
    claims.push_back(claim("b^m in L(" + param("A", k) + ") iff m = k, for 1 <= m <= k+2", only_k, detail));
    if (k >= 2) {
        const auto candidates = narrower_elimination_candidates(k);
        const auto certified = std::count_if(candidates.begin(), candidates.end(),
                                             [](const EliminationCandidate& c) { return c.certified; });
        claims.push_back(claim("no (k-1)-width elimination of " + param("A", k) + " is certified (" +
                                   std::to_string(candidates.size()) + " candidates)",
                               certified == 0, std::to_string(certified) + " certified"));
    }
}

void unary_claims(int j, std::vector<Claim>& claims) {
    const BlockAutomaton a = unary_A(j);
    const Regex e = unary_E(j);
    claims.push_back(claim(param("A", j) + " is minimal deterministic with 2j+1 states",
                           is_deterministic(a) && isomorphic(minimize(a), a) &&
                               a.states().size() == static_cast<std::size_t>(2 * j + 1)));
    claims.push_back(claim("minimal DFA of " + param("E", j) + " is isomorphic to " + param("A", j),
                           isomorphic(minimal_dfa(glushkov(e).automaton), a)));
    claims.push_back(claim(param("E", j) + " is " + std::to_string(j + 1) + "-lookahead deterministic",
                           is_k_lookahead_deterministic_expression(e, j + 1).verdict));
    claims.push_back(claim(param("E", j) + " is not " + std::to_string(j) + "-lookahead deterministic",
                           !is_k_lookahead_deterministic_expression(e, j).verdict));
    claims.push_back(claim("L(" + param("A", j) + ") is not one-unambiguous", !is_one_unambiguous(a)));
}

void counterexample_claims(std::vector<Claim>& claims) {
    const BlockAutomaton a = counterexample();
    claims.push_back(claim("the counter-example is a minimal deterministic automaton",
                           is_deterministic(a) && isomorphic(minimize(a), a)));
    const bool none = std::none_of(a.states().begin(), a.states().end(),
                                   [&](const State& q) { return eliminable(a, q); });
    claims.push_back(claim("no state of the counter-example is eliminable", none));
    const BlockAutomaton k_aut = eliminate(standardize(a), "i");
    claims.push_back(claim("standardize then eliminate i is 2-block deterministic",
                           is_k_block_deterministic(k_aut, 2).verdict));
    const BlockCertificate certificate = certify_k_block_language(k_aut, 2);
    claims.push_back(claim("certify_k_block_language(standardize then eliminate i, 2)", certificate.verdict,
                           certificate.reason));
    claims.push_back(claim("elimination preserves the language", equivalent(k_aut, a), difference_detail(k_aut, a)));
    claims.push_back(claim("the language is not one-unambiguous", !is_one_unambiguous(a)));
}

} // namespace

WitnessReport verify(const WitnessSpec& spec, int max_parameter) {
    require_parameter(spec.family, spec.parameter);
    if (spec.parameter > max_parameter) {
        throw PreconditionError("parameter " + std::to_string(spec.parameter) + " exceeds the cap " +
                                std::to_string(max_parameter));
    }
    WitnessReport report{spec, {}};
    switch (spec.family) {
    case Family::HanwoodMk:
    case Family::HanwoodEkExpr:
    case Family::HanwoodFkExpr:
        hanwood_claims(spec.parameter, report.claims);
        break;
    case Family::BlockAk:
    case Family::BlockBk:
    case Family::BlockExpr:
        block_claims(spec.parameter, report.claims);
        break;
    case Family::UnaryAj:
    case Family::UnaryEjExpr:
        unary_claims(spec.parameter, report.claims);
        break;
    case Family::CounterexampleFig7:
        counterexample_claims(report.claims);
        break;
    }
    return report;
}

} // namespace blockdet
