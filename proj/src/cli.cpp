#include "blockdet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "blockdet/automaton.hpp"
#include "blockdet/bkw.hpp"
#include "blockdet/determinism.hpp"
#include "blockdet/error.hpp"
#include "blockdet/glushkov.hpp"
#include "blockdet/serialize.hpp"
#include "blockdet/syntax.hpp"
#include "blockdet/transform.hpp"
#include "blockdet/witnesses.hpp"

namespace blockdet::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Dot, Text };

using Input = std::variant<Regex, BlockAutomaton>;

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Input from_json(const Json& json) {
    if (!json.is_object()) {
        throw UsageError("JSON input must be an object");
    }
    if (json.contains("witness")) {
        return from_json(json.at("witness"));
    }
    if (json.contains("states")) {
        return automaton_from_json(json);
    }
    if (json.contains("kind")) {
        return regex_from_json(json);
    }
    if (json.contains("ast")) {
        return regex_from_json(json.at("ast"));
    }
    if (json.contains("expression") && json.at("expression").is_string()) {
        return parse(json.at("expression").get<std::string>());
    }
    throw UsageError("JSON input is neither an automaton nor an expression");
}

Input from_text(const std::string& text) {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        Json json;
        try {
            json = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("malformed JSON: ") + e.what());
        }
        return from_json(json);
    }
    return parse(text);
}

bool looks_like_path(const std::string& arg) {
    return arg.find('/') != std::string::npos ||
           (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0);
}

/// "-" reads standard input; an argument containing '/' or ending in ".json" names
/// a file; anything else is inline expression text or inline JSON.
Input resolve(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        return from_text(read_all(in));
    }
    if (looks_like_path(arg)) {
        std::ifstream file(arg, std::ios::binary);
        if (!file) {
            throw UsageError("cannot read " + arg);
        }
        return from_text(read_all(file));
    }
    return from_text(arg);
}

BlockAutomaton as_automaton(const Input& input) {
    if (const auto* regex = std::get_if<Regex>(&input)) {
        return glushkov(*regex).automaton;
    }
    return std::get<BlockAutomaton>(input);
}

const Regex& as_expression(const Input& input, const std::string& verb) {
    if (const auto* regex = std::get_if<Regex>(&input)) {
        return *regex;
    }
    throw UsageError(verb + " needs an expression, not an automaton");
}

class Printer {
public:
    Printer(Format format, std::ostream& out) : format_(format), out_(out) {}

    void automaton(const BlockAutomaton& a, const Json& json) const {
        switch (format_) {
        case Format::Json:
            out_ << json.dump(2) << '\n';
            break;
        case Format::Dot:
            out_ << to_dot(a);
            break;
        case Format::Text:
            out_ << to_text(a);
            break;
        }
    }

    void report(const Json& json, const std::string& text) const {
        switch (format_) {
        case Format::Json:
            out_ << json.dump(2) << '\n';
            break;
        case Format::Dot:
            throw UsageError("--dot is only available for automaton output");
        case Format::Text:
            out_ << text;
            if (!text.empty() && text.back() != '\n') {
                out_ << '\n';
            }
            break;
        }
    }

private:
    Format format_;
    std::ostream& out_;
};

std::string verdict_text(bool holds) {
    return holds ? "holds" : "fails";
}

std::string violations_text(const KCheck& check) {
    std::ostringstream out;
    out << verdict_text(check.verdict) << " (k=" << check.k << ")\n";
    if (!check.reason.empty()) {
        out << check.reason << '\n';
    }
    for (const Violation& v : check.violations) {
        out << v.first.from << ": -" << v.first.label.text() << "-> " << v.first.to << " / -"
            << v.second.label.text() << "-> " << v.second.to;
        if (v.witness) {
            out << " (common lookahead \"" << *v.witness << "\")";
        }
        out << '\n';
    }
    return out.str();
}

int exit_for(bool holds) {
    return holds ? kHolds : kFails;
}

struct Options {
    std::string input;
    std::string second;
    bool positions = false;
    std::vector<std::string> states;
    bool standardize_first = false;
    std::string property;
    std::optional<int> k;
    bool as_is = false;
    std::size_t maxlen = 6;
    std::string family;
    bool verify = false;
    int max_param = kDefaultMaxParameter;
};

int run_parse(const Options& o, std::istream& in, const Printer& print) {
    const Regex regex = as_expression(resolve(o.input, in), "parse");
    Json json{{"expression", to_string(regex)}, {"ast", to_json(regex)}};
    std::string text = to_string(regex) + "\n";
    if (o.positions) {
        const MarkedExpression marked = mark(regex);
        const PositionTable table = positions(marked);
        Json list = Json::array();
        for (const Position& p : marked.positions) {
            list.push_back(Json{{"index", p.index}, {"block", p.block.letters()}});
        }
        json["marked"] = to_marked_string(marked.ast);
        json["positions"] = std::move(list);
        json["table"] = to_json(table);
        text += to_marked_string(marked.ast) + "\n" + to_json(table).dump() + "\n";
    }
    print.report(json, text);
    return kHolds;
}

int run_check(const Options& o, std::istream& in, const Printer& print) {
    const Input input = resolve(o.input, in);
    Json json{{"property", o.property}};
    if (o.property == "one-unambiguous") {
        const BkwTrace trace = bkw_test(minimal_dfa(as_automaton(input)));
        json["holds"] = trace.verdict;
        json["bkw"] = to_json(trace);
        print.report(json, to_text(trace));
        return exit_for(trace.verdict);
    }
    const BlockAutomaton a = as_automaton(input);
    if (o.property == "deterministic") {
        const bool holds = is_deterministic(a);
        json["holds"] = holds;
        json["report"] = to_json(determinism_report(a, std::nullopt, std::nullopt, false));
        print.report(json, verdict_text(holds));
        return exit_for(holds);
    }
    if (o.property == "min-lookahead") {
        const std::optional<int> k = min_lookahead(a);
        json["holds"] = k.has_value();
        json["min_lookahead"] = k ? Json(*k) : Json("none");
        print.report(json, k ? std::to_string(*k) : "none");
        return exit_for(k.has_value());
    }
    if (!o.k) {
        throw UsageError("check " + o.property + " requires -k");
    }
    KCheck check;
    if (o.property == "block") {
        check = is_k_block_deterministic(a, *o.k);
        json["holds"] = check.verdict;
        json["k_block"] = to_json(check);
    } else {
        if (const auto* regex = std::get_if<Regex>(&input)) {
            check = is_k_lookahead_deterministic_expression(*regex, *o.k);
        } else {
            check = is_k_lookahead_deterministic(a, *o.k);
        }
        json["holds"] = check.verdict;
        json["k_lookahead"] = to_json(check);
    }
    print.report(json, violations_text(check));
    return exit_for(check.verdict);
}

int run_witness(const Options& o, const Printer& print, Format format) {
    const std::optional<Family> family = family_from_name(o.family);
    if (!family) {
        throw UsageError("unknown witness family " + o.family);
    }
    const int parameter = o.k.value_or(minimum_parameter(*family));
    const WitnessSpec spec{*family, parameter};
    if (parameter > o.max_param) {
        throw UsageError("parameter " + std::to_string(parameter) + " exceeds --max-param " +
                         std::to_string(o.max_param));
    }
    const Witness witness = build(spec);

    Json witness_json;
    std::string witness_text;
    const BlockAutomaton* automaton = std::get_if<BlockAutomaton>(&witness);
    if (automaton != nullptr) {
        witness_json = to_json(*automaton);
        witness_text = to_text(*automaton);
    } else {
        const Regex& regex = std::get<Regex>(witness);
        witness_json = Json{{"family", to_string(*family)},
                            {"parameter", parameter},
                            {"expression", to_string(regex)},
                            {"ast", to_json(regex)}};
        witness_text = to_string(regex) + "\n";
    }

    if (!o.verify) {
        if (automaton != nullptr) {
            print.automaton(*automaton, witness_json);
        } else {
            print.report(witness_json, witness_text);
        }
        return kHolds;
    }
    const WitnessReport report = verify(spec, o.max_param);
    if (format == Format::Dot) {
        throw UsageError("--dot is not available with --verify");
    }
    std::string text = witness_text;
    for (const Claim& c : report.claims) {
        text += (c.holds ? "[ok]   " : "[FAIL] ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
    }
    print.report(Json{{"witness", witness_json}, {"verification", to_json(report)}}, text);
    return exit_for(report.all_hold());
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Determinism checks for block regular expressions and automata", "blockdet"};
    app.require_subcommand(1);
    app.fallthrough();

    bool want_json = false;
    bool want_dot = false;
    bool want_text = false;
    auto* json_flag = app.add_flag("--json", want_json, "JSON output (default)");
    auto* dot_flag = app.add_flag("--dot", want_dot, "Graphviz output for automata");
    auto* text_flag = app.add_flag("--text", want_text, "Plain text output");
    json_flag->excludes(dot_flag)->excludes(text_flag);
    dot_flag->excludes(text_flag);

    Options o;
    const std::string input_help = "Expression text, inline JSON, a file path, or - for standard input";

    auto* parse_cmd = app.add_subcommand("parse", "Parse an expression and print it canonically");
    parse_cmd->add_option("input", o.input, input_help)->required();
    parse_cmd->add_flag("--positions", o.positions, "Also print the marked expression and position table");

    auto* glushkov_cmd = app.add_subcommand("glushkov", "Glushkov automaton of an expression");
    glushkov_cmd->add_option("input", o.input, input_help)->required();

    auto* min_cmd = app.add_subcommand("min", "Minimal deterministic automaton over the base letters");
    min_cmd->add_option("input", o.input, input_help)->required();

    auto* det_cmd = app.add_subcommand("det", "Subset construction (width-1 input)");
    det_cmd->add_option("input", o.input, input_help)->required();

    auto* std_cmd = app.add_subcommand("std", "Standardize");
    std_cmd->add_option("input", o.input, input_help)->required();

    auto* trim_cmd = app.add_subcommand("trim", "Remove useless states");
    trim_cmd->add_option("input", o.input, input_help)->required();

    auto* expand_cmd = app.add_subcommand("expand", "Replace blocks by chains of letters");
    expand_cmd->add_option("input", o.input, input_help)->required();

    auto* eliminate_cmd = app.add_subcommand("eliminate", "State elimination");
    eliminate_cmd->add_option("input", o.input, input_help)->required();
    eliminate_cmd->add_option("--state", o.states, "State to eliminate (repeatable)")->required();
    eliminate_cmd->add_flag("--standardize", o.standardize_first, "Standardize before eliminating");

    auto* equiv_cmd = app.add_subcommand("equiv", "Language equivalence");
    equiv_cmd->add_option("first", o.input, input_help)->required();
    equiv_cmd->add_option("second", o.second, input_help)->required();

    auto* check_cmd = app.add_subcommand("check", "Check a determinism property");
    check_cmd->add_option("property", o.property, "Property to check")
        ->required()
        ->check(CLI::IsMember({"one-unambiguous", "deterministic", "block", "lookahead", "min-lookahead"}));
    check_cmd->add_option("input", o.input, input_help)->required();
    check_cmd->add_option("-k", o.k, "Block width or lookahead length")->check(CLI::PositiveNumber);

    auto* bkw_cmd = app.add_subcommand("bkw", "BKW test with its recursion trace");
    bkw_cmd->add_option("input", o.input, input_help)->required();
    bkw_cmd->add_flag("--as-is", o.as_is, "Test the given deterministic automaton instead of its minimal DFA");

    auto* certify_cmd = app.add_subcommand("certify", "Certify a k-block deterministic language");
    certify_cmd->add_option("input", o.input, input_help)->required();
    certify_cmd->add_option("-k", o.k, "Block width")->required()->check(CLI::PositiveNumber);

    auto* chi_cmd = app.add_subcommand("chi", "Expand every block literal into indexed letters");
    chi_cmd->add_option("input", o.input, input_help)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Accepted words in shortlex order");
    enumerate_cmd->add_option("input", o.input, input_help)->required();
    enumerate_cmd->add_option("--maxlen", o.maxlen, "Longest word length")->capture_default_str();

    auto* witness_cmd = app.add_subcommand("witness", "Build a witness family member");
    witness_cmd->add_option("family", o.family, "Family name")->required();
    witness_cmd->add_option("-k", o.k, "Family parameter")->check(CLI::PositiveNumber);
    witness_cmd->add_flag("--verify", o.verify, "Run the family's claim suite");
    witness_cmd->add_option("--max-param", o.max_param, "Largest parameter accepted")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "blockdet: " << e.what() << '\n';
        return kUsageError;
    }

    const Format format = want_dot ? Format::Dot : want_text ? Format::Text : Format::Json;
    const Printer print(format, out);

    try {
        if (parse_cmd->parsed()) {
            return run_parse(o, in, print);
        }
        if (glushkov_cmd->parsed()) {
            const GlushkovAutomaton g = glushkov(as_expression(resolve(o.input, in), "glushkov"));
            print.automaton(g.automaton, to_json(g));
            return kHolds;
        }
        const auto transform = [&](const std::function<BlockAutomaton(const BlockAutomaton&)>& f) {
            const BlockAutomaton result = f(as_automaton(resolve(o.input, in)));
            print.automaton(result, to_json(result));
            return kHolds;
        };
        if (min_cmd->parsed()) {
            return transform(minimal_dfa);
        }
        if (det_cmd->parsed()) {
            return transform(determinize);
        }
        if (std_cmd->parsed()) {
            return transform(standardize);
        }
        if (trim_cmd->parsed()) {
            return transform(trim);
        }
        if (expand_cmd->parsed()) {
            return transform(expand_blocks);
        }
        if (eliminate_cmd->parsed()) {
            return transform([&](const BlockAutomaton& a) {
                const BlockAutomaton base = o.standardize_first ? standardize(a) : a;
                return eliminate_set(base, std::set<State>(o.states.begin(), o.states.end()));
            });
        }
        if (equiv_cmd->parsed()) {
            const BlockAutomaton a = as_automaton(resolve(o.input, in));
            const BlockAutomaton b = as_automaton(resolve(o.second, in));
            const std::optional<std::string> word = distinguishing_word(a, b);
            Json json{{"equivalent", !word.has_value()}};
            json["distinguishing_word"] = word ? Json(*word) : Json(nullptr);
            print.report(json, word ? "not equivalent: \"" + *word + "\"" : "equivalent");
            return exit_for(!word.has_value());
        }
        if (check_cmd->parsed()) {
            return run_check(o, in, print);
        }
        if (bkw_cmd->parsed()) {
            const BlockAutomaton a = as_automaton(resolve(o.input, in));
            const BkwTrace trace = bkw_test(o.as_is ? a : minimal_dfa(a));
            print.report(to_json(trace), to_text(trace));
            return exit_for(trace.verdict);
        }
        if (certify_cmd->parsed()) {
            const BlockCertificate certificate = certify_k_block_language(as_automaton(resolve(o.input, in)), *o.k);
            std::string text = verdict_text(certificate.verdict) + "\n";
            if (!certificate.reason.empty()) {
                text += certificate.reason + "\n";
            }
            print.report(to_json(certificate), text);
            return exit_for(certificate.verdict);
        }
        if (chi_cmd->parsed()) {
            const ChiExpression result = chi(mark(as_expression(resolve(o.input, in), "chi")));
            print.report(to_json(result), result.to_string() + "\n" + to_string(result.dropped()) + "\n");
            return kHolds;
        }
        if (enumerate_cmd->parsed()) {
            const std::vector<std::string> words = enumerate(as_automaton(resolve(o.input, in)), o.maxlen);
            std::string text;
            for (const std::string& w : words) {
                text += (w.empty() ? "eps" : w) + "\n";
            }
            print.report(Json{{"maxlen", o.maxlen}, {"words", words}}, text);
            return kHolds;
        }
        if (witness_cmd->parsed()) {
            return run_witness(o, print, format);
        }
    } catch (const UsageError& e) {
        err << "blockdet: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "blockdet: " << e.what() << '\n';
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "blockdet: JSON: " << e.what() << '\n';
        return kUsageError;
    }
    err << "blockdet: no command\n";
    return kUsageError;
}

} // namespace blockdet::cli
