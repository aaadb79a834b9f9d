#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "intreg/io.hpp"

using namespace intreg;
using io::json;

namespace {

struct Args {
    std::string regex;
    std::string automaton;
    std::string problem;
    std::string output;
    std::string graph;
    std::size_t max_search = 2'000'000;
    bool emit_reps = false;
    bool verbose = false;
};

void log(const Args& a, const std::string& msg) {
    if (a.verbose) std::cerr << "intreg: " << msg << '\n';
}

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Nfa load_automaton(const Args& a) {
    if (a.regex.empty() == a.automaton.empty())
        throw std::invalid_argument("give exactly one of --regex or --automaton");
    if (!a.regex.empty()) return compile_regex(a.regex);
    std::ifstream in(a.automaton);
    if (!in) throw std::invalid_argument("cannot open " + a.automaton);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad automaton file: ") + e.what());
    }
    return io::nfa_from_json(j);
}

void emit(const Args& a, const json& j) {
    std::string text = j.dump(2);
    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) throw std::invalid_argument("cannot write " + a.output);
        out << text << '\n';
    }
    std::cout << text << '\n';
}

const ProblemSpec& problem_of(const Args& a) {
    if (a.problem.empty()) throw std::invalid_argument("--problem is required");
    return find_problem(a.problem);
}

int cmd_decide(const Args& a) {
    const ProblemSpec& p = problem_of(a);
    Nfa raw = load_automaton(a);
    log(a, "automaton with " + std::to_string(raw.num_states()) + " states");
    EngineOptions opt;
    opt.max_configs = a.max_search;
    Decision d = decide(raw, p, opt);
    log(a, "explored " + std::to_string(d.stats.configs) + " configurations, " +
               std::to_string(d.stats.core_size) + " core instances");
    json out = io::decision_to_json(d, p);
    if (a.emit_reps) out["reps"] = io::rep_to_json(d.rep);
    emit(a, out);
    return d.answer == Answer::NonEmpty ? 0 : 1;
}

int cmd_core(const Args& a) {
    Nfa m = normalize(load_automaton(a));
    RepFunction rep;
    Interpretation interp = Interpretation::Simple;
    if (!a.problem.empty()) {
        const ProblemSpec& p = find_problem(a.problem);
        rep = choose_rep(m, p);
        if (p.red_blue) interp = Interpretation::RedBlue;
    } else {
        // no problem given: thresholds 0 and the merge picks
        rep = union_reps({pick_threshold_all(token_sets(m), 0), pick_merge(m, token_sets(m))});
    }
    FiniteCore core = finite_core(m, rep, interp, a.max_search);
    log(a, std::to_string(core.instances.size()) + " core instances");
    json out = {{"core", io::core_to_json(core)}};
    if (a.emit_reps) out["reps"] = io::rep_to_json(rep);
    emit(a, out);
    return 0;
}

int cmd_decode(const Args& a) {
    std::string text = read_all(std::cin);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
    TokenWord tw = parse_compact(text);
    bool rb = false;
    if (!a.problem.empty()) rb = find_problem(a.problem).red_blue;
    emit(a, rb ? io::red_blue_to_json(decode_red_blue(tw)) : io::graph_to_json(decode(tw)));
    return 0;
}

int cmd_solve(const Args& a) {
    const ProblemSpec& p = problem_of(a);
    json j;
    try {
        if (a.graph.empty() || a.graph == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(a.graph);
            if (!in) throw std::invalid_argument("cannot open " + a.graph);
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
    }
    Verdict v = p.red_blue ? solve_red_blue(p, io::red_blue_from_json(j)) : solve(p, io::graph_from_json(j));
    emit(a, io::verdict_to_json(v));
    return v.positive ? 0 : 1;
}

int cmd_list(const Args& a) {
    emit(a, io::registry_to_json());
    if (a.verbose) {
        for (const auto& p : registry())
            std::cerr << p.name << '\t' << to_string(p.kind) << '\t' << to_string(p.role) << '\t'
                      << (p.supported() ? "yes" : "no") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Args a;
    CLI::App app{"Decide emptiness of regular graph languages intersected with graph problems"};
    app.require_subcommand(1);

    auto add_source = [&](CLI::App* c) {
        c->add_option("--regex", a.regex, "automaton as a regular expression over > 1 $ # a");
        c->add_option("--automaton", a.automaton, "automaton JSON file");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--output", a.output, "also write the JSON to this file");
        c->add_flag("--verbose", a.verbose, "progress on stderr");
    };

    auto* dec = app.add_subcommand("decide", "decide whether L(M) contains a positive instance");
    add_source(dec);
    dec->add_option("--problem", a.problem)->required();
    dec->add_flag("--emit-reps", a.emit_reps, "include the representative sets");
    dec->add_option("--max-search", a.max_search, "configuration budget for the core search");
    add_common(dec);

    auto* core = app.add_subcommand("core", "list the finite core of an automaton");
    add_source(core);
    core->add_option("--problem", a.problem, "use this problem's representative sets");
    core->add_flag("--emit-reps", a.emit_reps);
    core->add_option("--max-search", a.max_search);
    add_common(core);

    auto* dc = app.add_subcommand("decode", "decode a word read from stdin");
    dc->add_option("--problem", a.problem, "red-blue problems decode as red-blue graphs");
    add_common(dc);

    auto* sol = app.add_subcommand("solve", "run a problem solver on a graph JSON");
    sol->add_option("--problem", a.problem)->required();
    sol->add_option("--graph", a.graph, "graph JSON file, stdin when omitted");
    add_common(sol);

    auto* lst = app.add_subcommand("list-problems", "print the problem registry");
    add_common(lst);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cerr << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*dec) return cmd_decide(a);
        if (*core) return cmd_core(a);
        if (*dc) return cmd_decode(a);
        if (*sol) return cmd_solve(a);
        if (*lst) return cmd_list(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
