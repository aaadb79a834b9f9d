#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "intreg/io.hpp"
#include "support.hpp"

using namespace intreg;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Result cli(const std::vector<std::string>& args, const std::string& input = "") {
    fs::path in = fs::temp_directory_path() / "intreg_cli_stdin.txt";
    std::ofstream(in) << input;
    std::string cmd = quote(INTREG_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " < " + quote(in.string()) + " 2>/dev/null";
    Result r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parsed(const Result& r) { return json::parse(r.out); }

}  // namespace

TEST(Cli, DecideNonEmpty) {
    Result r = cli({"decide", "--regex", ">1$>a#>aa$", "--problem", "vertex-cover"});
    ASSERT_EQ(r.code, 0) << r.out;
    json j = parsed(r);
    EXPECT_EQ(j["answer"], "nonempty");
    EXPECT_EQ(j["witness"]["word"], ">1$>a#>aa$");
    EXPECT_EQ(j["witness"]["graph"]["k"], 1);
    EXPECT_EQ(j["witness"]["graph"]["edges"], json::parse("[[1,2]]"));
    EXPECT_TRUE(j["stats"].contains("core_size"));
}

TEST(Cli, DecideEmpty) {
    Result r = cli({"decide", "--regex", ">$(>a#>aa$)+", "--problem", "vertex-cover", "--emit-reps"});
    ASSERT_EQ(r.code, 1) << r.out;
    json j = parsed(r);
    EXPECT_EQ(j["answer"], "empty");
    EXPECT_TRUE(j["witness"].is_null());
    EXPECT_TRUE(j.contains("reps"));
}

TEST(Cli, DecideFromAutomatonFile) {
    fs::path f = fs::temp_directory_path() / "intreg_cli_nfa.json";
    std::ofstream(f) << io::nfa_to_json(compile_regex(">1$>a#>aa$")).dump();
    Result r = cli({"decide", "--automaton", f.string(), "--problem", "independent-set"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::ofstream(f) << "{\"states\": 2}";
    EXPECT_EQ(cli({"decide", "--automaton", f.string(), "--problem", "independent-set"}).code, 2);
}

TEST(Cli, Errors) {
    EXPECT_EQ(cli({"decide", "--regex", ">1$(", "--problem", "vertex-cover"}).code, 2);
    EXPECT_EQ(cli({"decide", "--regex", ">$", "--problem", "no-such-problem"}).code, 2);
    EXPECT_EQ(cli({"decide", "--problem", "vertex-cover"}).code, 2);
    EXPECT_EQ(cli({"decode"}, ">1$>a#").code, 2);
    EXPECT_NE(cli({"frobnicate"}).code, 0);
}

TEST(Cli, Decode) {
    Result r = cli({"decode"}, ">$>a#>aa$\n");
    ASSERT_EQ(r.code, 0);
    json j = parsed(r);
    EXPECT_EQ(j["k"], 0);
    EXPECT_EQ(j["vertices"], json::parse("[1,2]"));
    Result big = cli({"decode"}, ">1^{1267650600228229401496703205376}$>#>a$");
    ASSERT_EQ(big.code, 0);
    EXPECT_EQ(parsed(big)["k"], "1267650600228229401496703205376");
    Result rb = cli({"decode", "--problem", "rbds"}, ">1$>a#>a$");
    ASSERT_EQ(rb.code, 0);
    EXPECT_EQ(parsed(rb)["red"], json::parse("[1]"));
    EXPECT_EQ(parsed(rb)["blue"], json::parse("[1]"));
}

TEST(Cli, Solve) {
    std::string tri = R"({"vertices":[1,2,3],"edges":[[1,2],[2,3],[1,3]],"k":1})";
    EXPECT_EQ(cli({"solve", "--problem", "vertex-cover"}, tri).code, 1);
    Result r = cli({"solve", "--problem", "independent-set"}, tri);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(parsed(r)["positive"].get<bool>());
    EXPECT_EQ(cli({"solve", "--problem", "vertex-cover"}, "{\"vertices\": [1], \"edges\": [[1]]}").code, 2);
}

TEST(Cli, CoreAndRegistry) {
    Result r = cli({"core", "--regex", ">$(>a#>aa$)*"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parsed(r)["core"].size(), 2u);
    Result list = cli({"list-problems"});
    ASSERT_EQ(list.code, 0);
    json reg = parsed(list);
    ASSERT_TRUE(reg.is_array());
    EXPECT_EQ(reg.size(), registry().size());
    bool vc = false;
    for (const auto& e : reg)
        if (e["name"] == "vertex-cover") vc = e["supported"].get<bool>();
    EXPECT_TRUE(vc);
}

TEST(Io, RoundTrips) {
    Nfa m = compile_regex(">1*$(>a#>aa$)*");
    Nfa back = io::nfa_from_json(io::nfa_to_json(m));
    EXPECT_EQ(back.num_states(), m.num_states());
    EXPECT_EQ(back.transitions().size(), m.transitions().size());
    for (const std::string w : {">$", ">11$>a#>aa$", ">1$>a#"})
        EXPECT_EQ(contains(back, to_word(w)), contains(m, to_word(w)));
    GraphInstance g{{}, Nat(1) << 70};
    g.graph.add_edge(3, 5);
    g.graph.add_vertex(9);
    EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);
    EXPECT_EQ(io::nat_from_json(io::nat_to_json(Nat(42))), 42);
    EXPECT_THROW(io::nfa_from_json(json::parse(R"({"states":1,"initial":0,"finals":[],"transitions":[[0,"x",0]]})")),
                 std::invalid_argument);
}
