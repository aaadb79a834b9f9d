#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "intreg/automata.hpp"
#include "intreg/encoding.hpp"

namespace intreg {

using StatePair = std::pair<State, State>;

// K is indexed by p and stands for K[q0, p]; V and VG are indexed [p][q].
struct TokenSets {
    int num_states = 0;
    State initial = 0;
    std::vector<Nfa> K;
    std::vector<bool> K_finite;
    std::vector<std::vector<Nfa>> V;
    std::vector<std::vector<Nfa>> VG;
    std::vector<std::vector<bool>> V_finite;

    bool V_empty(State p, State q) const { return is_empty(V[p][q]); }
};

TokenSets token_sets(const Nfa& m);

class RepFunction {
public:
    explicit RepFunction(int num_states = 0) : num_states_(num_states) {}

    int num_states() const { return num_states_; }
    const std::vector<Token>& at(State p, State q) const;
    // Appends unless already present.
    void add(State p, State q, const Token& t);
    const std::map<StatePair, std::vector<Token>>& table() const { return table_; }
    std::size_t total_tokens() const;

    bool operator==(const RepFunction&) const = default;

private:
    int num_states_;
    std::map<StatePair, std::vector<Token>> table_;
};

RepFunction union_reps(const std::vector<RepFunction>& parts);

// Whole set when finite, otherwise the shortlex-smallest token of length >= k.
std::vector<Token> pick_threshold(const Nfa& K, const Nat& k);
RepFunction pick_threshold_all(const TokenSets& ts, const Nat& k);

enum class Terminators { Both, LeftOnly, RightOnly };

// Type-based construction; see stem_types.
RepFunction pick_merge(const Nfa& m, const TokenSets& ts, Terminators which = Terminators::Both);

// For every realized set S of pairs, the least stem index i such that
// >a^i is a stem of exactly the pairs in S (restricted to `which`).
std::map<std::vector<StatePair>, std::size_t> stem_types(const Nfa& m, Terminators which);

RepFunction pick_separate(const TokenSets& ts, std::size_t s, std::size_t t);

struct CondensedAutomaton {
    struct Edge {
        State src;
        int id;
        State dst;
    };
    Nfa base;
    std::vector<Edge> edges;
    std::vector<std::vector<Token>> substitution;
};

CondensedAutomaton build_condensed(const Nfa& m, const RepFunction& rep);
// The substituted automaton over the base alphabet.
Nfa expand(const CondensedAutomaton& c);

Nat core_length_bound(const Nfa& m, const RepFunction& rep);

enum class Interpretation { Simple, RedBlue };

struct CoreInstance {
    TokenWord witness;
    std::vector<State> path;
    GraphInstance instance;        // Simple interpretation
    RedBlueInstance rb_instance;   // RedBlue interpretation
};

struct FiniteCore {
    Interpretation interpretation = Interpretation::Simple;
    std::vector<CoreInstance> instances;
};

class CoreLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoreSearch {
    Interpretation interpretation = Interpretation::Simple;
    std::size_t max_configs = 2'000'000;
    // Called with the partial instance of configurations between edge factors
    // (Simple only). Returning true drops the configuration.
    std::function<bool(const GraphInstance&)> prune;
    // Drop configurations whose partial graph contains another one stored for
    // the same state, threshold and pending vertex (Simple only).
    bool subgraph_dominance = false;
    // Never revisit a state between edge factors. Complete only for
    // properties that survive edge and vertex deletion: cutting the loop
    // between two visits deletes edges and vertices and keeps the word in L(m).
    bool simple_boundaries = false;
    // Return true to stop the search.
    std::function<bool(const CoreInstance&)> on_instance;
};

struct CoreSearchStats {
    std::size_t configs = 0;
    std::size_t instances = 0;
    bool exhausted = false;
};

// Shortest-first exploration of the condensed language; each distinct
// decoded instance is reported once with a shortest witness.
CoreSearchStats explore_core(const Nfa& m, const RepFunction& rep, const CoreSearch& search);

FiniteCore finite_core(const Nfa& m, const RepFunction& rep,
                       Interpretation interp = Interpretation::Simple, std::size_t max_configs = 2'000'000);

// Cuts between repeated states at edge-factor boundaries until at most
// 2|Q|-1 tokens remain.
Word reduce_by_deletion(const Nfa& m, const Word& w);

}  // namespace intreg
