#pragma once

#include <cstddef>
#include <optional>

#include "intreg/automata.hpp"
#include "intreg/encoding.hpp"
#include "intreg/problems.hpp"
#include "intreg/reps.hpp"

namespace intreg {

struct EngineOptions {
    std::size_t max_configs = 2'000'000;
    SolveLimits solve_limits;
};

enum class VertexPick { Merge, MergeRedBlue, Separate };

struct RepRecipe {
    Nat threshold;
    VertexPick pick = VertexPick::Merge;
    std::size_t s = 0;  // Separate only
    std::size_t t = 0;  // Separate only
};

// Throws std::invalid_argument for unsupported problems.
RepRecipe recipe_for(const ProblemSpec& p, int num_states);
RepFunction choose_rep(const Nfa& m, const TokenSets& ts, const ProblemSpec& p);
RepFunction choose_rep(const Nfa& m, const ProblemSpec& p);
RepFunction choose_rep(const Nfa& m, const TokenSets& ts, const RepRecipe& r);

// trim(intersect(raw, Enc)).
Nfa normalize(const Nfa& raw);

struct Witness {
    TokenWord word;
    GraphInstance instance;       // simple-graph problems
    RedBlueInstance rb_instance;  // red-blue problems
    Verdict verdict;
};

struct DecisionStats {
    int states = 0;
    std::size_t core_size = 0;
    std::size_t configs = 0;
    std::size_t rep_tokens = 0;
    Nat ell = 0;
    bool exhausted = false;
};

enum class Answer { NonEmpty, Empty };

struct Decision {
    Answer answer = Answer::Empty;
    std::optional<Witness> witness;
    // Summed over threshold slices when the problem splits them (merge_below).
    DecisionStats stats;
    // Representatives of the last automaton searched.
    RepFunction rep;
};

Decision decide(const Nfa& raw, const ProblemSpec& p, const EngineOptions& options = {});

// Membership in raw and Enc, decoding and the solver; nothing else.
bool verify_witness(const Nfa& raw, const ProblemSpec& p, const TokenWord& w, const SolveLimits& limits = {});

}  // namespace intreg
