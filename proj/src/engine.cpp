#include "intreg/engine.hpp"

#include <map>

namespace intreg {

namespace {
Nat pow2(std::size_t e) { return Nat(1) << e; }
}  // namespace

RepRecipe recipe_for(const ProblemSpec& p, int num_states) {
    if (!p.supported()) throw std::invalid_argument("problem '" + p.name + "' is not supported: " + p.note);
    const std::size_t q = static_cast<std::size_t>(num_states);
    const std::size_t q2 = q * q;
    RepRecipe r;
    if (p.name == "vertex-cover") {
        r.threshold = pow2(q2);
        r.pick = VertexPick::Merge;
        return r;
    }
    if (p.name == "independent-set") {
        r.threshold = 0;
        r.pick = VertexPick::Separate;
        r.s = q + 1;
        r.t = q;
        return r;
    }
    switch (p.kind) {
        case Case::A:
            r.threshold = p.role == ParamRole::UpperBound ? pow2(2 * q2) + pow2(q2) : Nat(0);
            r.pick = VertexPick::Merge;
            break;
        case Case::B:
            // An upper-bound parameter must not shrink below what the finite
            // token sets can realize; |Q| exceeds every such degree.
            r.threshold = p.role == ParamRole::UpperBound ? Nat(q) : Nat(0);
            r.pick = VertexPick::Separate;
            r.s = static_cast<std::size_t>(p.leaf_fn(q)) + 1;
            r.t = q;
            break;
        case Case::C: {
            Nat nq(q);
            r.threshold = p.role == ParamRole::UpperBound ? Nat(4 * pow(nq, 6) + 2 * pow(nq, 3)) : Nat(0);
            r.pick = VertexPick::Separate;
            r.s = 2 * q;
            r.t = q;
            break;
        }
        case Case::SpecialMinCut: {
            const std::size_t c = 1;
            Nat base = Nat(q + c) * Nat(q2);
            r.threshold = base * base;
            r.pick = VertexPick::Separate;
            r.s = c;
            r.t = q;
            break;
        }
        case Case::RedBlueA:
            r.threshold = pow2(q2);
            r.pick = VertexPick::MergeRedBlue;
            break;
        case Case::NotSupported:
            break;
    }
    return r;
}

RepFunction choose_rep(const Nfa& m, const TokenSets& ts, const ProblemSpec& p) {
    return choose_rep(m, ts, recipe_for(p, m.num_states()));
}

RepFunction choose_rep(const Nfa& m, const TokenSets& ts, const RepRecipe& r) {
    std::vector<RepFunction> parts{pick_threshold_all(ts, r.threshold)};
    switch (r.pick) {
        case VertexPick::Merge: parts.push_back(pick_merge(m, ts, Terminators::Both)); break;
        case VertexPick::MergeRedBlue:
            parts.push_back(pick_merge(m, ts, Terminators::LeftOnly));
            parts.push_back(pick_merge(m, ts, Terminators::RightOnly));
            break;
        case VertexPick::Separate: parts.push_back(pick_separate(ts, r.s, r.t)); break;
    }
    return union_reps(parts);
}

RepFunction choose_rep(const Nfa& m, const ProblemSpec& p) { return choose_rep(m, token_sets(m), p); }

Nfa normalize(const Nfa& raw) { return trim(intersect(raw, enc_nfa())); }

namespace {

std::string slice_pattern(std::uint64_t k, bool at_least) {
    return ">" + std::string(k, '1') + (at_least ? "1*" : "") + "$(>a*#>a*$)*";
}

// Searches the core of m (already normalized) built from recipe r.
Decision decide_normalized(const Nfa& raw, const Nfa& m, const ProblemSpec& p, const RepRecipe& r,
                           const EngineOptions& options) {
    Decision d;
    d.stats.states = m.num_states();
    if (is_empty(m)) {
        d.stats.exhausted = true;
        return d;
    }
    d.rep = choose_rep(m, token_sets(m), r);
    d.stats.rep_tokens = d.rep.total_tokens();
    d.stats.ell = core_length_bound(m, d.rep);

    std::map<GraphInstance, bool> cache;
    auto positive = [&](const GraphInstance& inst) {
        auto it = cache.find(inst);
        if (it != cache.end()) return it->second;
        bool v = solve(p, inst, options.solve_limits).positive;
        cache.emplace(inst, v);
        return v;
    };

    CoreSearch search;
    search.interpretation = p.red_blue ? Interpretation::RedBlue : Interpretation::Simple;
    search.max_configs = options.max_configs;
    if (p.subgraph_closed && !p.red_blue) {
        search.subgraph_dominance = true;
        search.simple_boundaries = true;
        search.prune = [&](const GraphInstance& inst) { return !positive(inst); };
    }
    search.on_instance = [&](const CoreInstance& inst) {
        Verdict v = p.red_blue ? solve_red_blue(p, inst.rb_instance, options.solve_limits)
                               : solve(p, inst.instance, options.solve_limits);
        if (!v.positive) return false;
        d.witness = Witness{inst.witness, inst.instance, inst.rb_instance, v};
        return true;
    };
    CoreSearchStats st = explore_core(m, d.rep, search);
    d.stats.core_size = st.instances;
    d.stats.configs = st.configs;
    d.stats.exhausted = st.exhausted;
    if (d.witness) {
        d.answer = Answer::NonEmpty;
        if (!verify_witness(raw, p, d.witness->word, options.solve_limits))
            throw std::logic_error("decide: witness failed independent verification");
    }
    return d;
}

}  // namespace

Decision decide(const Nfa& raw, const ProblemSpec& p, const EngineOptions& options) {
    if (!p.supported()) throw std::invalid_argument("problem '" + p.name + "' is not supported: " + p.note);
    Nfa m = normalize(raw);
    if (p.merge_below == 0) return decide_normalized(raw, m, p, recipe_for(p, m.num_states()), options);

    // One slice per small threshold, decided with merge picks, then the rest.
    Decision total;
    total.stats.states = m.num_states();
    total.stats.exhausted = true;
    auto absorb = [&](Decision&& d) {
        total.stats.core_size += d.stats.core_size;
        total.stats.configs += d.stats.configs;
        total.stats.rep_tokens += d.stats.rep_tokens;
        total.stats.ell = std::max(total.stats.ell, d.stats.ell);
        total.stats.exhausted = total.stats.exhausted && d.stats.exhausted;
        total.rep = std::move(d.rep);
        if (d.witness) {
            total.answer = Answer::NonEmpty;
            total.witness = std::move(d.witness);
        }
    };
    for (std::uint64_t k = 0; k < p.merge_below && !total.witness; ++k) {
        Nfa slice = normalize(intersect(m, compile_regex(slice_pattern(k, false))));
        RepRecipe r;
        r.threshold = 0;
        r.pick = VertexPick::Merge;
        absorb(decide_normalized(raw, slice, p, r, options));
    }
    if (!total.witness) {
        Nfa rest = normalize(intersect(m, compile_regex(slice_pattern(p.merge_below, true))));
        absorb(decide_normalized(raw, rest, p, recipe_for(p, rest.num_states()), options));
    }
    return total;
}

bool verify_witness(const Nfa& raw, const ProblemSpec& p, const TokenWord& w, const SolveLimits& limits) {
    if (!contains(raw, w) || !contains(enc_nfa(), w)) return false;
    try {
        if (p.red_blue) return solve_red_blue(p, decode_red_blue(w), limits).positive;
        return solve(p, decode(w), limits).positive;
    } catch (const EncodingError&) {
        return false;
    }
}

}  // namespace intreg
