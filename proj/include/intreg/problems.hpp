#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intreg/encoding.hpp"
#include "intreg/graphs.hpp"

namespace intreg {

enum class Case { A, B, C, SpecialMinCut, RedBlueA, NotSupported };
enum class ParamRole { LowerBound, UpperBound, NotParticipating };

std::string to_string(Case c);
std::string to_string(ParamRole r);

struct Certificate {
    std::string kind;  // "set", "partition", "cut", "edges", "edge-partition", ...
    std::vector<std::vector<Vertex>> sets;
    std::vector<std::vector<EdgePair>> edge_sets;
};

struct Verdict {
    bool positive = false;
    std::optional<Certificate> certificate;
};

class SolverLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveLimits {
    std::uint64_t max_nodes = std::uint64_t{1} << 24;
};

struct ProblemSpec {
    std::string name;
    std::string title;
    Case kind = Case::NotSupported;
    ParamRole role = ParamRole::NotParticipating;
    // Leaf count sufficient for a positive answer; case B and MinCut only.
    std::function<std::uint64_t(std::uint64_t)> leaf_fn;
    // k >= |V|+|E| answers positive without search.
    bool trivial_upper = false;
    // Positive answers survive vertex and edge deletion.
    bool subgraph_closed = false;
    bool red_blue = false;
    // Thresholds k below this value are decided with the merge recipe; the
    // case tag only holds for k >= merge_below.
    std::uint64_t merge_below = 0;
    // Why the problem is unsupported, or how its leaf function was chosen.
    std::string note;
    std::function<Verdict(const Graph&, std::uint64_t, const SolveLimits&)> solver;
    std::function<Verdict(const RedBlueGraph&, std::uint64_t, const SolveLimits&)> rb_solver;

    bool supported() const { return kind != Case::NotSupported; }
};

const std::vector<ProblemSpec>& registry();
// Throws std::invalid_argument for unknown names.
const ProblemSpec& find_problem(const std::string& name);

// Thresholds beyond 2^63 are treated as 2^63; no desk-scale graph can tell.
std::uint64_t saturate(const Nat& k);

Verdict solve(const ProblemSpec& p, const GraphInstance& inst, const SolveLimits& limits = {});
Verdict solve_red_blue(const ProblemSpec& p, const RedBlueInstance& inst, const SolveLimits& limits = {});

// Exact optima used by the solvers; exposed for tests.
namespace exact {
std::vector<Vertex> min_vertex_cover(const Graph& g, const SolveLimits& limits = {});
std::vector<Vertex> max_independent_set(const Graph& g, const SolveLimits& limits = {});
std::vector<Vertex> min_dominating_set(const Graph& g, const SolveLimits& limits = {});
std::vector<Vertex> min_rb_dominating_set(const RedBlueGraph& g, const SolveLimits& limits = {});
std::size_t chromatic_number(const Graph& g, const SolveLimits& limits = {});
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);
}  // namespace exact

}  // namespace intreg
