#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppt/graph.hpp"

namespace ppt {

// Forces performed in one step: (forcer vertex, vertices it observed).
using ForceList = std::vector<std::pair<int, VertexSet>>;

// Record of one run of the k-power domination process. steps[0] is the
// starting set, steps[1] = N[steps[0]] (the domination step), and each later
// entry adds every vertex forceable from its predecessor at once. The steps
// strictly increase, except that a stalled run ends with a repeated entry.
// forces[i] describes the transition steps[i] -> steps[i+1].
struct PropagationTrace {
    int k = 1;
    std::vector<VertexSet> steps;
    std::vector<ForceList> forces;
    bool complete = false;

    int step_count() const { return static_cast<int>(steps.size()) - 1; }
};

// Zero forcing rounds as deltas: rounds[0] is the starting blue set, each
// later entry is the set of vertices forced in that round.
struct ZfTrace {
    std::vector<VertexSet> rounds;
    bool complete = false;

    VertexSet final_coloring() const {
        VertexSet s;
        for (VertexSet r : rounds) s |= r;
        return s;
    }
    // Propagation time; only meaningful when complete.
    int propagation_time() const { return static_cast<int>(rounds.size()) - 1; }
};

VertexSet closed_neighborhood(const Graph& g, VertexSet s);

// Synchronous k-power domination process from the given starting set.
// Requires k >= 1 and start within V(G).
PropagationTrace run_process(const Graph& g, VertexSet start, int k);

bool is_kpds(const Graph& g, VertexSet start, int k);

// Number of steps until everything is observed, or nullopt when the process
// stalls (run_process exposes the stalled set for diagnostics).
std::optional<int> ppt_of_set(const Graph& g, VertexSet start, int k);

// Synchronous zero forcing closure of the blue set.
ZfTrace zf_closure(const Graph& g, VertexSet blue);

// Minimum size of a zero forcing set, by increasing-cardinality search.
int zero_forcing_number(const Graph& g);

}  // namespace ppt
