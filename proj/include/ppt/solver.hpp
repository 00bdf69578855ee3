#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppt/graph.hpp"
#include "ppt/process.hpp"

namespace ppt {

// Everything the minimum k-power dominating sets of a graph determine:
// their size, the sets themselves (ascending bitmask order) and the
// propagation time of each.
struct MinSetSummary {
    int k = 1;
    int gamma_pk = 0;
    std::vector<VertexSet> min_sets;
    std::vector<int> times;
    int min_time = 0;  // ppt_k(G)
    int max_time = 0;  // PPT_k(G)
    bool interval_full = true;
};

MinSetSummary min_kpds_summary(const Graph& g, int k);

int domination_number(const Graph& g);
int gamma_pk(const Graph& g, int k);
std::vector<VertexSet> all_min_kpds(const Graph& g, int k);
int ppt_k(const Graph& g, int k);
int PPT_k(const Graph& g, int k);
bool interval_is_full(const Graph& g, int k);
std::vector<VertexSet> efficient_sets(const Graph& g, int k);

// Vertices adjacent to at least k+1 leaves.
VertexSet k_strong_supports(const Graph& g, int k);

// The set of all k-strong supports when it dominates G (it is then the
// unique minimum dominating set); absent otherwise.
std::optional<VertexSet> strong_support_dominating_set(const Graph& g, int k);

// pn[v,S] = N[v] \ N[S \ {v}]; requires v in S.
VertexSet private_neighborhood(const Graph& g, VertexSet s, int v);
// Everything outside S that is not a private neighbor of v.
VertexSet nonprivate_vertices(const Graph& g, VertexSet s, int v);

// No induced C_3, K_{2,k+1} or K_2 joined to k isolated vertices.
bool is_Fk_free(const Graph& g, int k);

struct InvariantReport {
    std::string graph6;
    int n = 0;
    int k = 1;
    int gamma = 0;
    int gamma_pk = 0;
    int ppt = 0;
    int PPT = 0;
    bool interval_full = true;
    std::size_t num_min_sets = 0;
    VertexSet efficient_witness;  // achieves ppt
    VertexSet ppt_witness;        // achieves PPT
};

InvariantReport analyze(const Graph& g, int k);

}  // namespace ppt
