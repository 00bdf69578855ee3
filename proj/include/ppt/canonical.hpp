#pragma once

#include <string>

#include "ppt/graph.hpp"

namespace ppt {

// Canonical form: a graph6 string shared by exactly the graphs isomorphic to
// g. Computed by exact colour refinement with individualization, taking the
// minimum adjacency bit-string over the labelings the search admits.
std::string canonical_g6(const Graph& g);

// The canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

}  // namespace ppt
