#pragma once

#include <utility>

#include "ppt/graph.hpp"

namespace ppt {

// Bespoke families used by the verification harness.

// Family with propagation-time sum n against its complement. n >= 9; built
// from the 9-vertex seed by repeatedly attaching a vertex to the previous two.
Graph ng_family(int n);

// Caterpillar whose subdivision at the designated edge drops the propagation
// time: path v_1..v_l with two leaves on each end vertex and one leaf on each
// of v_{l-1}, v_{l-2}. l >= 7. Returns the graph and the edge to subdivide.
std::pair<Graph, Edge> subdiv_decrease_gadget(int l);

// Near-cycle whose subdivision at the designated edge raises the propagation
// time. n >= 8.
std::pair<Graph, Edge> subdiv_increase_gadget(int n);

// Path v_1..v_n with an extra leaf on each of v_2 and v_3 (n + 2 vertices,
// n >= 5): its efficient sets avoid the all-high-degree minimum set.
Graph deg3_example(int n);

}  // namespace ppt
