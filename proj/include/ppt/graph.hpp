#pragma once

#include <string>
#include <vector>

#include "ppt/vertex_set.hpp"

namespace ppt {

// Undirected edge, stored normalized with u < v.
struct Edge {
    int u, v;
    Edge(int a, int b);
    friend bool operator==(const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; }
    friend bool operator<(const Edge& x, const Edge& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    }
};

// Immutable simple graph on at most 64 vertices, adjacency stored per vertex
// as a VertexSet. All operations on Graph are pure; instances are safe to
// share across threads.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;  // the null graph

    // Validates endpoints, rejects loops and duplicate edges.
    static Graph build(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::all(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const { return neighbors(v) | VertexSet::single(v); }

    // N(S) and N[S] for a set of vertices.
    VertexSet neighbors_of_set(VertexSet s) const;
    VertexSet closed_neighborhood(VertexSet s) const { return s | neighbors_of_set(s); }

    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const;
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Structural operations. Subdivision places the new vertex at index n;
// contraction keeps index min(u,v) and shifts indices above max(u,v) down,
// so traces stay reproducible.
Graph complement(const Graph& g);
Graph subdivide(const Graph& g, Edge e);
Graph contract(const Graph& g, Edge e);
Graph induced(const Graph& g, VertexSet keep);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Vertices of degree exactly 1.
VertexSet leaf_vertices(const Graph& g);

// Named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_minus_edge(int n);
Graph complete_bipartite(int s, int t);
Graph star_graph(int leaves);                 // K_{1,n}
Graph empty_graph(int n);                     // no edges
Graph lollipop(int s, int t);                 // K_s bridged to P_t, s >= 3, t >= 1
Graph spider(const std::vector<int>& arms);   // center plus arms of the given lengths
Graph join_k2_empty(int k);                   // two adjacent vertices joined to k isolated ones

// Parses descriptors like "path:6", "spider:1,1,4", "complete-bipartite:2,3".
Graph family_from_descriptor(const std::string& desc);

}  // namespace ppt
