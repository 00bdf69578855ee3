#include "ppt/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace ppt {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
        if (g.adj_[static_cast<std::size_t>(e.u)].contains(e.v))
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v));
        g.adj_[static_cast<std::size_t>(e.u)].add(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].add(e.u);
    }
    return g;
}

VertexSet Graph::neighbors_of_set(VertexSet s) const {
    VertexSet out;
    s.for_each([&](int v) { out |= neighbors(v); });
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return neighbors(u).contains(v);
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return Graph::build(g.order(), es);
}

Graph subdivide(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("subdivide: edge not present");
    if (g.order() + 1 > Graph::max_vertices)
        throw std::invalid_argument("subdivide: vertex limit reached");
    int w = g.order();
    std::vector<Edge> es;
    for (const Edge& f : g.edges())
        if (!(f == e)) es.push_back(f);
    es.emplace_back(e.u, w);
    es.emplace_back(e.v, w);
    return Graph::build(g.order() + 1, es);
}

Graph contract(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("contract: edge not present");
    // Merged vertex keeps index e.u (= min); indices above e.v shift down.
    auto remap = [&](int x) { return x == e.v ? e.u : (x > e.v ? x - 1 : x); };
    std::set<Edge> es;
    for (const Edge& f : g.edges()) {
        if (f == e) continue;
        int a = remap(f.u), b = remap(f.v);
        if (a != b) es.insert(Edge(a, b));
    }
    return Graph::build(g.order() - 1, std::vector<Edge>(es.begin(), es.end()));
}

Graph induced(const Graph& g, VertexSet keep) {
    std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
    int m = 0;
    keep.for_each([&](int v) { idx[static_cast<std::size_t>(v)] = m++; });
    std::vector<Edge> es;
    keep.for_each([&](int u) {
        (g.neighbors(u) & keep).for_each([&](int v) {
            if (u < v) es.emplace_back(idx[static_cast<std::size_t>(u)], idx[static_cast<std::size_t>(v)]);
        });
    });
    return Graph::build(m, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::max_vertices)
        throw std::invalid_argument("disjoint_union: vertex limit reached");
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph::build(a.order() + b.order(), es);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::single(remaining.first());
        for (;;) {
            VertexSet grown = g.closed_neighborhood(comp);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet leaf_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.add(v);
    return out;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::build(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph::build(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::build(n, es);
}

Graph complete_minus_edge(int n) {
    if (n < 2) throw std::invalid_argument("complete-minus-edge: n >= 2 required");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) es.emplace_back(u, v);
    return Graph::build(n, es);
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete-bipartite: sides >= 1 required");
    std::vector<Edge> es;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) es.emplace_back(u, s + v);
    return Graph::build(s + t, es);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: leaf count >= 0 required");
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph::build(leaves + 1, es);
}

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("empty: n >= 0 required");
    return Graph::build(n, {});
}

Graph lollipop(int s, int t) {
    if (s < 3 || t < 1) throw std::invalid_argument("lollipop: s >= 3 and t >= 1 required");
    std::vector<Edge> es;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) es.emplace_back(u, v);
    es.emplace_back(s - 1, s);  // the bridge
    for (int i = s; i + 1 < s + t; ++i) es.emplace_back(i, i + 1);
    return Graph::build(s + t, es);
}

Graph spider(const std::vector<int>& arms) {
    if (arms.empty()) throw std::invalid_argument("spider: at least one arm required");
    for (int len : arms)
        if (len < 1) throw std::invalid_argument("spider: arm lengths >= 1 required");
    std::vector<Edge> es;
    int next = 1;
    for (int len : arms) {
        es.emplace_back(0, next);
        for (int i = 1; i < len; ++i, ++next) es.emplace_back(next, next + 1);
        ++next;
    }
    return Graph::build(next, es);
}

Graph join_k2_empty(int k) {
    if (k < 0) throw std::invalid_argument("join-k2-empty: k >= 0 required");
    std::vector<Edge> es{Edge(0, 1)};
    for (int v = 2; v < k + 2; ++v) {
        es.emplace_back(0, v);
        es.emplace_back(1, v);
    }
    return Graph::build(k + 2, es);
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty parameter in '" + s + "'");
        out.push_back(std::stoi(tok));
        pos = next + 1;
    }
    return out;
}

}  // namespace

Graph family_from_descriptor(const std::string& desc) {
    std::size_t colon = desc.find(':');
    std::string name = desc.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) args = parse_int_list(desc.substr(colon + 1));

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("family '" + name + "' expects " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "path") { want(1); return path_graph(args[0]); }
    if (name == "cycle") { want(1); return cycle_graph(args[0]); }
    if (name == "complete") { want(1); return complete_graph(args[0]); }
    if (name == "complete-minus-edge") { want(1); return complete_minus_edge(args[0]); }
    if (name == "complete-bipartite") { want(2); return complete_bipartite(args[0], args[1]); }
    if (name == "star") { want(1); return star_graph(args[0]); }
    if (name == "empty") { want(1); return empty_graph(args[0]); }
    if (name == "lollipop") { want(2); return lollipop(args[0], args[1]); }
    if (name == "join-k2-empty") { want(1); return join_k2_empty(args[0]); }
    if (name == "spider") {
        if (args.empty()) throw std::invalid_argument("spider expects arm lengths");
        return spider(args);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace ppt
