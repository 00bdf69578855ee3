#include "ppt/corpus.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ppt/canonical.hpp"
#include "ppt/graph6.hpp"

namespace ppt {

namespace {

constexpr int kMaxEnumeratedGraphOrder = 8;
constexpr int kMaxEnumeratedTreeOrder = 12;

// Grows every representative on n-1 vertices by one new vertex attached in
// all possible ways, then dedups by canonical form. Deleting any vertex of
// any n-vertex graph lands on some representative, so this is exhaustive.
std::vector<Graph> augment_graphs(const std::vector<Graph>& smaller) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : smaller) {
        const int n = g.order();
        std::vector<Edge> base = g.edges();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<Edge> es = base;
            VertexSet(mask).for_each([&](int v) { es.emplace_back(v, n); });
            std::string canon = canonical_g6(Graph::build(n + 1, es));
            seen.emplace(std::move(canon), Graph{});
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& [canon, unused] : seen) out.push_back(graph6_decode(canon));
    return out;
}

std::vector<Graph> augment_trees(const std::vector<Graph>& smaller) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : smaller) {
        const int n = g.order();
        std::vector<Edge> base = g.edges();
        for (int v = 0; v < n; ++v) {
            std::vector<Edge> es = base;
            es.emplace_back(v, n);
            std::string canon = canonical_g6(Graph::build(n + 1, es));
            seen.emplace(std::move(canon), Graph{});
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& [canon, unused] : seen) out.push_back(graph6_decode(canon));
    return out;
}

const std::vector<Graph>& cached_graphs(int n) {
    static std::mutex mu;
    static std::vector<std::vector<Graph>> levels{{}, {complete_graph(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(levels.size()) <= n)
        levels.push_back(augment_graphs(levels.back()));
    return levels[static_cast<std::size_t>(n)];
}

const std::vector<Graph>& cached_trees(int n) {
    static std::mutex mu;
    static std::vector<std::vector<Graph>> levels{{}, {complete_graph(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(levels.size()) <= n)
        levels.push_back(augment_trees(levels.back()));
    return levels[static_cast<std::size_t>(n)];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > kMaxEnumeratedGraphOrder)
        throw std::invalid_argument("enumerate_graphs: supported range is 1.." +
                                    std::to_string(kMaxEnumeratedGraphOrder));
    const std::vector<Graph>& all = cached_graphs(n);
    if (!connected_only) return all;
    std::vector<Graph> out;
    for (const Graph& g : all)
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kMaxEnumeratedTreeOrder)
        throw std::invalid_argument("enumerate_trees: supported range is 1.." +
                                    std::to_string(kMaxEnumeratedTreeOrder));
    return cached_trees(n);
}

void for_each_graph6(std::istream& in,
                     const std::function<void(std::size_t, Graph&&)>& fn,
                     bool skip_malformed,
                     const std::function<void(std::size_t, const std::string&)>& on_error) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view body = line;
        if (body.substr(0, 10) == ">>graph6<<") body.remove_prefix(10);
        if (body.empty()) continue;
        try {
            fn(line_no, graph6_decode(body));
        } catch (const std::invalid_argument& e) {
            if (!skip_malformed)
                throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
            if (on_error) on_error(line_no, e.what());
        }
    }
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    for_each_graph6(in, [&](std::size_t, Graph&& g) { out.push_back(std::move(g)); });
    return out;
}

std::vector<Graph> CorpusSpec::materialize() const {
    std::vector<Graph> pool;
    switch (source) {
        case Source::Graphs:
            for (int n = n_min; n <= n_max; ++n)
                for (Graph& g : enumerate_graphs(n, connected_only)) pool.push_back(std::move(g));
            break;
        case Source::Trees:
            for (int n = n_min; n <= n_max; ++n)
                for (Graph& g : enumerate_trees(n)) pool.push_back(std::move(g));
            break;
        case Source::File:
            pool = read_graph6_file(path);
            break;
    }
    std::vector<Graph> out;
    for (Graph& g : pool) {
        if (max_degree && g.max_degree() > *max_degree) continue;
        if (min_max_degree && g.max_degree() < *min_max_degree) continue;
        if (require_leaf && leaf_vertices(g).empty()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::string CorpusSpec::describe() const {
    std::ostringstream os;
    switch (source) {
        case Source::Graphs:
            os << (connected_only ? "connected graphs" : "graphs") << " n=" << n_min << ".." << n_max;
            break;
        case Source::Trees:
            os << "trees n=" << n_min << ".." << n_max;
            break;
        case Source::File:
            os << "file " << path;
            break;
    }
    if (max_degree) os << " maxdeg<=" << *max_degree;
    if (min_max_degree) os << " maxdeg>=" << *min_max_degree;
    if (require_leaf) os << " with-leaf";
    return os.str();
}

}  // namespace ppt
