#include "ppt/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "ppt/graph6.hpp"
#include "ppt/subsets.hpp"

namespace ppt {

namespace {

// Exact colour refinement to a stable partition. Signatures are the full
// (own colour, sorted neighbour colours) tuples, so there is no hashing and
// the resulting ranks depend only on the isomorphism type. Returns dense
// ranks 0..k-1.
std::vector<int> refine(const Graph& g, std::vector<int> colour) {
    const int n = g.order();
    for (;;) {
        int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
        std::map<std::vector<int>, int> rank;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(colour[static_cast<std::size_t>(v)]);
            g.neighbors(v).for_each([&](int u) { s.push_back(colour[static_cast<std::size_t>(u)]); });
            std::sort(s.begin() + 1, s.end());
            rank.emplace(s, 0);
        }
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            out[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        // classes only ever split, so an unchanged count means stable
        if (next == before) return out;
        colour = std::move(out);
    }
}

// Packs the adjacency of g under the labeling old->new given by `pos` into
// graph6 bit order (upper triangle, column major).
std::string packed_bits(const Graph& g, const std::vector<int>& pos) {
    const int n = g.order();
    std::vector<int> old_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) old_of[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    std::string out;
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) |
                  (g.has_edge(old_of[static_cast<std::size_t>(u)], old_of[static_cast<std::size_t>(v)]) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

void search(const Graph& g, std::vector<int> colour, std::string& best, bool& have_best) {
    const int n = g.order();
    colour = refine(g, colour);

    // first class (in colour order) that is not a singleton
    int target = -1;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])];
    for (int c = 0; c < n; ++c)
        if (count[static_cast<std::size_t>(c)] > 1) { target = c; break; }

    if (target < 0) {
        // discrete colouring: colours are a bijection onto 0..n-1
        std::string s = packed_bits(g, colour);
        if (!have_best || s < best) {
            best = std::move(s);
            have_best = true;
        }
        return;
    }
    // individualize one vertex per twin-orbit of the target class; twins
    // (equal neighborhoods up to each other) are swapped by an automorphism,
    // so their branches yield the same minimum
    std::vector<int> branched;
    for (int v = 0; v < n; ++v) {
        if (colour[static_cast<std::size_t>(v)] != target) continue;
        bool duplicate = false;
        for (int u : branched) {
            if ((g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u))) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        branched.push_back(v);
        std::vector<int> child = colour;
        child[static_cast<std::size_t>(v)] = n;
        search(g, std::move(child), best, have_best);
    }
}

bool every_labeling_equivalent(const Graph& g) {
    // complete and edgeless graphs: every labeling gives the same bit-string
    std::size_t m = g.edge_count();
    auto n = static_cast<std::size_t>(g.order());
    return m == 0 || 2 * m == n * (n - 1);
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::string size_prefix(int n) {
    std::string full = graph6_encode(empty_graph(n));
    return full.substr(0, n <= 62 ? 1 : 4);
}

}  // namespace

std::string canonical_g6(const Graph& g) {
    const int n = g.order();
    if (n <= 1 || every_labeling_equivalent(g)) return graph6_encode(g);
    std::string best;
    bool have_best = false;
    search(g, std::vector<int>(static_cast<std::size_t>(n), 0), best, have_best);
    return size_prefix(n) + best;
}

Graph canonical_graph(const Graph& g) { return graph6_decode(canonical_g6(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    return canonical_g6(a) == canonical_g6(b);
}

bool contains_induced(const Graph& g, const Graph& h) {
    const int n = g.order(), m = h.order();
    if (m > n) return false;
    if (m == 0) return true;
    const std::size_t h_edges = h.edge_count();
    const std::vector<int> h_deg = sorted_degrees(h);
    const std::string h_canon = canonical_g6(h);

    return for_each_subset_of_size(n, m, [&](std::uint64_t mask) {
        Graph sub = induced(g, VertexSet(mask));
        return sub.edge_count() == h_edges && sorted_degrees(sub) == h_deg &&
               canonical_g6(sub) == h_canon;
    });
}

}  // namespace ppt
