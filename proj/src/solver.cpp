#include "ppt/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppt/canonical.hpp"
#include "ppt/graph6.hpp"
#include "ppt/subsets.hpp"

namespace ppt {

namespace {

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.add(v);
    return out;
}

}  // namespace

int domination_number(const Graph& g) {
    const int n = g.order();
    const VertexSet everything = g.vertices();
    for (int c = 0; c <= n; ++c) {
        bool found = for_each_subset_of_size(n, c, [&](std::uint64_t mask) {
            return g.closed_neighborhood(VertexSet(mask)) == everything;
        });
        if (found) return c;
    }
    return n;
}

MinSetSummary min_kpds_summary(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("min_kpds_summary: k >= 1 required");
    const int n = g.order();
    const VertexSet isolated = isolated_vertices(g);

    MinSetSummary out;
    out.k = k;
    for (int c = 0; c <= n; ++c) {
        for_each_subset_of_size(n, c, [&](std::uint64_t mask) {
            VertexSet s(mask);
            if (!isolated.subset_of(s)) return false;  // isolated vertices must be chosen
            PropagationTrace tr = run_process(g, s, k);
            if (tr.complete) {
                out.min_sets.push_back(s);
                out.times.push_back(tr.step_count());
            }
            return false;
        });
        if (!out.min_sets.empty()) {
            out.gamma_pk = c;
            break;
        }
    }

    out.min_time = *std::min_element(out.times.begin(), out.times.end());
    out.max_time = *std::max_element(out.times.begin(), out.times.end());
    std::uint64_t seen = 0;
    for (int t : out.times) seen |= 1ULL << t;
    out.interval_full = true;
    for (int r = out.min_time; r <= out.max_time; ++r)
        if (!((seen >> r) & 1)) out.interval_full = false;
    return out;
}

int gamma_pk(const Graph& g, int k) { return min_kpds_summary(g, k).gamma_pk; }

std::vector<VertexSet> all_min_kpds(const Graph& g, int k) {
    return min_kpds_summary(g, k).min_sets;
}

int ppt_k(const Graph& g, int k) { return min_kpds_summary(g, k).min_time; }

int PPT_k(const Graph& g, int k) { return min_kpds_summary(g, k).max_time; }

bool interval_is_full(const Graph& g, int k) { return min_kpds_summary(g, k).interval_full; }

std::vector<VertexSet> efficient_sets(const Graph& g, int k) {
    MinSetSummary s = min_kpds_summary(g, k);
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < s.min_sets.size(); ++i)
        if (s.times[i] == s.min_time) out.push_back(s.min_sets[i]);
    return out;
}

VertexSet k_strong_supports(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_strong_supports: k >= 1 required");
    const VertexSet leaves = leaf_vertices(g);
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if ((g.neighbors(v) & leaves).count() >= k + 1) out.add(v);
    return out;
}

std::optional<VertexSet> strong_support_dominating_set(const Graph& g, int k) {
    VertexSet w = k_strong_supports(g, k);
    if (g.closed_neighborhood(w) != g.vertices()) return std::nullopt;
    return w;
}

VertexSet private_neighborhood(const Graph& g, VertexSet s, int v) {
    if (!s.contains(v)) throw std::invalid_argument("private_neighborhood: v not in S");
    VertexSet rest = s - VertexSet::single(v);
    return g.closed_neighborhood(v) - g.closed_neighborhood(rest);
}

VertexSet nonprivate_vertices(const Graph& g, VertexSet s, int v) {
    return g.vertices() - (s | private_neighborhood(g, s, v));
}

bool is_Fk_free(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_Fk_free: k >= 1 required");
    if (contains_induced(g, cycle_graph(3))) return false;
    if (contains_induced(g, complete_bipartite(2, k + 1))) return false;
    if (contains_induced(g, join_k2_empty(k))) return false;
    return true;
}

InvariantReport analyze(const Graph& g, int k) {
    MinSetSummary s = min_kpds_summary(g, k);
    InvariantReport r;
    r.graph6 = graph6_encode(g);
    r.n = g.order();
    r.k = k;
    r.gamma = domination_number(g);
    r.gamma_pk = s.gamma_pk;
    r.ppt = s.min_time;
    r.PPT = s.max_time;
    r.interval_full = s.interval_full;
    r.num_min_sets = s.min_sets.size();
    for (std::size_t i = 0; i < s.min_sets.size(); ++i) {
        if (s.times[i] == s.min_time) { r.efficient_witness = s.min_sets[i]; break; }
    }
    for (std::size_t i = 0; i < s.min_sets.size(); ++i) {
        if (s.times[i] == s.max_time) { r.ppt_witness = s.min_sets[i]; break; }
    }
    return r;
}

}  // namespace ppt
