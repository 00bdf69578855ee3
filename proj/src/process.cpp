#include "ppt/process.hpp"

#include <stdexcept>

#include "ppt/subsets.hpp"

namespace ppt {

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    return g.closed_neighborhood(s);
}

PropagationTrace run_process(const Graph& g, VertexSet start, int k) {
    if (k < 1) throw std::invalid_argument("run_process: k >= 1 required");
    if (!start.subset_of(g.vertices()))
        throw std::invalid_argument("run_process: starting set not within V(G)");

    const VertexSet everything = g.vertices();
    PropagationTrace tr;
    tr.k = k;
    tr.steps.push_back(start);
    if (start == everything) {
        tr.complete = true;
        return tr;
    }

    // domination step
    ForceList dom;
    VertexSet observed = start;
    start.for_each([&](int s) {
        VertexSet fresh = g.neighbors(s) - start;
        if (!fresh.empty()) dom.emplace_back(s, fresh);
        observed |= g.neighbors(s);
    });
    tr.steps.push_back(observed);
    tr.forces.push_back(std::move(dom));
    if (observed == start) return tr;  // nothing dominated: stall marked by the repeat

    for (;;) {
        VertexSet cur = tr.steps.back();
        if (cur == everything) {
            tr.complete = true;
            return tr;
        }
        ForceList fl;
        VertexSet added;
        cur.for_each([&](int v) {
            VertexSet white = g.neighbors(v) - cur;
            if (!white.empty() && white.count() <= k) {
                fl.emplace_back(v, white);
                added |= white;
            }
        });
        tr.steps.push_back(cur | added);
        tr.forces.push_back(std::move(fl));
        if (added.empty()) return tr;  // fixed point short of V
    }
}

bool is_kpds(const Graph& g, VertexSet start, int k) {
    return run_process(g, start, k).complete;
}

std::optional<int> ppt_of_set(const Graph& g, VertexSet start, int k) {
    PropagationTrace tr = run_process(g, start, k);
    if (!tr.complete) return std::nullopt;
    return tr.step_count();
}

ZfTrace zf_closure(const Graph& g, VertexSet blue) {
    if (!blue.subset_of(g.vertices()))
        throw std::invalid_argument("zf_closure: blue set not within V(G)");
    const VertexSet everything = g.vertices();
    ZfTrace tr;
    tr.rounds.push_back(blue);
    VertexSet cum = blue;
    while (cum != everything) {
        VertexSet delta;
        cum.for_each([&](int b) {
            VertexSet white = g.neighbors(b) - cum;
            if (white.count() == 1) delta |= white;
        });
        if (delta.empty()) return tr;  // complete stays false
        tr.rounds.push_back(delta);
        cum |= delta;
    }
    tr.complete = true;
    return tr;
}

int zero_forcing_number(const Graph& g) {
    const int n = g.order();
    for (int c = 0; c <= n; ++c) {
        bool found = for_each_subset_of_size(n, c, [&](std::uint64_t mask) {
            return zf_closure(g, VertexSet(mask)).complete;
        });
        if (found) return c;
    }
    return n;  // unreachable: B = V always forces
}

}  // namespace ppt
