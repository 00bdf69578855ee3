#include "ppt/gadgets.hpp"

#include <stdexcept>

namespace ppt {

Graph ng_family(int n) {
    if (n < 9) throw std::invalid_argument("ng_family: n >= 9 required");
    // 0-indexed transcription of the 9-vertex seed
    std::vector<Edge> es{Edge(0, 2), Edge(0, 1), Edge(1, 4), Edge(2, 3), Edge(2, 4),
                         Edge(4, 6), Edge(6, 8), Edge(1, 3), Edge(3, 5), Edge(5, 7),
                         Edge(7, 8), Edge(4, 5), Edge(5, 6), Edge(6, 7)};
    for (int m = 10; m <= n; ++m) {
        es.emplace_back(m - 3, m - 1);
        es.emplace_back(m - 2, m - 1);
    }
    return Graph::build(n, es);
}

std::pair<Graph, Edge> subdiv_decrease_gadget(int l) {
    if (l < 7) throw std::invalid_argument("subdiv_decrease_gadget: l >= 7 required");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < l; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, l);          // two leaves on v_1
    es.emplace_back(0, l + 1);
    es.emplace_back(l - 1, l + 2);  // two leaves on v_l
    es.emplace_back(l - 1, l + 3);
    es.emplace_back(l - 2, l + 4);  // one leaf on v_{l-1}
    es.emplace_back(l - 3, l + 5);  // one leaf on v_{l-2}
    return {Graph::build(l + 6, es), Edge(l - 3, l - 2)};
}

std::pair<Graph, Edge> subdiv_increase_gadget(int n) {
    if (n < 8) throw std::invalid_argument("subdiv_increase_gadget: n >= 8 required");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n - 4; ++i) es.emplace_back(i, i + 1);  // cycle v_1..v_{n-4}
    es.emplace_back(0, n - 5);
    es.emplace_back(0, n - 4);  // v_1 v_{n-3}
    es.emplace_back(0, n - 3);  // v_1 v_{n-2}
    es.emplace_back(0, n - 2);  // v_1 v_{n-1}
    es.emplace_back(1, n - 2);  // v_2 v_{n-1}
    es.emplace_back(n - 1, n - 2);  // v_n v_{n-1}
    return {Graph::build(n, es), Edge(1, n - 2)};
}

Graph deg3_example(int n) {
    if (n < 5) throw std::invalid_argument("deg3_example: n >= 5 required");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(1, n);      // leaf on v_2
    es.emplace_back(2, n + 1);  // leaf on v_3
    return Graph::build(n + 2, es);
}

}  // namespace ppt
