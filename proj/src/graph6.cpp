#include "ppt/graph6.hpp"

#include <stdexcept>

namespace ppt {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 18-bit size, high group first
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    auto push_bit = [&](int b) {
        acc = (acc << 1) | b;
        if (++nbits == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            nbits = 0;
        }
    };
    // upper triangle, column by column
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) push_bit(g.has_edge(u, v) ? 1 : 0);
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty string");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: invalid byte at position " + std::to_string(i));
        return c - 63;
    };

    long n;
    if (byte(0) == 63 && line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw std::invalid_argument("graph6: graphs beyond 258047 vertices unsupported");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw std::invalid_argument("graph6: " + std::to_string(n) + " vertices exceeds limit of 64");

    long nbits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < need) throw std::invalid_argument("graph6: truncated edge data");
    if (line.size() - pos > need) throw std::invalid_argument("graph6: trailing characters");

    std::vector<Edge> es;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((byte(pos + static_cast<std::size_t>(bit / 6)) >> (5 - bit % 6)) & 1)
                es.emplace_back(u, v);
    // padding bits must be zero
    for (long b = nbits; b < static_cast<long>(need) * 6; ++b)
        if ((byte(pos + static_cast<std::size_t>(b / 6)) >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    return Graph::build(static_cast<int>(n), es);
}

}  // namespace ppt
