#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ppt {

// Set of vertex indices 0..63 packed into a single word. This is the
// universal currency for starting sets, closed neighborhoods, propagation
// fronts and zero-forcing colorings.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1ULL; }
    constexpr void add(int v) { bits |= 1ULL << v; }
    constexpr void remove(int v) { bits &= ~(1ULL << v); }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    // Lowest vertex in the set, -1 when empty.
    constexpr int first() const {
        return bits ? std::countr_zero(bits) : -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t m = bits; m; m &= m - 1) f(std::countr_zero(m));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

}  // namespace ppt
