#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spinaltri {

/// Subset of a polytope's vertex indices (at most 64 vertices).
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

inline constexpr VertexMask full_mask(std::size_t n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

inline std::size_t count(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline bool contains_all(VertexMask outer, VertexMask inner) { return (outer & inner) == inner; }

inline std::vector<std::size_t> indices_of(VertexMask m) {
    std::vector<std::size_t> out;
    out.reserve(count(m));
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline VertexMask mask_of(const std::vector<std::size_t>& indices) {
    VertexMask m = 0;
    for (auto i : indices) m |= bit(i);
    return m;
}

}  // namespace spinaltri
