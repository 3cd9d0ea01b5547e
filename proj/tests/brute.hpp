#pragma once

// Brute-force references used only by the tests. They work on raw bitmasks
// and F2 bit vectors and share no code with the library's elimination.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace brute {

using Mask = std::uint32_t;

inline std::vector<Mask> closure(int m, const std::vector<Mask>& gens) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << m); ++s)
        for (Mask g : gens)
            if ((s & ~g) == 0) {
                out.push_back(s);
                break;
            }
    if (gens.empty()) out.push_back(0);
    return out;
}

inline bool has(const std::vector<Mask>& faces, Mask f) { return std::find(faces.begin(), faces.end(), f) != faces.end(); }

inline std::vector<Mask> link(const std::vector<Mask>& faces, Mask sigma) {
    std::vector<Mask> out;
    for (Mask t : faces)
        if ((t & sigma) == 0 && has(faces, t | sigma)) out.push_back(t);
    return out;
}

inline std::vector<Mask> restrict_to(const std::vector<Mask>& faces, Mask i) {
    std::vector<Mask> out;
    for (Mask t : faces)
        if ((t & ~i) == 0) out.push_back(t);
    return out;
}

// rank over F2 of a list of bit rows (each row up to 64 * words bits)
inline int rank_f2(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t w = 0; w < words; ++w)
        for (int b = 0; b < 64; ++b) {
            std::uint64_t bit = std::uint64_t{1} << b;
            std::size_t piv = static_cast<std::size_t>(rank);
            while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != static_cast<std::size_t>(rank) && (rows[r][w] & bit))
                    for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
            ++rank;
        }
    return rank;
}

// Reduced Betti numbers over F2, index d+1 for d = -1..max face dim.
inline std::vector<int> betti_f2(const std::vector<Mask>& faces) {
    int top = -1;
    for (Mask f : faces) top = std::max(top, std::popcount(f) - 1);
    std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));
    for (Mask f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    // boundary rank from dim d to d-1, for d = 0..top (augmented)
    std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d)];
        std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        for (Mask f : by_dim[static_cast<std::size_t>(d + 1)]) {
            std::vector<std::uint64_t> row(words, 0);
            for (std::size_t k = 0; k < lower.size(); ++k)
                if ((lower[k] & ~f) == 0) row[k / 64] |= std::uint64_t{1} << (k % 64);
            rows.push_back(row);
        }
        rank[static_cast<std::size_t>(d + 1)] = words ? rank_f2(rows) : 0;
    }
    std::vector<int> betti(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) {
        int n = static_cast<int>(by_dim[static_cast<std::size_t>(d + 1)].size());
        int out = d + 1 <= top ? rank[static_cast<std::size_t>(d + 2)] : 0;
        int in = rank[static_cast<std::size_t>(d + 1)];
        betti[static_cast<std::size_t>(d + 1)] = n - out - in;
    }
    return betti;
}

}  // namespace brute
