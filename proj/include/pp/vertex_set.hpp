#pragma once

#include <bit>
#include <compare>
#include <functional>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <vector>

namespace pp {

inline constexpr int kMaxVertices = 30;

// Subset of the ambient vertex labels 1..kMaxVertices; label v lives in bit v-1.
class VertexSet {
public:
    using Bits = std::uint32_t;

    constexpr VertexSet() = default;
    static constexpr VertexSet from_bits(Bits bits) { VertexSet s; s.bits_ = bits; return s; }
    static constexpr VertexSet range(int m) { return from_bits(m <= 0 ? 0u : (m >= 32 ? ~0u : ((Bits{1} << m) - 1))); }
    static VertexSet of(std::initializer_list<int> labels) {
        VertexSet s;
        for (int v : labels) s.insert(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& labels) {
        VertexSet s;
        for (int v : labels) s.insert(v);
        return s;
    }
    static constexpr VertexSet single(int v) { return from_bits(Bits{1} << (v - 1)); }

    constexpr Bits bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return v >= 1 && v <= 32 && ((bits_ >> (v - 1)) & 1u); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }
    constexpr void insert(int v) { bits_ |= Bits{1} << (v - 1); }
    constexpr void erase(int v) { bits_ &= ~(Bits{1} << (v - 1)); }
    constexpr int min() const { return std::countr_zero(bits_) + 1; }
    constexpr int max() const { return 32 - std::countl_zero(bits_); }

    // number of elements of this set smaller than v
    constexpr int rank_of(int v) const { return std::popcount(bits_ & ((Bits{1} << (v - 1)) - 1)); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(size());
        for (Bits b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : labels()) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;


private:
    Bits bits_ = 0;
};

// shortlex: by size, then lexicographic on increasing label lists
constexpr bool shortlex_less(VertexSet a, VertexSet b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    VertexSet::Bits d = a.bits() ^ b.bits();
    if (!d) return false;
    return (a.bits() & (d & (~d + 1))) != 0;
}

constexpr auto operator<=>(VertexSet a, VertexSet b) {
    if (a == b) return std::strong_ordering::equal;
    return shortlex_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// Iterate all subsets of `s` in increasing binary order of their bit patterns.
template <class F>
void for_each_subset(VertexSet s, F&& f) {
    VertexSet::Bits full = s.bits(), sub = 0;
    while (true) {
        f(VertexSet::from_bits(sub));
        if (sub == full) break;
        sub = (sub - full) & full;
    }
}

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

}  // namespace pp
