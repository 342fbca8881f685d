#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hserre {

inline constexpr int kMaxVertices = 64;

/// A finite set of vertex labels drawn from 1..64, stored as a bit mask
/// (label v occupies bit v-1). Used for faces, facets and vertex covers.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t mask) : mask_(mask) {}
    // Labels must lie in 1..64; callers validate user input beforehand.
    Face(std::initializer_list<int> vertices);
    explicit Face(const std::vector<int>& vertices);

    static constexpr Face full(int n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr Face single(int v) { return Face(std::uint64_t{1} << (v - 1)); }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
    constexpr bool subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(Face other) const { return (mask_ & other.mask_) != 0; }
    // Smallest label, or 0 for the empty set.
    constexpr int min_vertex() const { return mask_ ? std::countr_zero(mask_) + 1 : 0; }
    constexpr int max_vertex() const { return mask_ ? 64 - std::countl_zero(mask_) : 0; }

    constexpr Face operator|(Face o) const { return Face(mask_ | o.mask_); }
    constexpr Face operator&(Face o) const { return Face(mask_ & o.mask_); }
    constexpr Face without(Face o) const { return Face(mask_ & ~o.mask_); }
    constexpr Face with(int v) const { return Face(mask_ | (std::uint64_t{1} << (v - 1))); }

    std::vector<int> vertices() const;
    // "{1,2,3}"; the empty face prints as "{}".
    std::string to_string() const;

    friend constexpr bool operator==(Face, Face) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Canonical face order: by cardinality, then lexicographically by the
/// characteristic word (x_1, ..., x_n) with 0 < 1. Within a cardinality this
/// puts {3,4,5} before {2,4,5} before {2,3,4}. Matrix indices, witnesses and
/// listings all use this order.
constexpr bool face_less(Face a, Face b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    const std::uint64_t diff = a.mask() ^ b.mask();
    if (diff == 0)
        return false;
    // The lowest differing label decides; the set holding it has a 1 there.
    return (b.mask() >> std::countr_zero(diff)) & 1U;
}

/// Bit i of x moved to bit 63 - i.
constexpr std::uint64_t reverse_bits(std::uint64_t x) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    return (x >> 32) | (x << 32);
}

/// Among faces of one size, face_less(a, b) iff same_size_key(a) < same_size_key(b).
constexpr std::uint64_t same_size_key(Face f) { return reverse_bits(f.mask()); }

struct FaceLess {
    constexpr bool operator()(Face a, Face b) const { return face_less(a, b); }
};

/// Sorts by face_less and removes duplicates.
void sort_unique(std::vector<Face>& faces);

/// Calls fn(Face) once for every k-element subset of `set`.
template <typename Fn>
void for_each_subset_of_size(Face set, int k, Fn&& fn) {
    const int m = set.size();
    if (k < 0 || k > m)
        return;
    if (k == 0) {
        fn(Face{});
        return;
    }
    if (m <= 10) {
        // Small sets: walk all submasks, increasing as integers.
        const std::uint64_t top = set.mask();
        std::uint64_t s = 0;
        do {
            s = (s - top) & top;
            if (std::popcount(s) == k)
                fn(Face(s));
        } while (s != top);
        return;
    }
    int bits[64];
    {
        std::uint64_t rest = set.mask();
        for (int i = 0; i < m; ++i) {
            bits[i] = std::countr_zero(rest);
            rest &= rest - 1;
        }
    }
    int idx[64];
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i = 0; i < k; ++i)
            mask |= std::uint64_t{1} << bits[idx[i]];
        fn(Face(mask));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace hserre
