#pragma once

#include <bit>
#include <cstdint>

namespace domgame {

/// Fixed-width set over indices 0..63. Used for both vertex sets and
/// edge-index sets; the solver hot loop works on the raw word.
struct Bitset64 {
    std::uint64_t bits = 0;

    static constexpr Bitset64 single(int i) { return {std::uint64_t{1} << i}; }

    /// The set {0, ..., k-1}. k == 64 yields the full word.
    static constexpr Bitset64 full(int k) {
        return {k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1};
    }

    constexpr bool test(int i) const { return (bits >> i) & 1; }
    constexpr void set(int i) { bits |= std::uint64_t{1} << i; }
    constexpr void reset(int i) { bits &= ~(std::uint64_t{1} << i); }

    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(Bitset64 other) const { return (other.bits & ~bits) == 0; }

    /// Smallest element, or -1 when empty.
    constexpr int lowest() const { return bits == 0 ? -1 : std::countr_zero(bits); }

    friend constexpr Bitset64 operator&(Bitset64 a, Bitset64 b) { return {a.bits & b.bits}; }
    friend constexpr Bitset64 operator|(Bitset64 a, Bitset64 b) { return {a.bits | b.bits}; }
    friend constexpr Bitset64 operator-(Bitset64 a, Bitset64 b) { return {a.bits & ~b.bits}; }
    friend constexpr bool operator==(Bitset64 a, Bitset64 b) { return a.bits == b.bits; }
};

using VertexSet = Bitset64;
using EdgeSet = Bitset64;

/// Calls fn(i) for every set bit of w, in increasing order.
template <typename Fn>
inline void for_each_bit(std::uint64_t w, Fn&& fn) {
    while (w) {
        fn(std::countr_zero(w));
        w &= w - 1;
    }
}

}  // namespace domgame
