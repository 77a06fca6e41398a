#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace diamond {

/// Hard limit on relay count for mask-based enumeration paths.
inline constexpr std::size_t kMaxMaskRelays = 20;

/// Listen/transmit configuration of the relays: bit i set means relay i
/// transmits, bit i clear means relay i listens. Only the low n bits of a
/// valid mask may be set.
struct StateMask {
    std::uint32_t bits = 0;

    constexpr bool transmits(std::size_t i) const { return (bits >> i) & 1u; }
    constexpr bool listens(std::size_t i) const { return !transmits(i); }

    static constexpr StateMask all_listen() { return StateMask{0}; }
    static constexpr StateMask all_transmit(std::size_t n) {
        return StateMask{static_cast<std::uint32_t>((1u << n) - 1u)};
    }

    friend constexpr bool operator==(StateMask a, StateMask b) { return a.bits == b.bits; }
    friend constexpr bool operator<(StateMask a, StateMask b) { return a.bits < b.bits; }
};

/// Relay subset on the destination side of a cut (bit i set means relay i is
/// in the cut set). Also reused as a plain relay-subset type, e.g. for
/// keep-sets and partitions.
struct CutMask {
    std::uint32_t bits = 0;

    constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool empty() const { return bits == 0; }

    static constexpr CutMask full(std::size_t n) {
        return CutMask{static_cast<std::uint32_t>((1u << n) - 1u)};
    }
    static constexpr CutMask single(std::size_t i) {
        return CutMask{static_cast<std::uint32_t>(1u << i)};
    }
    constexpr CutMask complement(std::size_t n) const {
        return CutMask{static_cast<std::uint32_t>(~bits & ((1u << n) - 1u))};
    }

    friend constexpr bool operator==(CutMask a, CutMask b) { return a.bits == b.bits; }
    friend constexpr bool operator<(CutMask a, CutMask b) { return a.bits < b.bits; }
};

constexpr bool fits_mask(std::uint32_t bits, std::size_t n) {
    return n >= 32 || (bits >> n) == 0;
}

}  // namespace diamond
