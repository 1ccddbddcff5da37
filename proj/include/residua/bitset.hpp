#pragma once

#include <bit>
#include <cstdint>

namespace residua {

// Subsets of the carrier are single machine words; carrier size is capped at 64.
using Mask = std::uint64_t;

constexpr int kMaxCarrier = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has(Mask m, int i) { return (m >> i) & Mask{1}; }

constexpr bool subseteq(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int count(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace residua
