#pragma once

#include <cstdint>
#include <limits>

namespace rx3::internal {

// Binomial coefficient, saturating at UINT64_MAX instead of overflowing so
// budget comparisons on huge enumeration spaces stay meaningful.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  constexpr unsigned __int128 kCap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact: prefix products of C are integral
    if (acc > kCap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace rx3::internal
