#pragma once

#include <array>
#include <vector>

#include "rx3/core.hpp"

// Closed-form values of the 3-rainbow index of K_{2,t} and explicit optimal
// colorings realizing them.
namespace rx3 {

// rx3(K_{2,t}) for t >= 1:
//   t = 1, 2        -> 2
//   t = 3, 4        -> 3
//   t = 5..8        -> 4
//   t = 9..20       -> 5
//   t >= 21         -> the unique k >= 6 with (k-1)(k-2) + 1 <= t <= k(k-1)
int rx3_value(long long t);

// The t-range on which rx3(K_{2,t}) equals k.
struct ValueInterval {
  int k = 0;
  long long t_min = 0;
  long long t_max = 0;
  friend bool operator==(const ValueInterval&, const ValueInterval&) = default;
};

// Inverse of rx3_value: requires k >= 2.
ValueInterval rx3_interval(int k);

// An explicit 3-rainbow coloring of K_{2,t} using exactly rx3_value(t)
// colors.  Deterministic: the same t always yields the same coloring.
BipartiteColoring construct_coloring(long long t);

// Building blocks of the construction, exposed for tests and tooling.
// The 8 codes over colors 1..4 used for t = 5..8 (prefixes serve t = 5..7).
std::array<ColorCode, 8> four_color_block();
// The 10 codes over colors 1..5 used for t = 9, 10: every unordered color
// pair appears exactly once across the codes.
std::array<ColorCode, 10> five_color_block();
// The 10 remaining off-diagonal codes over colors 1..5, appended in code
// order for t = 11..20.
std::array<ColorCode, 10> five_color_remainder();

}  // namespace rx3
