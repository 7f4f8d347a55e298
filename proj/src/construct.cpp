#include "rx3/construct.hpp"

#include <algorithm>
#include <cmath>

namespace rx3 {

namespace {

// Largest t accepted by rx3_value / construct_coloring; beyond this the
// answer k no longer fits comfortably in int arithmetic.
constexpr long long kMaxT = 4'000'000'000'000'000'000LL;

// Codes over colors 1..4 whose size-5..8 prefixes are all 3-rainbow: the
// lexicographically least such extension chain (which coincides with the
// lex-least acceptable 8-multiset).
constexpr std::array<ColorCode, 8> kFourColorBlock = {{
    {1, 2}, {1, 3}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 2}, {4, 3},
}};

// Ten codes over colors 1..5 covering each unordered color pair exactly
// once; its 9-prefix is also 3-rainbow, so it serves t = 9 and 10.
constexpr std::array<ColorCode, 10> kFiveColorBlock = {{
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 1},
    {4, 2}, {5, 3}, {1, 4}, {2, 5}, {5, 1},
}};

// The ten off-diagonal codes over 1..5 not in kFiveColorBlock, in code
// order; appending any prefix keeps the coloring 3-rainbow (t = 11..20).
constexpr std::array<ColorCode, 10> kFiveColorRemainder = {{
    {1, 3}, {1, 5}, {2, 1}, {2, 4}, {3, 2},
    {3, 5}, {4, 1}, {4, 3}, {5, 2}, {5, 4},
}};

}  // namespace

int rx3_value(long long t) {
  if (t < 1) throw InputError("t must be >= 1");
  if (t > kMaxT) throw InputError("t too large");
  if (t <= 2) return 2;
  if (t <= 4) return 3;
  if (t <= 8) return 4;
  if (t <= 20) return 5;
  // Smallest k with k(k-1) >= t; seed near the root of k^2 - k = t and walk
  // up, so floating-point error cannot skew the answer.
  long long k = std::max(6LL, static_cast<long long>(
                                  (1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(t))) / 2.0) -
                                  2);
  while (k * (k - 1) < t) ++k;
  return static_cast<int>(k);
}

ValueInterval rx3_interval(int k) {
  if (k < 2) throw InputError("k must be >= 2");
  switch (k) {
    case 2: return {2, 1, 2};
    case 3: return {3, 3, 4};
    case 4: return {4, 5, 8};
    case 5: return {5, 9, 20};
    default: {
      const long long kk = k;
      return {k, (kk - 1) * (kk - 2) + 1, kk * (kk - 1)};
    }
  }
}

BipartiteColoring construct_coloring(long long t) {
  if (t < 1) throw InputError("t must be >= 1");
  constexpr long long kMaxConstructT = 100'000'000;
  if (t > kMaxConstructT) throw InputError("construction too large to materialize");
  const int k = rx3_value(t);
  const int ti = static_cast<int>(t);

  std::vector<ColorCode> codes;
  codes.reserve(static_cast<std::size_t>(ti));
  if (t <= 4) {
    const std::array<ColorCode, 4> seed = {{{1, 2}, {2, 1}, {1, 3}, {3, 1}}};
    codes.assign(seed.begin(), seed.begin() + ti);
  } else if (t <= 8) {
    codes.assign(kFourColorBlock.begin(), kFourColorBlock.begin() + ti);
  } else if (t <= 10) {
    codes.assign(kFiveColorBlock.begin(), kFiveColorBlock.begin() + ti);
  } else if (t <= 20) {
    codes.assign(kFiveColorBlock.begin(), kFiveColorBlock.end());
    codes.insert(codes.end(), kFiveColorRemainder.begin(),
                 kFiveColorRemainder.begin() + (ti - 10));
  } else {
    // Distinct off-diagonal codes: the full upper triangle (a < b) in code
    // order, then lower-triangle codes (a > b) in code order until t codes.
    for (int a = 1; a <= k && static_cast<int>(codes.size()) < ti; ++a)
      for (int b = a + 1; b <= k && static_cast<int>(codes.size()) < ti; ++b)
        codes.push_back({a, b});
    for (int a = 2; a <= k && static_cast<int>(codes.size()) < ti; ++a)
      for (int b = 1; b < a && static_cast<int>(codes.size()) < ti; ++b)
        codes.push_back({a, b});
  }
  return BipartiteColoring(k, std::move(codes));
}

std::array<ColorCode, 8> four_color_block() { return kFourColorBlock; }
std::array<ColorCode, 10> five_color_block() { return kFiveColorBlock; }
std::array<ColorCode, 10> five_color_remainder() { return kFiveColorRemainder; }

}  // namespace rx3
