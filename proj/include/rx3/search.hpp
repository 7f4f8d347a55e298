#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rx3/core.hpp"

// Exhaustive counting and extremal searches over code multisets.
//
// A multiset of color codes determines a coloring of K_{2,t} up to the order
// of W-vertices, and whether it is 3-rainbow ("acceptable") is further
// invariant under relabeling the colors.  Searches therefore enumerate sorted
// code sequences and, where multisets-up-to-relabeling are wanted, keep only
// the canonical representative of each relabeling class.
namespace rx3 {

// A multiset of codes over an ambient palette 1..k, stored sorted.
class CodeMultiset {
 public:
  CodeMultiset(int k, std::vector<ColorCode> codes);  // sorts; validates range
  int k() const { return k_; }
  int size() const { return static_cast<int>(codes_.size()); }
  std::span<const ColorCode> codes() const { return codes_; }
  friend bool operator==(const CodeMultiset&, const CodeMultiset&) = default;

 private:
  int k_;
  std::vector<ColorCode> codes_;
};

// Lexicographically least multiset obtainable from `m` by bijectively
// relabeling colors 1..k.  Exact over all k! relabelings; k <= 8 enforced.
CodeMultiset canonical_form(const CodeMultiset& m);

// True iff m == canonical_form(m).
bool is_canonical(const CodeMultiset& m);

// True iff the multiset, read as a coloring of K_{2,size}, is 3-rainbow.
bool is_acceptable(const CodeMultiset& m);

struct SearchOptions {
  // Refuse to start when the raw enumeration count exceeds this.
  std::uint64_t budget = 100'000'000;
  int jobs = 1;
  // Optional progress sink (called sparsely with candidates examined so far).
  std::function<void(std::uint64_t)> progress;
};

// A counted quantity plus how many raw candidates the search examined.
struct CountResult {
  std::uint64_t value = 0;
  std::uint64_t candidates_examined = 0;
};

struct OracleResult {
  std::optional<int> k;  // empty when no k <= k_max works
  std::uint64_t candidates_examined = 0;
};

// Number of acceptable t-multisets over colors 1..k, counted up to color
// relabeling (canonical representatives only).
CountResult count_acceptable(int t, int k, const SearchOptions& options = {});

// Smallest k <= k_max admitting an acceptable t-multiset over 1..k, found by
// scanning k = 1, 2, ... and testing existence exhaustively.
OracleResult brute_force_rx3(int t, int k_max, const SearchOptions& options = {});

// beta(b): the largest t for which some acceptable t-multiset of codes over
// colors 1..b exists (0 when even t = 1 has none).  Scans t upward and
// returns t - 1 at the first t whose level is empty.  Terminates
// unconditionally: once t > 2*b*b some code repeats three times in every
// multiset, which kills acceptability, so every level past that is empty.
// Supported for b in 1..3, the exhaustive regime.
CountResult beta(int b, const SearchOptions& options = {});

// Same scan with the ambient palette widened to k_ambient >= b (codes still
// draw colors from 1..b).  Exposed to document that the verdict -- and hence
// beta -- does not depend on the ambient palette.
CountResult beta_limited(int b, int k_ambient, const SearchOptions& options = {});

// Largest t <= t_cap admitting an acceptable t-multiset over 1..k; with
// distinct_only, codes must be pairwise distinct (so t <= k*k).  The scan
// walks t downward from the cap and stops at the first level with a hit --
// no assumption that nonempty levels are contiguous.  A positive cap is
// required in the multiset case; t_cap = 0 is permitted only with
// distinct_only and means the natural maximum k*k.
CountResult max_acceptable(int k, bool distinct_only, int t_cap,
                           const SearchOptions& options = {});

// --- Rook placements ----------------------------------------------------
//
// A placement of rooks is "isolated" when every three rooks occupy pairwise
// distinct rows or pairwise distinct columns -- equivalently, no three rooks
// fit inside two rows and two columns.  Placing a rook at (a, b) for each
// code (a, b) turns a code set over 3 colors into a 3x3 placement, and the
// code set is acceptable exactly when the placement is isolated; that bridge
// is specific to 3 colors and is asserted in tests.

struct RookPlacement {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
  friend auto operator<=>(const RookPlacement&, const RookPlacement&) = default;
};

// True when every 3-subset spans three rows or three columns.  Placements
// of at most two rooks are vacuously isolated.  Duplicate squares are
// rejected with InputError.
bool is_isolated(std::span<const RookPlacement> rooks);

struct RookResult {
  int count = 0;
  std::vector<RookPlacement> placement;  // one witness of maximum size
  std::uint64_t candidates_examined = 0;
};

// Exhaustive maximum isolated placement; n <= 5 enforced (the search is a
// plain DFS over squares in row-major order, sound to prune on prefixes
// because isolation is closed under removing rooks).
RookResult max_isolated_rooks(int n);

}  // namespace rx3
