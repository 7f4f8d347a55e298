#include "rx3/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "internal_util.hpp"
#include "rx3/verifier.hpp"

namespace rx3 {

namespace {

using internal::binomial;

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();
constexpr int kMaxCanonicalK = 8;

// Sequences are nondecreasing (multisets) or strictly increasing (distinct
// sets) index lists over a pool of K = k*k codes, visited in lexicographic
// order.  Pool index i encodes ColorCode{i / k + 1, i % k + 1}.

ColorCode code_of(int k, int idx) { return {idx / k + 1, idx % k + 1}; }

// Number of valid suffixes of length `remaining` whose first value is
// >= start (nondecreasing) / > start - 1 ... i.e. values drawn from
// [start, K); strictly increasing sequences need distinct values.
std::uint64_t completions(int K, int start, int remaining, bool distinct) {
  if (remaining == 0) return 1;
  if (start >= K) return 0;
  const std::uint64_t avail = static_cast<std::uint64_t>(K - start);
  const std::uint64_t r = static_cast<std::uint64_t>(remaining);
  return distinct ? binomial(avail, r) : binomial(avail + r - 1, r);
}

std::uint64_t level_size(int K, int t, bool distinct) {
  return completions(K, 0, t, distinct);
}

// Color-relabeling images of pool indices, one table per non-identity
// permutation of 1..k.
std::vector<std::vector<std::uint8_t>> build_perm_tables(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::uint8_t>> tables;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint8_t> map(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k * k; ++i) {
      const ColorCode c = code_of(k, i);
      map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
          (perm[static_cast<std::size_t>(c.a1 - 1)] - 1) * k +
          (perm[static_cast<std::size_t>(c.a2 - 1)] - 1));
    }
    tables.push_back(std::move(map));
  }
  return tables;
}

// Is the sorted index sequence the lexicographically least member of its
// relabeling orbit?  Sorted sequences compare lexicographically via value
// counts: at the first value where the counts differ, the sequence holding
// more copies of it is the smaller one.
bool indices_canonical(std::span<const int> idx, int K,
                       const std::vector<std::vector<std::uint8_t>>& tables) {
  std::array<std::uint8_t, 64> orig{};
  for (int v : idx) ++orig[static_cast<std::size_t>(v)];
  for (const auto& map : tables) {
    std::array<std::uint8_t, 64> img{};
    for (int v : idx) ++img[map[static_cast<std::size_t>(v)]];
    for (int v = 0; v < K; ++v) {
      if (img[static_cast<std::size_t>(v)] == orig[static_cast<std::size_t>(v)]) continue;
      if (img[static_cast<std::size_t>(v)] > orig[static_cast<std::size_t>(v)]) return false;
      break;  // image is lexicographically larger; this permutation is fine
    }
  }
  return true;
}

// ------------------------------------------------------------------
// Enumeration engine.  One code path for counting scans (visit everything)
// and first-hit scans (stop at the first predicate hit).  Parallel runs
// partition the space into blocks fixed by the first two sequence values and
// report the same logical numbers as a sequential scan: the hit position is
// the 1-based rank of the hit in lexicographic order, so candidate counts
// are scheduling-independent.
// ------------------------------------------------------------------

struct EngineResult {
  bool hit = false;
  std::uint64_t hit_pos = 0;     // 1-based lexicographic rank of the hit
  std::uint64_t true_count = 0;  // counting scans: predicate-true candidates
  std::uint64_t candidates = 0;  // logical candidates examined
};

using Predicate = std::function<bool(std::span<const int>)>;
using PredicateFactory = std::function<Predicate()>;

class ProgressMeter {
 public:
  ProgressMeter(const std::function<void(std::uint64_t)>& sink) : sink_(sink) {}
  void bump(std::uint64_t n) {
    if (!sink_) return;
    const std::uint64_t before = total_.fetch_add(n, std::memory_order_relaxed);
    const std::uint64_t after = before + n;
    if (after / kStride > before / kStride) {
      std::lock_guard<std::mutex> lock(mu_);
      sink_((after / kStride) * kStride);
    }
  }

 private:
  static constexpr std::uint64_t kStride = 1'000'000;
  const std::function<void(std::uint64_t)>& sink_;
  std::atomic<std::uint64_t> total_{0};
  std::mutex mu_;
};

// Enumerates completions of seq[fixed..t-1] (earlier entries preset), calling
// pred on each candidate.  Returns the number visited; sets *hit_at to the
// 1-based position within this call of the first hit when stopping.
std::uint64_t run_suffix(std::vector<int>& seq, int fixed, int K, bool distinct,
                         bool stop_on_hit, const Predicate& pred,
                         std::uint64_t* hit_at, std::uint64_t* true_count,
                         ProgressMeter& meter,
                         const std::function<bool(std::uint64_t)>& should_abort) {
  const int t = static_cast<int>(seq.size());
  // Lowest completion of the suffix.
  for (int p = fixed; p < t; ++p) {
    seq[static_cast<std::size_t>(p)] =
        p == 0 ? 0 : seq[static_cast<std::size_t>(p - 1)] + (distinct ? 1 : 0);
    if (seq[static_cast<std::size_t>(p)] >= K) return 0;  // empty block
  }
  std::uint64_t visited = 0;
  while (true) {
    if (should_abort && (visited & 1023) == 0 && should_abort(visited)) return visited;
    ++visited;
    meter.bump(1);
    if (pred(seq)) {
      if (true_count) ++*true_count;
      if (stop_on_hit) {
        *hit_at = visited;
        return visited;
      }
    }
    // Successor within the suffix.
    int p = t - 1;
    while (p >= fixed) {
      const int cap = K - 1 - (distinct ? (t - 1 - p) : 0);
      if (seq[static_cast<std::size_t>(p)] < cap) break;
      --p;
    }
    if (p < fixed) return visited;
    ++seq[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < t; ++q)
      seq[static_cast<std::size_t>(q)] =
          seq[static_cast<std::size_t>(q - 1)] + (distinct ? 1 : 0);
  }
}

EngineResult scan_level(int K, int t, bool distinct, bool stop_on_hit, int jobs,
                        const PredicateFactory& make_pred,
                        const std::function<void(std::uint64_t)>& progress) {
  const std::uint64_t total = level_size(K, t, distinct);
  ProgressMeter meter(progress);
  EngineResult result;
  if (jobs <= 1 || t < 2 || total < 4096) {
    Predicate pred = make_pred();
    std::vector<int> seq(static_cast<std::size_t>(t));
    std::uint64_t hit_at = 0, trues = 0;
    const std::uint64_t visited =
        run_suffix(seq, 0, K, distinct, stop_on_hit, pred, &hit_at, &trues, meter, nullptr);
    result.true_count = trues;
    if (stop_on_hit && hit_at != 0) {
      result.hit = true;
      result.hit_pos = hit_at;
      result.candidates = hit_at;
    } else {
      result.candidates = visited;
    }
    return result;
  }

  // Blocks fix the first two values; block ranks partition 1..total.
  struct Block {
    int c0, c1;
    std::uint64_t start;  // candidates strictly before this block
  };
  std::vector<Block> blocks;
  std::uint64_t acc = 0;
  for (int c0 = 0; c0 < K; ++c0)
    for (int c1 = c0 + (distinct ? 1 : 0); c1 < K; ++c1) {
      blocks.push_back({c0, c1, acc});
      acc += completions(K, c1 + (distinct ? 1 : 0), t - 2, distinct);
    }

  std::atomic<std::size_t> next_block{0};
  std::atomic<std::uint64_t> best_hit{kNoHit};  // 1-based global rank
  std::atomic<std::uint64_t> trues_total{0};
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), blocks.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      Predicate pred = make_pred();
      std::vector<int> seq(static_cast<std::size_t>(t));
      std::uint64_t local_trues = 0;
      while (true) {
        const std::size_t b = next_block.fetch_add(1, std::memory_order_relaxed);
        if (b >= blocks.size()) break;
        const Block& blk = blocks[b];
        if (stop_on_hit && blk.start >= best_hit.load(std::memory_order_relaxed)) continue;
        seq[0] = blk.c0;
        seq[1] = blk.c1;
        std::uint64_t hit_at = 0;
        auto abort_fn = [&](std::uint64_t done) {
          return stop_on_hit &&
                 blk.start + done >= best_hit.load(std::memory_order_relaxed);
        };
        run_suffix(seq, 2, K, distinct, stop_on_hit, pred, &hit_at, &local_trues, meter,
                   abort_fn);
        if (stop_on_hit && hit_at != 0) {
          const std::uint64_t rank = blk.start + hit_at;
          std::uint64_t cur = best_hit.load(std::memory_order_relaxed);
          while (rank < cur &&
                 !best_hit.compare_exchange_weak(cur, rank, std::memory_order_relaxed)) {
          }
        }
      }
      trues_total.fetch_add(local_trues, std::memory_order_relaxed);
    });
  }
  for (auto& th : pool) th.join();

  result.true_count = trues_total.load();
  const std::uint64_t best = best_hit.load();
  if (stop_on_hit && best != kNoHit) {
    result.hit = true;
    result.hit_pos = best;
    result.candidates = best;
  } else {
    result.candidates = total;
  }
  return result;
}

// Predicate: acceptable, and (when canonical rejection applies) the
// lexicographically least member of its relabeling orbit.  Acceptability is
// evaluated first: it fails fast on most candidates, while confirming
// canonicity always costs a walk over every permutation table.  The first
// acceptable candidate in lexicographic order is automatically canonical
// (its canonical form is acceptable too and cannot appear later), so
// first-hit scans see identical hits in either evaluation order.
PredicateFactory acceptable_canonical_pred(int k, int t,
                                           const std::vector<std::vector<std::uint8_t>>* tables) {
  const int K = k * k;
  return [k, t, K, tables]() -> Predicate {
    auto codes = std::make_shared<std::vector<ColorCode>>(static_cast<std::size_t>(t));
    return [k, K, tables, codes](std::span<const int> idx) -> bool {
      for (std::size_t i = 0; i < idx.size(); ++i) codes->at(i) = code_of(k, idx[i]);
      if (!codes_form_3rainbow(*codes)) return false;
      return tables == nullptr || indices_canonical(idx, K, *tables);
    };
  };
}

void check_budget(std::uint64_t estimate, const SearchOptions& options,
                  const char* what) {
  if (estimate > options.budget)
    throw BudgetError(estimate, options.budget, what);
}

void require_canonical_palette(int k) {
  if (k > kMaxCanonicalK)
    throw InputError("palette size exceeds the canonicalization guard (k <= 8)");
}

}  // namespace

CodeMultiset::CodeMultiset(int k, std::vector<ColorCode> codes)
    : k_(k), codes_(std::move(codes)) {
  if (k_ < 1) throw InputError("palette size k must be >= 1");
  if (codes_.empty()) throw InputError("multiset must contain at least one code");
  for (const ColorCode& c : codes_)
    if (c.a1 < 1 || c.a1 > k_ || c.a2 < 1 || c.a2 > k_)
      throw InputError("code color out of range 1..k");
  std::sort(codes_.begin(), codes_.end());
}

CodeMultiset canonical_form(const CodeMultiset& m) {
  require_canonical_palette(m.k());
  std::vector<int> perm(static_cast<std::size_t>(m.k()));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<ColorCode> best(m.codes().begin(), m.codes().end());
  std::vector<ColorCode> image(best.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::transform(m.codes().begin(), m.codes().end(), image.begin(),
                   [&](const ColorCode& c) {
                     return ColorCode{perm[static_cast<std::size_t>(c.a1 - 1)],
                                      perm[static_cast<std::size_t>(c.a2 - 1)]};
                   });
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return CodeMultiset(m.k(), std::move(best));
}

bool is_canonical(const CodeMultiset& m) {
  const CodeMultiset canon = canonical_form(m);
  return std::equal(m.codes().begin(), m.codes().end(), canon.codes().begin(),
                    canon.codes().end());
}

bool is_acceptable(const CodeMultiset& m) { return codes_form_3rainbow(m.codes()); }

CountResult count_acceptable(int t, int k, const SearchOptions& options) {
  if (t < 1) throw InputError("t must be >= 1");
  if (k < 1) throw InputError("k must be >= 1");
  require_canonical_palette(k);
  const std::uint64_t raw = level_size(k * k, t, false);
  check_budget(raw, options, "count_acceptable enumeration exceeds budget");
  const auto tables = build_perm_tables(k);
  EngineResult r = scan_level(k * k, t, false, false, options.jobs,
                              acceptable_canonical_pred(k, t, &tables), options.progress);
  return {r.true_count, r.candidates};
}

OracleResult brute_force_rx3(int t, int k_max, const SearchOptions& options) {
  if (t < 1) throw InputError("t must be >= 1");
  if (k_max < 1) throw InputError("k_max must be >= 1");
  require_canonical_palette(k_max);
  std::uint64_t estimate = 0;
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t lvl = level_size(k * k, t, false);
    estimate = (estimate > std::numeric_limits<std::uint64_t>::max() - lvl)
                   ? std::numeric_limits<std::uint64_t>::max()
                   : estimate + lvl;
  }
  check_budget(estimate, options, "brute_force_rx3 enumeration exceeds budget");

  OracleResult out;
  for (int k = 1; k <= k_max; ++k) {
    const auto tables = build_perm_tables(k);
    EngineResult r = scan_level(k * k, t, false, true, options.jobs,
                                acceptable_canonical_pred(k, t, &tables), options.progress);
    out.candidates_examined += r.candidates;
    if (r.hit) {
      out.k = k;
      return out;
    }
  }
  return out;
}

namespace {

CountResult beta_scan(int b, const SearchOptions& options) {
  if (b < 1 || b > 3) throw InputError("beta supports b in 1..3 only");
  const auto tables = build_perm_tables(b);
  CountResult out;
  for (int t = 1;; ++t) {
    const std::uint64_t lvl = level_size(b * b, t, false);
    check_budget(out.candidates_examined + lvl, options,
                 "beta enumeration exceeds budget");
    EngineResult r = scan_level(b * b, t, false, true, options.jobs,
                                acceptable_canonical_pred(b, t, &tables), options.progress);
    out.candidates_examined += r.candidates;
    if (!r.hit) {
      out.value = static_cast<std::uint64_t>(t - 1);
      return out;
    }
  }
}

}  // namespace

CountResult beta(int b, const SearchOptions& options) { return beta_scan(b, options); }

CountResult beta_limited(int b, int k_ambient, const SearchOptions& options) {
  if (b < 1 || b > 3) throw InputError("beta supports b in 1..3 only");
  if (k_ambient < b) throw InputError("ambient palette must contain the b colors");
  // The verdict of a coloring depends only on the edges present, never on
  // the declared palette, so the ambient size cannot change the scan.
  return beta_scan(b, options);
}

CountResult max_acceptable(int k, bool distinct_only, int t_cap,
                           const SearchOptions& options) {
  if (k < 1) throw InputError("k must be >= 1");
  require_canonical_palette(k);
  if (t_cap < 0) throw InputError("t_cap must be >= 0");
  const int K = k * k;
  int cap;
  if (distinct_only) {
    cap = (t_cap == 0) ? K : std::min(t_cap, K);
  } else {
    if (t_cap == 0)
      throw InputError("multiset search needs an explicit t_cap (levels are unbounded)");
    cap = t_cap;
  }

  std::uint64_t estimate = 0;
  for (int t = 1; t <= cap; ++t) {
    const std::uint64_t lvl = level_size(K, t, distinct_only);
    estimate = (estimate > std::numeric_limits<std::uint64_t>::max() - lvl)
                   ? std::numeric_limits<std::uint64_t>::max()
                   : estimate + lvl;
  }
  check_budget(estimate, options, "max_acceptable enumeration exceeds budget");

  const auto tables = build_perm_tables(k);
  CountResult out;
  for (int t = cap; t >= 1; --t) {
    EngineResult r = scan_level(K, t, distinct_only, true, options.jobs,
                                acceptable_canonical_pred(k, t, &tables), options.progress);
    out.candidates_examined += r.candidates;
    if (r.hit) {
      out.value = static_cast<std::uint64_t>(t);
      return out;
    }
  }
  out.value = 0;
  return out;
}

bool is_isolated(std::span<const RookPlacement> rooks) {
  const int n = static_cast<int>(rooks.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rooks[i] == rooks[j]) throw InputError("duplicate rook square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const bool rows_distinct = rooks[i].row != rooks[j].row &&
                                   rooks[i].row != rooks[l].row &&
                                   rooks[j].row != rooks[l].row;
        const bool cols_distinct = rooks[i].col != rooks[j].col &&
                                   rooks[i].col != rooks[l].col &&
                                   rooks[j].col != rooks[l].col;
        if (!rows_distinct && !cols_distinct) return false;
      }
  return true;
}

RookResult max_isolated_rooks(int n) {
  if (n < 1) throw InputError("board size must be >= 1");
  if (n > 5) throw InputError("board size above the exhaustive guard (n <= 5)");
  std::vector<RookPlacement> squares;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) squares.push_back({r, c});

  RookResult best;
  std::vector<RookPlacement> cur;
  std::uint64_t attempts = 0;

  // Adding a rook keeps the placement isolated iff every pair it joins spans
  // three rows or three columns with it; isolation never resurrects after a
  // removal, so prefix pruning is sound.
  auto extends = [&](const RookPlacement& rk) {
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        const bool rows_distinct = cur[i].row != cur[j].row && cur[i].row != rk.row &&
                                   cur[j].row != rk.row;
        const bool cols_distinct = cur[i].col != cur[j].col && cur[i].col != rk.col &&
                                   cur[j].col != rk.col;
        if (!rows_distinct && !cols_distinct) return false;
      }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) > best.count) {
      best.count = static_cast<int>(cur.size());
      best.placement = cur;
    }
    for (std::size_t s = start; s < squares.size(); ++s) {
      ++attempts;
      if (extends(squares[s])) {
        cur.push_back(squares[s]);
        self(self, s + 1);
        cur.pop_back();
      }
    }
  };
  dfs(dfs, 0);
  best.candidates_examined = attempts;
  return best;
}

}  // namespace rx3
