#include "rx3/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "internal_util.hpp"

namespace rx3 {

namespace {

// ------------------------------------------------------------------
// Decision trio: does S have a rainbow tree?  Pure boolean, no allocation.
// Indices are 0-based into `codes`; side 0 means u1, side 1 means u2.
//
// These enumerate a complete catalog of minimal S-tree shapes.  In any
// minimal S-tree of K_{2,t}, a W-vertex outside S would need degree >= 2 to
// be non-prunable, and W-vertices have maximum degree 2, so it bridges both
// hubs -- and two such bridges would close a cycle.  Hence at most one extra
// W-vertex, of degree exactly 2, which yields the fixed shape lists below.
// ------------------------------------------------------------------

int coord(const ColorCode& c, int side) { return side == 0 ? c.a1 : c.a2; }

bool decide_w3(std::span<const ColorCode> codes, int i, int j, int l) {
  const ColorCode m0 = codes[i], m1 = codes[j], m2 = codes[l];
  // 3 edges: star at one hub needs that column's three colors distinct.
  for (int side = 0; side < 2; ++side) {
    int c0 = coord(m0, side), c1 = coord(m1, side), c2 = coord(m2, side);
    if (c0 != c1 && c0 != c2 && c1 != c2) return true;
  }
  // 4 edges: one member bridges both hubs, the other two hang off one hub
  // each; all four colors distinct.
  const ColorCode mem[3] = {m0, m1, m2};
  for (int b = 0; b < 3; ++b) {
    const ColorCode& x = mem[b];
    if (x.a1 == x.a2) continue;
    const ColorCode& y = mem[b == 0 ? 1 : 0];
    const ColorCode& z = mem[b == 2 ? 1 : 2];
    for (int s0 = 0; s0 < 2; ++s0)
      for (int s1 = 0; s1 < 2; ++s1) {
        int c0 = coord(y, s0), c1 = coord(z, s1);
        if (c0 != c1 && c0 != x.a1 && c0 != x.a2 && c1 != x.a1 && c1 != x.a2)
          return true;
      }
  }
  // 5 edges: an outside W-vertex bridges the hubs, each member hangs off one
  // hub; the three hanging colors must be distinct and avoid the bridge pair.
  for (int combo = 0; combo < 8; ++combo) {
    int a0 = coord(m0, combo & 1);
    int a1 = coord(m1, (combo >> 1) & 1);
    int a2 = coord(m2, (combo >> 2) & 1);
    if (a0 == a1 || a0 == a2 || a1 == a2) continue;
    for (int w = 0; w < static_cast<int>(codes.size()); ++w) {
      if (w == i || w == j || w == l) continue;
      const ColorCode& cd = codes[w];
      if (cd.a1 == cd.a2) continue;
      if (cd.a1 != a0 && cd.a1 != a1 && cd.a1 != a2 &&
          cd.a2 != a0 && cd.a2 != a1 && cd.a2 != a2)
        return true;
    }
  }
  return false;
}

bool decide_w2(std::span<const ColorCode> codes, int i, int j, int side) {
  const ColorCode a = codes[i], b = codes[j];
  const int o = 1 - side;
  // 2 edges: star at the in-S hub.
  if (coord(a, side) != coord(b, side)) return true;
  // 3 edges: path through the far hub with one member as the connector.
  if (coord(a, side) != coord(a, o) && coord(a, o) != coord(b, o) &&
      coord(a, side) != coord(b, o))
    return true;
  if (coord(b, side) != coord(b, o) && coord(b, o) != coord(a, o) &&
      coord(b, side) != coord(a, o))
    return true;
  // 4 edges: an outside W-vertex bridges the hubs; members attach far-far or
  // near/far split.
  const int as = coord(a, side), ao = coord(a, o);
  const int bs = coord(b, side), bo = coord(b, o);
  for (int w = 0; w < static_cast<int>(codes.size()); ++w) {
    if (w == i || w == j) continue;
    const int x = coord(codes[w], side), y = coord(codes[w], o);
    if (x != y && x != ao && x != bo && y != ao && y != bo && ao != bo) return true;
    if (as != x && as != y && as != bo && x != y && x != bo && y != bo) return true;
    if (bs != x && bs != y && bs != ao && x != y && x != ao && y != ao) return true;
  }
  return false;
}

bool decide_w1(std::span<const ColorCode> codes, int i) {
  const ColorCode a = codes[i];
  // 2 edges: the member's own path between the hubs.
  if (a.a1 != a.a2) return true;
  // 3 edges: member hangs off one hub, an outside W-vertex bridges.
  for (int w = 0; w < static_cast<int>(codes.size()); ++w) {
    if (w == i) continue;
    const ColorCode& cd = codes[w];
    if (cd.a1 == cd.a2) continue;
    if ((a.a1 != cd.a1 && a.a1 != cd.a2) || (a.a2 != cd.a1 && a.a2 != cd.a2))
      return true;
  }
  return false;
}

// ------------------------------------------------------------------
// Witness trio: same shape catalogs walked in minimal-edge-count order with
// a fixed tie-break (shape id, then extra-vertex index), so witnesses are
// minimal and fully deterministic.
// ------------------------------------------------------------------

TreeEdge edge(const BipartiteColoring& col, int w0, int side) {
  return TreeEdge{Vertex::w(w0 + 1), Vertex::u(side + 1),
                  coord(col.code(w0 + 1), side)};
}

std::optional<RainbowTreeWitness> witness_w3(const BipartiteColoring& col,
                                             int i, int j, int l) {
  auto codes = col.codes();
  const ColorCode m0 = codes[i], m1 = codes[j], m2 = codes[l];
  for (int side = 0; side < 2; ++side) {
    int c0 = coord(m0, side), c1 = coord(m1, side), c2 = coord(m2, side);
    if (c0 != c1 && c0 != c2 && c1 != c2)
      return RainbowTreeWitness{{edge(col, i, side), edge(col, j, side), edge(col, l, side)}};
  }
  const int mi[3] = {i, j, l};
  const ColorCode mem[3] = {m0, m1, m2};
  for (int b = 0; b < 3; ++b) {
    const ColorCode& x = mem[b];
    if (x.a1 == x.a2) continue;
    const int yi = (b == 0) ? 1 : 0, zi = (b == 2) ? 1 : 2;
    for (int s0 = 0; s0 < 2; ++s0)
      for (int s1 = 0; s1 < 2; ++s1) {
        int c0 = coord(mem[yi], s0), c1 = coord(mem[zi], s1);
        if (c0 != c1 && c0 != x.a1 && c0 != x.a2 && c1 != x.a1 && c1 != x.a2)
          return RainbowTreeWitness{{edge(col, mi[b], 0), edge(col, mi[b], 1),
                                     edge(col, mi[yi], s0), edge(col, mi[zi], s1)}};
      }
  }
  for (int combo = 0; combo < 8; ++combo) {
    const int s0 = combo & 1, s1 = (combo >> 1) & 1, s2 = (combo >> 2) & 1;
    int a0 = coord(m0, s0), a1 = coord(m1, s1), a2 = coord(m2, s2);
    if (a0 == a1 || a0 == a2 || a1 == a2) continue;
    for (int w = 0; w < col.t(); ++w) {
      if (w == i || w == j || w == l) continue;
      const ColorCode& cd = codes[w];
      if (cd.a1 == cd.a2) continue;
      if (cd.a1 != a0 && cd.a1 != a1 && cd.a1 != a2 &&
          cd.a2 != a0 && cd.a2 != a1 && cd.a2 != a2)
        return RainbowTreeWitness{{edge(col, i, s0), edge(col, j, s1),
                                   edge(col, l, s2), edge(col, w, 0), edge(col, w, 1)}};
    }
  }
  return std::nullopt;
}

std::optional<RainbowTreeWitness> witness_w2(const BipartiteColoring& col,
                                             int i, int j, int side) {
  auto codes = col.codes();
  const ColorCode a = codes[i], b = codes[j];
  const int o = 1 - side;
  if (coord(a, side) != coord(b, side))
    return RainbowTreeWitness{{edge(col, i, side), edge(col, j, side)}};
  if (coord(a, side) != coord(a, o) && coord(a, o) != coord(b, o) &&
      coord(a, side) != coord(b, o))
    return RainbowTreeWitness{{edge(col, i, side), edge(col, i, o), edge(col, j, o)}};
  if (coord(b, side) != coord(b, o) && coord(b, o) != coord(a, o) &&
      coord(b, side) != coord(a, o))
    return RainbowTreeWitness{{edge(col, j, side), edge(col, j, o), edge(col, i, o)}};
  const int as = coord(a, side), ao = coord(a, o);
  const int bs = coord(b, side), bo = coord(b, o);
  // far-far, then each near/far split; outside vertex ascending within each.
  for (int w = 0; w < col.t(); ++w) {
    if (w == i || w == j) continue;
    const int x = coord(codes[w], side), y = coord(codes[w], o);
    if (x != y && x != ao && x != bo && y != ao && y != bo && ao != bo)
      return RainbowTreeWitness{{edge(col, i, o), edge(col, j, o),
                                 edge(col, w, side), edge(col, w, o)}};
  }
  for (int w = 0; w < col.t(); ++w) {
    if (w == i || w == j) continue;
    const int x = coord(codes[w], side), y = coord(codes[w], o);
    if (as != x && as != y && as != bo && x != y && x != bo && y != bo)
      return RainbowTreeWitness{{edge(col, i, side), edge(col, j, o),
                                 edge(col, w, side), edge(col, w, o)}};
  }
  for (int w = 0; w < col.t(); ++w) {
    if (w == i || w == j) continue;
    const int x = coord(codes[w], side), y = coord(codes[w], o);
    if (bs != x && bs != y && bs != ao && x != y && x != ao && y != ao)
      return RainbowTreeWitness{{edge(col, j, side), edge(col, i, o),
                                 edge(col, w, side), edge(col, w, o)}};
  }
  return std::nullopt;
}

std::optional<RainbowTreeWitness> witness_w1(const BipartiteColoring& col, int i) {
  auto codes = col.codes();
  const ColorCode a = codes[i];
  if (a.a1 != a.a2)
    return RainbowTreeWitness{{edge(col, i, 0), edge(col, i, 1)}};
  for (int side = 0; side < 2; ++side) {
    for (int w = 0; w < col.t(); ++w) {
      if (w == i) continue;
      const ColorCode& cd = codes[w];
      if (cd.a1 == cd.a2) continue;
      int hang = coord(a, side);
      if (hang != cd.a1 && hang != cd.a2)
        return RainbowTreeWitness{{edge(col, i, side), edge(col, w, 0), edge(col, w, 1)}};
    }
  }
  return std::nullopt;
}

void sort_edges(RainbowTreeWitness& w) {
  std::sort(w.edges.begin(), w.edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
    if (a.w.index() != b.w.index()) return a.w.index() < b.w.index();
    return a.u.index() < b.u.index();
  });
}

// Canonical triple enumeration: vertices numbered 0..t+1 (w1..wt, u1, u2),
// triples in lexicographic order of the sorted index triple.
struct TripleIndices {
  int a, b, c;
};

TripleIndices unrank_triple(int n, std::uint64_t idx) {
  using internal::binomial;
  int a = 0;
  while (binomial(static_cast<std::uint64_t>(n - a - 1), 2) <= idx) {
    idx -= binomial(static_cast<std::uint64_t>(n - a - 1), 2);
    ++a;
  }
  int b = a + 1;
  while (static_cast<std::uint64_t>(n - b - 1) <= idx) {
    idx -= static_cast<std::uint64_t>(n - b - 1);
    ++b;
  }
  return {a, b, static_cast<int>(b + 1 + idx)};
}

bool decide_indices(std::span<const ColorCode> codes, const TripleIndices& tr) {
  const int t = static_cast<int>(codes.size());
  const int n_w = (tr.a < t) + (tr.b < t) + (tr.c < t);
  if (n_w == 3) return decide_w3(codes, tr.a, tr.b, tr.c);
  if (n_w == 2) return decide_w2(codes, tr.a, tr.b, tr.c - t);
  return decide_w1(codes, tr.a);
}

Vertex vertex_of(int t, int idx) {
  return idx < t ? Vertex::w(idx + 1) : Vertex::u(idx - t + 1);
}

}  // namespace

FastCheck lemma22_fast_check(const BipartiteColoring& coloring, const VertexTriple& s) {
  auto codes = coloring.codes();
  const auto& m = s.members();
  switch (s.w_count()) {
    case 3: {
      const ColorCode c0 = codes[m[0].index() - 1];
      const ColorCode c1 = codes[m[1].index() - 1];
      const ColorCode c2 = codes[m[2].index() - 1];
      for (int side = 0; side < 2; ++side) {
        int a = coord(c0, side), b = coord(c1, side), c = coord(c2, side);
        if (a != b && a != c && b != c) return FastCheck::kTreeExists;
      }
      std::set<Color> distinct{c0.a1, c0.a2, c1.a1, c1.a2, c2.a1, c2.a2};
      return distinct.size() >= 4 ? FastCheck::kTreeExists : FastCheck::kUnknown;
    }
    case 2: {
      const ColorCode a = codes[m[0].index() - 1];
      const ColorCode b = codes[m[1].index() - 1];
      if (a.a1 != b.a1 && a.a2 != b.a2) return FastCheck::kTreeExists;
      std::set<Color> distinct{a.a1, a.a2, b.a1, b.a2};
      return distinct.size() >= 3 ? FastCheck::kTreeExists : FastCheck::kUnknown;
    }
    default: {
      const ColorCode a = codes[m[0].index() - 1];
      return a.a1 != a.a2 ? FastCheck::kTreeExists : FastCheck::kUnknown;
    }
  }
}

std::optional<RainbowTreeWitness> has_rainbow_tree(const BipartiteColoring& coloring,
                                                   const VertexTriple& s) {
  const auto& m = s.members();
  std::optional<RainbowTreeWitness> found;
  switch (s.w_count()) {
    case 3:
      found = witness_w3(coloring, m[0].index() - 1, m[1].index() - 1, m[2].index() - 1);
      break;
    case 2:
      found = witness_w2(coloring, m[0].index() - 1, m[1].index() - 1, m[2].index() - 1);
      break;
    default:
      found = witness_w1(coloring, m[0].index() - 1);
      break;
  }
  if (found) {
    sort_edges(*found);
    if (!is_valid_witness(*found, coloring, s))
      throw std::logic_error("internal error: produced witness failed validation");
  }
  return found;
}

bool codes_form_3rainbow(std::span<const ColorCode> codes) {
  const int t = static_cast<int>(codes.size());
  // Cheapest classes first; all triples must pass, so order is free.
  for (int i = 0; i < t; ++i)
    if (!decide_w1(codes, i)) return false;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!decide_w2(codes, i, j, 0) || !decide_w2(codes, i, j, 1)) return false;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      for (int l = j + 1; l < t; ++l)
        if (!decide_w3(codes, i, j, l)) return false;
  return true;
}

VerificationReport verify_3rainbow(const BipartiteColoring& coloring, int jobs) {
  if (jobs < 1) throw InputError("jobs must be >= 1");
  const int t = coloring.t();
  const int n = t + 2;
  const std::uint64_t total = internal::binomial(static_cast<std::uint64_t>(n), 3);
  auto codes = coloring.codes();
  constexpr std::uint64_t kNoFail = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t first_fail = kNoFail;
  if (jobs == 1 || total < 1024) {
    std::uint64_t idx = 0;
    for (int a = 0; a < n && first_fail == kNoFail; ++a)
      for (int b = a + 1; b < n && first_fail == kNoFail; ++b)
        for (int c = b + 1; c < n; ++c, ++idx)
          if (!decide_indices(codes, {a, b, c})) {
            first_fail = idx;
            break;
          }
  } else {
    // Contiguous index ranges per worker; min-reduce the failing index.  The
    // resulting report is bit-identical to the sequential one.
    std::atomic<std::uint64_t> global_fail{kNoFail};
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int wk = 0; wk < workers; ++wk) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(wk) /
                               static_cast<std::uint64_t>(workers);
      const std::uint64_t hi = total * static_cast<std::uint64_t>(wk + 1) /
                               static_cast<std::uint64_t>(workers);
      pool.emplace_back([&, lo, hi] {
        if (lo >= hi) return;
        TripleIndices tr = unrank_triple(n, lo);
        std::uint64_t idx = lo;
        while (idx < hi) {
          if (idx >= global_fail.load(std::memory_order_relaxed)) return;
          if (!decide_indices(codes, tr)) {
            std::uint64_t cur = global_fail.load(std::memory_order_relaxed);
            while (idx < cur &&
                   !global_fail.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
            }
            return;
          }
          ++idx;
          // successor triple in lexicographic order
          if (tr.c + 1 < n) {
            ++tr.c;
          } else if (tr.b + 2 < n) {
            ++tr.b;
            tr.c = tr.b + 1;
          } else {
            ++tr.a;
            tr.b = tr.a + 1;
            tr.c = tr.b + 1;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    first_fail = global_fail.load();
  }

  VerificationReport report;
  if (first_fail == kNoFail) {
    report.pass = true;
    report.triples_checked = total;
    TripleIndices tr = unrank_triple(n, 0);
    report.witness_sample = has_rainbow_tree(
        coloring, VertexTriple(vertex_of(t, tr.a), vertex_of(t, tr.b), vertex_of(t, tr.c)));
  } else {
    report.pass = false;
    report.triples_checked = first_fail + 1;
    TripleIndices tr = unrank_triple(n, first_fail);
    report.failing_triple =
        VertexTriple(vertex_of(t, tr.a), vertex_of(t, tr.b), vertex_of(t, tr.c));
  }
  return report;
}

std::optional<GenericTreeWitness> generic_has_rainbow_tree(const GenericColoredGraph& graph,
                                                           std::span<const int> s) {
  const auto edges = graph.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 20)
    throw BudgetError(internal::binomial(static_cast<std::uint64_t>(m),
                                         static_cast<std::uint64_t>(m / 2)),
                      1u << 20, "generic oracle refuses graphs with more than 20 edges");
  for (int v : s)
    if (v < 0 || v >= graph.n()) throw InputError("S vertex out of range");

  std::set<Color> palette;
  for (const GenericEdge& e : edges) palette.insert(e.color);
  const int lo = std::max<int>(1, static_cast<int>(s.size()) - 1);
  const int hi = std::min(graph.n() - 1, static_cast<int>(palette.size()));

  std::vector<int> pick;
  for (int size = lo; size <= hi; ++size) {
    pick.assign(static_cast<std::size_t>(size), 0);
    for (int p = 0; p < size; ++p) pick[static_cast<std::size_t>(p)] = p;
    while (true) {
      // evaluate the current subset
      std::set<Color> cols;
      std::set<int> verts;
      bool rainbow = true;
      for (int e : pick) {
        if (!cols.insert(edges[static_cast<std::size_t>(e)].color).second) {
          rainbow = false;
          break;
        }
        verts.insert(edges[static_cast<std::size_t>(e)].a);
        verts.insert(edges[static_cast<std::size_t>(e)].b);
      }
      if (rainbow) {
        bool covers = true;
        for (int v : s)
          if (!verts.count(v)) covers = false;
        if (covers && static_cast<int>(verts.size()) == size + 1) {
          std::map<int, int> parent;
          for (int v : verts) parent[v] = v;
          auto root = [&](int v) {
            while (parent[v] != v) v = parent[v];
            return v;
          };
          int comps = static_cast<int>(verts.size());
          for (int e : pick) {
            int ra = root(edges[static_cast<std::size_t>(e)].a);
            int rb = root(edges[static_cast<std::size_t>(e)].b);
            if (ra != rb) {
              parent[ra] = rb;
              --comps;
            }
          }
          if (comps == 1) {
            GenericTreeWitness w;
            for (int e : pick) w.edges.push_back(edges[static_cast<std::size_t>(e)]);
            return w;
          }
        }
      }
      // next combination
      int p = size - 1;
      while (p >= 0 && pick[static_cast<std::size_t>(p)] == m - size + p) --p;
      if (p < 0) break;
      ++pick[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < size; ++q)
        pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace rx3
