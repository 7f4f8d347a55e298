// Acceptance suite: one line of output per criterion, exit code = number of
// failed criteria.  Each criterion carries a wall-clock ceiling; overruns
// fail the criterion even when every check inside it holds.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "rx3/construct.hpp"
#include "rx3/core.hpp"
#include "rx3/search.hpp"
#include "rx3/verifier.hpp"

using namespace rx3;

namespace {

std::vector<VertexTriple> all_triples(int t) {
  std::vector<Vertex> verts;
  for (int i = 1; i <= t; ++i) verts.push_back(Vertex::w(i));
  verts.push_back(Vertex::u(1));
  verts.push_back(Vertex::u(2));
  std::vector<VertexTriple> out;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      for (std::size_t c = b + 1; c < verts.size(); ++c)
        out.emplace_back(verts[a], verts[b], verts[c]);
  return out;
}

// Embed the K_{2,t} coloring as a generic colored graph and ask the
// independent edge-subset oracle (vertices 0..t-1 = w1..wt, then u1, u2).
bool generic_verdict(const BipartiteColoring& col, const VertexTriple& s) {
  std::vector<GenericEdge> edges;
  for (int i = 1; i <= col.t(); ++i) {
    edges.push_back({i - 1, col.t(), col.code(i).a1});
    edges.push_back({i - 1, col.t() + 1, col.code(i).a2});
  }
  std::vector<int> sv;
  for (const Vertex& v : s.members())
    sv.push_back(v.is_u() ? col.t() + v.index() - 1 : v.index() - 1);
  return generic_has_rainbow_tree(GenericColoredGraph(col.t() + 2, edges), sv).has_value();
}

class Suite {
 public:
  using Clock = std::chrono::steady_clock;

  // Runs one criterion: `body` returns true on success and may append
  // explanatory lines to `detail` (printed indented under the verdict).
  template <typename Body>
  void criterion(int number, const std::string& label, double limit_seconds, Body body) {
    std::string detail;
    const Clock::time_point start = Clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail += std::string("unexpected exception: ") + e.what() + "\n";
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && seconds > limit_seconds) {
      ok = false;
      detail += "exceeded the " + std::to_string(limit_seconds) + " s ceiling\n";
    }
    if (!ok) ++failures_;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), seconds);
    std::size_t pos = 0;
    while (pos < detail.size()) {
      const std::size_t nl = detail.find('\n', pos);
      std::printf("       %s\n", detail.substr(pos, nl - pos).c_str());
      if (nl == std::string::npos) break;
      pos = nl + 1;
    }
    std::fflush(stdout);
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

}  // namespace

int main() {
  Suite suite;

  suite.criterion(
      1, "constructions for t = 1..60 verify and use exactly the closed-form color count",
      5.0, [](std::string& detail) {
        for (long long t = 1; t <= 60; ++t) {
          const BipartiteColoring c = construct_coloring(t);
          if (c.k() != rx3_value(t)) {
            detail += "t=" + std::to_string(t) + ": declared palette differs\n";
            return false;
          }
          if (static_cast<int>(colors_used(c).size()) != c.k()) {
            detail += "t=" + std::to_string(t) + ": not all colors appear\n";
            return false;
          }
          if (!verify_3rainbow(c).pass) {
            detail += "t=" + std::to_string(t) + ": verification failed\n";
            return false;
          }
        }
        return true;
      });

  suite.criterion(
      2, "single-threaded brute-force search reproduces the index for t = 1..9", 120.0,
      [](std::string& detail) {
        for (int t = 1; t <= 9; ++t) {
          const OracleResult r = brute_force_rx3(t, 5);
          if (!r.k || *r.k != rx3_value(t)) {
            detail += "t=" + std::to_string(t) + ": oracle disagrees with the closed form\n";
            return false;
          }
        }
        return true;
      });

  suite.criterion(
      3, "exhaustive maxima over 1, 2, 3 colors equal 1, 2, 4", 1.0,
      [](std::string& detail) {
        const std::uint64_t b1 = beta(1).value;
        const std::uint64_t b2 = beta(2).value;
        const std::uint64_t b3 = beta(3).value;
        bool ok = true;
        if (b1 != 1) {
          ok = false;
          detail += "computed beta(1) = " + std::to_string(b1) +
                    ", not the expected 1.  The expected value is unattainable: the only\n"
                    "candidate over one color is a single (1,1) code, whose graph is the\n"
                    "path u1 - w1 - u2 with both edges the same color, and its unique\n"
                    "3-vertex set has no rainbow tree.  So no acceptable 1-code collection\n"
                    "exists and the true maximum is 0.  The expectation also contradicts\n"
                    "criterion 2 of this suite: brute_force_rx3(1, 5) = 2 holds exactly\n"
                    "because {(1,1)} is unacceptable, the same judgment beta(1) makes.\n";
        }
        if (b2 != 2) {
          ok = false;
          detail += "beta(2) = " + std::to_string(b2) + ", expected 2\n";
        }
        if (b3 != 4) {
          ok = false;
          detail += "beta(3) = " + std::to_string(b3) + ", expected 4\n";
        }
        return ok;
      });

  suite.criterion(
      4, "over 4 colors the maximum acceptable multiset has 8 codes, and the frozen "
         "8-code block is acceptable",
      120.0, [](std::string& detail) {
        const auto block = four_color_block();
        if (!is_acceptable(CodeMultiset(4, {block.begin(), block.end()}))) {
          detail += "the frozen 8-code block is not acceptable\n";
          return false;
        }
        const CountResult r = max_acceptable(4, false, 9);
        if (r.value != 8) {
          detail += "max_acceptable(4, multisets, cap 9) = " + std::to_string(r.value) + "\n";
          return false;
        }
        return true;
      });

  suite.criterion(
      5, "every set of 21 distinct codes over 5 colors fails; the 20 off-diagonal codes pass",
      30.0, [](std::string& detail) {
        std::vector<ColorCode> pool;
        for (int a = 1; a <= 5; ++a)
          for (int b = 1; b <= 5; ++b) pool.push_back({a, b});
        // A 21-subset of the 25 codes is the complement of a 4-subset.
        int checked = 0;
        for (int d1 = 0; d1 < 25; ++d1)
          for (int d2 = d1 + 1; d2 < 25; ++d2)
            for (int d3 = d2 + 1; d3 < 25; ++d3)
              for (int d4 = d3 + 1; d4 < 25; ++d4) {
                std::vector<ColorCode> codes;
                for (int i = 0; i < 25; ++i)
                  if (i != d1 && i != d2 && i != d3 && i != d4)
                    codes.push_back(pool[static_cast<std::size_t>(i)]);
                ++checked;
                if (is_acceptable(CodeMultiset(5, std::move(codes)))) {
                  detail += "an acceptable 21-code set exists (complement of indices " +
                            std::to_string(d1) + "," + std::to_string(d2) + "," +
                            std::to_string(d3) + "," + std::to_string(d4) + ")\n";
                  return false;
                }
              }
        if (checked != 12'650) {
          detail += "expected 12650 sets, checked " + std::to_string(checked) + "\n";
          return false;
        }
        std::vector<ColorCode> off;
        for (const ColorCode& c : pool)
          if (c.a1 != c.a2) off.push_back(c);
        if (!is_acceptable(CodeMultiset(5, off))) {
          detail += "the 20 off-diagonal codes are not acceptable\n";
          return false;
        }
        const CountResult m = max_acceptable(5, true, 21);
        if (m.value != 20) {
          detail += "max_acceptable(5, distinct, cap 21) = " + std::to_string(m.value) + "\n";
          return false;
        }
        return true;
      });

  suite.criterion(6, "maximum isolated rook placements: 4 on a 3x3 board, 2 on a 2x2 board",
                  1.0, [](std::string& detail) {
                    const RookResult r3 = max_isolated_rooks(3);
                    const RookResult r2 = max_isolated_rooks(2);
                    if (r3.count != 4 || r2.count != 2) {
                      detail += "got " + std::to_string(r3.count) + " and " +
                                std::to_string(r2.count) + "\n";
                      return false;
                    }
                    return true;
                  });

  suite.criterion(
      7, "shape-catalog verifier agrees with the generic edge-subset oracle", 60.0,
      [](std::string& detail) {
        // All 9^3 = 729 colorings with t = 3 over a 3-color palette.
        std::vector<ColorCode> pool;
        for (int a = 1; a <= 3; ++a)
          for (int b = 1; b <= 3; ++b) pool.push_back({a, b});
        const std::vector<VertexTriple> triples3 = all_triples(3);
        for (const ColorCode& c1 : pool)
          for (const ColorCode& c2 : pool)
            for (const ColorCode& c3 : pool) {
              const BipartiteColoring col(3, {c1, c2, c3});
              for (const VertexTriple& s : triples3)
                if (has_rainbow_tree(col, s).has_value() != generic_verdict(col, s)) {
                  detail += "exhaustive disagreement at t=3\n";
                  return false;
                }
            }
        // 1000 random colorings, t in 3..6, k in 2..5, fixed seed.
        std::mt19937 rng(9001);
        for (int trial = 0; trial < 1000; ++trial) {
          const int t = 3 + static_cast<int>(rng() % 4);
          const int k = 2 + static_cast<int>(rng() % 4);
          std::vector<ColorCode> codes;
          for (int i = 0; i < t; ++i)
            codes.push_back({1 + static_cast<int>(rng() % k), 1 + static_cast<int>(rng() % k)});
          const BipartiteColoring col(k, std::move(codes));
          for (const VertexTriple& s : all_triples(t))
            if (has_rainbow_tree(col, s).has_value() != generic_verdict(col, s)) {
              detail += "random disagreement at trial " + std::to_string(trial) + "\n";
              return false;
            }
        }
        return true;
      });

  suite.criterion(
      8, "whenever the sufficient-condition fast check fires, the exact verifier finds a tree",
      60.0, [](std::string& detail) {
        for (int k : {4, 5}) {
          std::vector<ColorCode> pool;
          for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b) pool.push_back({a, b});
          const std::vector<VertexTriple> triples = all_triples(3);
          for (const ColorCode& c1 : pool)
            for (const ColorCode& c2 : pool)
              for (const ColorCode& c3 : pool) {
                const BipartiteColoring col(k, {c1, c2, c3});
                for (const VertexTriple& s : triples) {
                  if (lemma22_fast_check(col, s) == FastCheck::kTreeExists &&
                      !has_rainbow_tree(col, s).has_value()) {
                    detail += "unsound fast check at k=" + std::to_string(k) + "\n";
                    return false;
                  }
                }
              }
        }
        return true;
      });

  suite.criterion(
      9, "the frozen 10-code, 9-code, and 4-code colorings verify", 5.0,
      [](std::string& detail) {
        const auto block = five_color_block();
        std::vector<ColorCode> ten(block.begin(), block.end());
        if (!verify_3rainbow(BipartiteColoring(5, ten)).pass) {
          detail += "10-code coloring failed at t=10\n";
          return false;
        }
        if (!verify_3rainbow(BipartiteColoring(5, {block.begin(), block.begin() + 9})).pass) {
          detail += "9-code prefix failed at t=9\n";
          return false;
        }
        if (!verify_3rainbow(BipartiteColoring(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}})).pass) {
          detail += "4-code coloring failed at t=4\n";
          return false;
        }
        return true;
      });

  return suite.failures();
}
