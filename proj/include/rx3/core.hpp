#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain types for edge-colored complete bipartite graphs K_{2,t}.
//
// K_{2,t} has two "hub" vertices u1, u2 and t "leaf" vertices w1..wt, with
// every u-w pair joined by an edge.  An edge coloring is captured per
// W-vertex by its color code (a1, a2) = (color of u1-w, color of u2-w);
// a coloring of K_{2,t} is exactly a sequence of t codes.
namespace rx3 {

using Color = int;  // colors are dense integers 1..k

// Malformed caller input (bad sizes, colors out of range, unparsable JSON).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive operation refused to start because its raw candidate count
// exceeds the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t estimate, std::uint64_t budget, const std::string& what)
      : std::runtime_error(what), estimate_(estimate), budget_(budget) {}
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

// Ordered color pair of one W-vertex: a1 on the u1 edge, a2 on the u2 edge.
// Comparison is lexicographic; this is the code order used everywhere.
struct ColorCode {
  Color a1 = 0;
  Color a2 = 0;
  friend auto operator<=>(const ColorCode&, const ColorCode&) = default;
};

// A vertex of K_{2,t}.  The canonical vertex order puts W before U
// (w1 < w2 < ... < wt < u1 < u2), so triple enumeration starts with all-W
// sets; reported "first failing triple" values rely on this order.
class Vertex {
 public:
  static Vertex w(int index) {
    if (index < 1) throw InputError("W-vertex index must be >= 1");
    return Vertex(false, index);
  }
  static Vertex u(int index) {
    if (index != 1 && index != 2) throw InputError("U-vertex index must be 1 or 2");
    return Vertex(true, index);
  }

  bool is_u() const { return in_u_; }
  int index() const { return index_; }  // 1-based within its side
  std::string name() const { return (in_u_ ? "u" : "w") + std::to_string(index_); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.in_u_ <=> b.in_u_; c != 0) return c;  // W sorts before U
    return a.index_ <=> b.index_;
  }

 private:
  Vertex(bool in_u, int index) : in_u_(in_u), index_(index) {}
  bool in_u_;
  int index_;
};

// Three distinct vertices, stored sorted in canonical order.
class VertexTriple {
 public:
  VertexTriple(Vertex a, Vertex b, Vertex c);
  const std::array<Vertex, 3>& members() const { return members_; }
  int w_count() const;  // |S ∩ W|, between 1 and 3 (only two U-vertices exist)
  friend bool operator==(const VertexTriple&, const VertexTriple&) = default;

 private:
  std::array<Vertex, 3> members_;
};

// One edge of K_{2,t} with its color.  Every edge joins a W- and a U-vertex.
struct TreeEdge {
  Vertex w;
  Vertex u;
  Color color = 0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Certificate that a triple S has a rainbow tree: an edge list forming a
// tree that contains S with pairwise distinct colors.  Witnesses are minimal
// in edge count and list edges sorted by (w, u).
struct RainbowTreeWitness {
  std::vector<TreeEdge> edges;
};

// An edge coloring of K_{2,t}: declared palette size k plus one code per
// W-vertex.  Immutable after construction.
class BipartiteColoring {
 public:
  // Validates k >= 1, t >= 1 and every color within 1..k.
  BipartiteColoring(int k, std::vector<ColorCode> codes);

  int t() const { return static_cast<int>(codes_.size()); }
  int k() const { return k_; }
  std::span<const ColorCode> codes() const { return codes_; }
  const ColorCode& code(int w_index) const;  // 1-based

 private:
  int k_;
  std::vector<ColorCode> codes_;
};

// Validating constructor that also cross-checks the announced t.
BipartiteColoring make_coloring(int t, int k, std::vector<ColorCode> codes);

// Sorted distinct colors that actually appear in the coloring.
std::vector<Color> colors_used(const BipartiteColoring& coloring);

// Independent witness validator: edges must exist in K_{2,t} with matching
// colors, be pairwise distinct in color, form a tree, contain all of S, and
// use at most one W-vertex outside S (necessarily of degree 2 - a degree-1
// non-S leaf could be pruned, and W-vertices have maximum degree 2).
bool is_valid_witness(const RainbowTreeWitness& witness,
                      const BipartiteColoring& coloring,
                      const VertexTriple& s);

// A small arbitrary edge-colored graph for the generic cross-check oracle.
// Vertices are 0..n-1; the graph must be simple (no loops or multi-edges).
struct GenericEdge {
  int a = 0;
  int b = 0;
  Color color = 0;
  friend bool operator==(const GenericEdge&, const GenericEdge&) = default;
};

class GenericColoredGraph {
 public:
  GenericColoredGraph(int n, std::vector<GenericEdge> edges);
  int n() const { return n_; }
  std::span<const GenericEdge> edges() const { return edges_; }

 private:
  int n_;
  std::vector<GenericEdge> edges_;
};

struct GenericTreeWitness {
  std::vector<GenericEdge> edges;
};

}  // namespace rx3
