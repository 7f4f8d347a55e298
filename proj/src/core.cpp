#include "rx3/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rx3 {

VertexTriple::VertexTriple(Vertex a, Vertex b, Vertex c) : members_{a, b, c} {
  std::sort(members_.begin(), members_.end());
  if (members_[0] == members_[1] || members_[1] == members_[2])
    throw InputError("triple vertices must be distinct");
}

int VertexTriple::w_count() const {
  int n = 0;
  for (const Vertex& v : members_)
    if (!v.is_u()) ++n;
  return n;
}

BipartiteColoring::BipartiteColoring(int k, std::vector<ColorCode> codes)
    : k_(k), codes_(std::move(codes)) {
  if (k_ < 1) throw InputError("palette size k must be >= 1");
  if (codes_.empty()) throw InputError("coloring needs at least one W-vertex");
  for (const ColorCode& c : codes_) {
    if (c.a1 < 1 || c.a1 > k_ || c.a2 < 1 || c.a2 > k_)
      throw InputError("code color out of range 1..k");
  }
}

const ColorCode& BipartiteColoring::code(int w_index) const {
  if (w_index < 1 || w_index > t()) throw InputError("W-vertex index out of range");
  return codes_[static_cast<std::size_t>(w_index - 1)];
}

BipartiteColoring make_coloring(int t, int k, std::vector<ColorCode> codes) {
  if (t != static_cast<int>(codes.size()))
    throw InputError("announced t does not match the number of codes");
  return BipartiteColoring(k, std::move(codes));
}

std::vector<Color> colors_used(const BipartiteColoring& coloring) {
  std::set<Color> seen;
  for (const ColorCode& c : coloring.codes()) {
    seen.insert(c.a1);
    seen.insert(c.a2);
  }
  return {seen.begin(), seen.end()};
}

bool is_valid_witness(const RainbowTreeWitness& witness,
                      const BipartiteColoring& coloring,
                      const VertexTriple& s) {
  const auto& edges = witness.edges;
  if (edges.empty()) return false;

  // Every edge must exist in K_{2,t} with the coloring's color, and the edge
  // set must be duplicate-free with pairwise distinct colors.
  std::set<std::pair<std::string, std::string>> edge_keys;
  std::set<Color> colors;
  for (const TreeEdge& e : edges) {
    if (e.w.is_u() || !e.u.is_u()) return false;
    if (e.w.index() < 1 || e.w.index() > coloring.t()) return false;
    const ColorCode& code = coloring.code(e.w.index());
    Color actual = (e.u.index() == 1) ? code.a1 : code.a2;
    if (e.color != actual) return false;
    if (!edge_keys.insert({e.w.name(), e.u.name()}).second) return false;
    if (!colors.insert(e.color).second) return false;
  }

  // Connectivity + acyclicity: a connected graph with |V| = |E| + 1 is a tree.
  std::map<std::string, std::string> parent;
  auto ensure = [&](const std::string& v) {
    if (!parent.count(v)) parent[v] = v;
  };
  auto root = [&](std::string v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  int merges = 0;
  for (const TreeEdge& e : edges) {
    ensure(e.w.name());
    ensure(e.u.name());
    std::string ra = root(e.w.name()), rb = root(e.u.name());
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
    ++merges;
  }
  if (static_cast<int>(parent.size()) != merges + 1) return false;

  // S must be contained in the tree's vertex set.
  for (const Vertex& v : s.members())
    if (!parent.count(v.name())) return false;

  // Minimality sanity: at most one W-vertex outside S may appear, and it must
  // have degree 2 (a degree-1 non-S W-leaf would be removable).
  std::map<std::string, int> w_degree;
  for (const TreeEdge& e : edges) ++w_degree[e.w.name()];
  int extra_w = 0;
  for (const auto& [name, degree] : w_degree) {
    bool in_s = false;
    for (const Vertex& v : s.members())
      if (v.name() == name) in_s = true;
    if (!in_s) {
      ++extra_w;
      if (degree != 2) return false;
    }
  }
  return extra_w <= 1;
}

GenericColoredGraph::GenericColoredGraph(int n, std::vector<GenericEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InputError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (GenericEdge& e : edges_) {
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
      throw InputError("edge endpoint out of range");
    if (e.a == e.b) throw InputError("loops are not allowed");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!seen.insert({e.a, e.b}).second) throw InputError("duplicate edge");
    if (e.color < 1) throw InputError("edge color must be >= 1");
  }
}

}  // namespace rx3
