#pragma once

#include <optional>
#include <span>

#include "rx3/core.hpp"

// Rainbow-tree verification for colorings of K_{2,t}.
//
// The central question: given an edge coloring and a 3-vertex set S, is there
// a tree inside K_{2,t} containing S whose edges all have distinct colors?
// A coloring is a "3-rainbow coloring" when the answer is yes for every S.
namespace rx3 {

// Result of the sufficient-condition fast check.  The check only ever
// certifies existence; kUnknown means "fall through to the full decision",
// never "no tree exists".
enum class FastCheck { kTreeExists, kUnknown };

// Cheap sufficient conditions for a rainbow S-tree, split by |S ∩ W|:
//  - three W-vertices: some column has three distinct colors (star at that
//    hub), or the three codes contain >= 4 distinct colors overall;
//  - two W-vertices (plus one hub): the two codes differ in both coordinates,
//    or contain >= 3 distinct colors;
//  - one W-vertex (both hubs): its two coordinates differ.
FastCheck lemma22_fast_check(const BipartiteColoring& coloring, const VertexTriple& s);

// Full decision with certificate: returns a minimal rainbow S-tree if one
// exists, std::nullopt otherwise.  Every returned witness has been passed
// through is_valid_witness.
std::optional<RainbowTreeWitness> has_rainbow_tree(const BipartiteColoring& coloring,
                                                   const VertexTriple& s);

// Outcome of checking all C(t+2, 3) triples in canonical order.
struct VerificationReport {
  bool pass = false;
  // First failing triple in canonical enumeration order, if any.
  std::optional<VertexTriple> failing_triple;
  // Triples examined: the full count on pass, the 1-based index of the
  // failing triple otherwise.
  std::uint64_t triples_checked = 0;
  // On pass, the witness for the very first triple (a deterministic sample).
  std::optional<RainbowTreeWitness> witness_sample;
};

// Checks every triple in canonical order, stopping at the first failure.
// jobs > 1 splits the triple index range across threads; the report
// (including triples_checked) is identical to the sequential one.
VerificationReport verify_3rainbow(const BipartiteColoring& coloring, int jobs = 1);

// Allocation-free core used by exhaustive searches: does this code sequence
// admit a rainbow tree for every triple?  Palette size is irrelevant to the
// verdict, so only the codes are needed.
bool codes_form_3rainbow(std::span<const ColorCode> codes);

// Generic oracle for small graphs: minimal rainbow tree containing `s` found
// by exhaustive edge-subset enumeration, smallest size first.  Intended for
// cross-checks only; refuses graphs with more than 20 edges via BudgetError.
std::optional<GenericTreeWitness> generic_has_rainbow_tree(const GenericColoredGraph& graph,
                                                           std::span<const int> s);

}  // namespace rx3
