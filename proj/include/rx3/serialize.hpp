#pragma once

#include <string>

#include "rx3/core.hpp"
#include "rx3/verifier.hpp"

// JSON wire format and Graphviz export.
//
// Coloring object: {"t": <int>, "k": <int>, "codes": [[a1, a2], ...]}
// Report object:   {"verdict": "pass"|"fail",
//                   "failing_triple": ["w1", "w2", "u1"] | null,
//                   "triples_checked": <int>}
// Key order is fixed; serialization is byte-deterministic.
namespace rx3 {

// Parses the coloring object; throws InputError on malformed input.
BipartiteColoring parse_coloring(const std::string& json_text);

std::string to_json(const BipartiteColoring& coloring);

std::string report_to_json(const VerificationReport& report);

// Graphviz `graph` with one node per vertex (u-nodes boxed) and one colored
// edge per K_{2,t} edge; palette cycles through 12 fixed hex colors.
std::string to_dot(const BipartiteColoring& coloring);

}  // namespace rx3
