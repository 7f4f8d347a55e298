#include "rx3/serialize.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

namespace rx3 {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 12> kDotPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
};

}  // namespace

BipartiteColoring parse_coloring(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("coloring document must be a JSON object");
  if (!doc.contains("t") || !doc["t"].is_number_integer())
    throw InputError("coloring document needs an integer \"t\"");
  if (!doc.contains("k") || !doc["k"].is_number_integer())
    throw InputError("coloring document needs an integer \"k\"");
  if (!doc.contains("codes") || !doc["codes"].is_array())
    throw InputError("coloring document needs a \"codes\" array");

  const int t = doc["t"].get<int>();
  const int k = doc["k"].get<int>();
  std::vector<ColorCode> codes;
  codes.reserve(doc["codes"].size());
  for (const auto& entry : doc["codes"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw InputError("each code must be a two-element integer array");
    codes.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  return make_coloring(t, k, std::move(codes));
}

std::string to_json(const BipartiteColoring& coloring) {
  ordered_json doc;
  doc["t"] = coloring.t();
  doc["k"] = coloring.k();
  ordered_json codes = ordered_json::array();
  for (const ColorCode& c : coloring.codes()) codes.push_back({c.a1, c.a2});
  doc["codes"] = std::move(codes);
  return doc.dump();
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["verdict"] = report.pass ? "pass" : "fail";
  if (report.failing_triple) {
    ordered_json triple = ordered_json::array();
    for (const Vertex& v : report.failing_triple->members()) triple.push_back(v.name());
    doc["failing_triple"] = std::move(triple);
  } else {
    doc["failing_triple"] = nullptr;
  }
  doc["triples_checked"] = report.triples_checked;
  return doc.dump();
}

std::string to_dot(const BipartiteColoring& coloring) {
  std::ostringstream out;
  out << "graph k2t {\n";
  out << "  u1 [shape=box];\n";
  out << "  u2 [shape=box];\n";
  for (int i = 1; i <= coloring.t(); ++i) out << "  w" << i << ";\n";
  for (int i = 1; i <= coloring.t(); ++i) {
    const ColorCode& c = coloring.code(i);
    out << "  u1 -- w" << i << " [label=\"" << c.a1 << "\", color=\""
        << kDotPalette[static_cast<std::size_t>((c.a1 - 1) % 12)] << "\"];\n";
    out << "  u2 -- w" << i << " [label=\"" << c.a2 << "\", color=\""
        << kDotPalette[static_cast<std::size_t>((c.a2 - 1) % 12)] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rx3
