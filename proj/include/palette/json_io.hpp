#ifndef PALETTE_JSON_IO_HPP
#define PALETTE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "palette/certify.hpp"
#include "palette/coloring.hpp"
#include "palette/even_space.hpp"
#include "palette/families.hpp"
#include "palette/graph.hpp"

namespace palette {

using json = nlohmann::ordered_json;

json to_json(const EdgeColoring& c);                 // {"c_max":..,"colors":[..]}
EdgeColoring coloring_from_json(const Graph& g, const json& j);

json to_json(const EdgeSubset& s);                   // {"edges":[..]}
json to_json(const PaletteTable& pt);
json to_json(const EvenVerdict& v);
json to_json(const LowerBoundCert& cert);
json to_json(const OddRegularMaxCert& cert);
json to_json(const CubicClassCert& cert);
json to_json(const Extraction& ex);

json family_manifest(FamilyKind kind, int k, const Graph& g);

// FNV-1a over the input text, as a stable hex digest for run reports.
std::string input_digest(const std::string& text);

}  // namespace palette

#endif
