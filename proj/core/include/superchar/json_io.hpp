#pragma once

#include <string>

#include "superchar/blockgraph.hpp"
#include "superchar/ds.hpp"
#include "superchar/g0char.hpp"

namespace superchar {

// JSON encodings ("schema":"v1").  Weights carry rationals as "p/q" strings.
std::string weight_json(const Weight& w);
Weight weight_from_json(const std::string& text);

std::string g0char_json(const G0Char& c);
std::string graph_json(const MarkedGraph& g);
std::string ds_image_json(const Algebra& g, const DsImage& img);
std::string diagram_json(const WeightDiagram& f);

}  // namespace superchar
