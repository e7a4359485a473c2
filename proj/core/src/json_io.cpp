#include "superchar/json_io.hpp"

#include <json.hpp>

namespace superchar {

using nlohmann::json;

namespace {

json weight_to_json(const Weight& w) {
  json je = json::array(), jd = json::array();
  for (const auto& c : w.eps) je.push_back(c.str());
  for (const auto& c : w.delta) jd.push_back(c.str());
  return json{{"eps", je}, {"delta", jd}};
}

Weight weight_of_json(const json& j) {
  Weight w;
  for (const auto& v : j.at("eps")) w.eps.push_back(Rat::parse(v.get<std::string>()));
  for (const auto& v : j.at("delta")) w.delta.push_back(Rat::parse(v.get<std::string>()));
  return w;
}

}  // namespace

std::string weight_json(const Weight& w) { return weight_to_json(w).dump(); }

Weight weight_from_json(const std::string& text) {
  try {
    return weight_of_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight json: ") + e.what());
  }
}

std::string g0char_json(const G0Char& c) {
  json terms = json::array();
  for (const auto& [k, p] : c.terms())
    terms.push_back(json{{"mu", weight_to_json(k)}, {"even", p.first}, {"odd", p.second}});
  Dims d = dims(c);
  return json{{"schema", "v1"},
              {"algebra", c.algebra().key()},
              {"terms", terms},
              {"dim", d.dim},
              {"sdim", d.sdim}}
      .dump();
}

std::string graph_json(const MarkedGraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices()) {
    verts.push_back(json{{"weight", weight_to_json(v)},
                         {"diagram", render(diag(g.algebra(), v))}});
  }
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"b", e.b}, {"bp", e.bp}});
  return json{{"schema", "v1"},
              {"algebra", g.algebra().key()},
              {"vertices", verts},
              {"edges", edges}}
      .dump();
}

std::string ds_image_json(const Algebra& g, const DsImage& img) {
  json terms = json::array();
  if (img.terms.empty()) terms.push_back(json{{"kind", "zero"}});
  for (const auto& t : img.terms) {
    terms.push_back(json{{"kind", t.kind == DsImage::TermKind::Euler ? "euler" : "kac"},
                         {"weight", weight_to_json(t.weight)},
                         {"coeff", t.coeff}});
  }
  return json{{"schema", "v1"},
              {"source", g.key()},
              {"target", json{{"algebra", img.target.key()}}},
              {"terms", terms},
              {"sigma_pair", img.sigma_pair},
              {"parity_shift", img.parity_shift}}
      .dump();
}

std::string diagram_json(const WeightDiagram& f) {
  json positions = json::object();
  for (const auto& [p, c] : f.cells) {
    std::string sym;
    if (c.gt) sym += ">";
    for (int i = 0; i < c.times; ++i) sym += "x";
    if (c.lt) sym += "<";
    positions[std::to_string(p)] = sym;
  }
  std::string sign = f.sign == DiagSign::Plus ? "+" : f.sign == DiagSign::Minus ? "-" : "";
  return json{{"schema", "v1"}, {"positions", positions}, {"sign", sign},
              {"text", render(f)}}
      .dump();
}

}  // namespace superchar
