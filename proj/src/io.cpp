#include "foldcx/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace foldcx {

using ordered_json = nlohmann::ordered_json;

Morphism morphism_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    Morphism f;
    f.target = parse_presentation(j.at("presentation").get<std::string>());
    TwoComplex& x = f.domain;
    for (const auto& v : j.at("vertices")) x.vertices.push_back(v.get<std::string>());

    std::vector<bool> reversed;
    for (const auto& e : j.at("edges")) {
      const auto id = e.at("id").get<std::string>();
      const auto tail = x.vertex_index(e.at("tail").get<std::string>());
      const auto head = x.vertex_index(e.at("head").get<std::string>());
      if (!tail || !head) throw std::invalid_argument("edge '" + id + "' refers to an unknown vertex");
      const auto label = e.at("label").get<std::string>();
      std::string lower;
      for (char c : label) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      const int g = f.target.generator_index(lower);
      if (g < 0) throw std::invalid_argument("edge '" + id + "' has unknown label '" + label + "'");
      const bool inverse = label != lower;
      x.edges.push_back({id, inverse ? *head : *tail, inverse ? *tail : *head});
      f.edge_label.push_back(g);
      reversed.push_back(inverse);
    }

    for (const auto& fj : j.at("faces")) {
      Face face{fj.at("id").get<std::string>(), {}};
      for (const auto& sj : fj.at("boundary")) {
        const auto s = sj.get<std::string>();
        if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) {
          throw std::invalid_argument("boundary entry '" + s + "' must be +id or -id");
        }
        const auto e = x.edge_index(std::string_view(s).substr(1));
        if (!e) throw std::invalid_argument("boundary entry '" + s + "' names an unknown edge");
        int sign = s[0] == '+' ? 1 : -1;
        if (reversed[*e]) sign = -sign;
        face.boundary.push_back({*e, sign});
      }
      x.faces.push_back(std::move(face));
      f.face_type.push_back(fj.at("type").get<int>());
    }
    require_valid(f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad complex JSON: ") + e.what());
  }
}

std::string morphism_to_json(const Morphism& f) {
  const TwoComplex& x = f.domain;
  ordered_json j;
  j["presentation"] = f.target.to_text();
  j["vertices"] = ordered_json::array();
  for (const auto& v : x.vertices) j["vertices"].push_back(v);
  j["edges"] = ordered_json::array();
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    ordered_json ej;
    ej["id"] = x.edges[e].id;
    ej["tail"] = x.vertices[x.edges[e].tail];
    ej["head"] = x.vertices[x.edges[e].head];
    ej["label"] = f.target.generators()[static_cast<std::size_t>(f.edge_label[e])];
    j["edges"].push_back(std::move(ej));
  }
  j["faces"] = ordered_json::array();
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    ordered_json fj;
    fj["id"] = x.faces[i].id;
    fj["type"] = f.face_type[i];
    fj["boundary"] = ordered_json::array();
    for (const auto& s : x.faces[i].boundary) {
      fj["boundary"].push_back((s.sign > 0 ? "+" : "-") + x.edges[s.edge].id);
    }
    j["faces"].push_back(std::move(fj));
  }
  return j.dump(2) + "\n";
}

std::string morphism_to_dot(const Morphism& f) {
  const TwoComplex& x = f.domain;
  std::ostringstream out;
  out << "digraph complex {\n";
  for (const auto& v : x.vertices) out << "  \"" << v << "\";\n";
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    const Edge& edge = x.edges[e];
    out << "  \"" << x.vertices[edge.tail] << "\" -> \"" << x.vertices[edge.head] << "\" [id=\"" << edge.id
        << "\", label=\"" << f.target.generators()[static_cast<std::size_t>(f.edge_label[e])] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::ordered_json homology_json(const HomologyProfile& h) {
  nlohmann::ordered_json j;
  j["betti"] = {h.betti_0, h.betti_1, h.betti_2};
  j["torsion_1"] = nlohmann::ordered_json::array();
  for (const auto& t : h.torsion_1) j["torsion_1"].push_back(t.str());
  return j;
}

}  // namespace

std::string homology_to_json(const HomologyProfile& h) { return homology_json(h).dump(2) + "\n"; }

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(c.kind);
  j["euler_characteristic"] = c.euler;
  j["homology"] = homology_json(c.homology);
  j["collapse_sequence"] = nlohmann::ordered_json::array();
  for (const auto& step : c.collapse_sequence) {
    nlohmann::ordered_json s;
    if (step.kind == CollapseStep::Kind::face) {
      s["collapse"] = "face";
      s["free_edge"] = step.edge;
      s["face"] = step.other;
    } else {
      s["collapse"] = "edge";
      s["edge"] = step.edge;
      s["leaf"] = step.other;
    }
    j["collapse_sequence"].push_back(std::move(s));
  }
  j["coset_table"] = {{"cosets_defined", c.cosets_defined}, {"group_order", c.group_order}};
  j["justification"] = c.justification;
  return j.dump(2) + "\n";
}

Morphism read_morphism_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return morphism_from_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace foldcx
