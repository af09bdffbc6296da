// foldcx: command-line front end over the JSON complex format.
//
// Exit codes: 0 ok, 1 property violated, 2 malformed input or budget
// exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldcx/canonical.hpp"
#include "foldcx/families.hpp"
#include "foldcx/fold.hpp"
#include "foldcx/io.hpp"
#include "foldcx/topology.hpp"
#include "foldcx/verify.hpp"

using namespace foldcx;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kBadInput = 2;

struct Globals {
  std::string output;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
  std::string format = "json";
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
  } else {
    write_text_file(g.output, text);
  }
}

std::size_t need_vertex(const Morphism& f, const std::string& id) {
  if (auto v = f.domain.vertex_index(id)) return *v;
  throw std::invalid_argument("no vertex '" + id + "'");
}

std::size_t need_edge(const Morphism& f, const std::string& id) {
  if (auto e = f.domain.edge_index(id)) return *e;
  throw std::invalid_argument("no edge '" + id + "'");
}

Morphism load(const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return morphism_from_json(text);
  }
  return read_morphism_file(path);
}

std::vector<int> parse_types(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int t = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad face type '" + item + "'");
    out.push_back(t);
  }
  if (out.empty()) throw std::invalid_argument("empty face type list");
  return out;
}

int emit_report(const Globals& g, VerificationReport report) {
  report.parameters.emplace_back("seed", std::to_string(g.seed));
  emit(g, g.format == "table" ? report_to_table(report) : report_to_json(report, g.timing));
  return report.pass() ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foldings and immersions of combinatorial 2-complexes over K_P = <a,b | b, bab^-1a^-2>"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-o,--output", g.output, "Output path (default stdout)");
  app.add_option("--seed", g.seed, "Seed for randomized conflict orders")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "Include wall-clock time in reports");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "table"}));

  std::function<int()> action;
  std::string file, file2, text, edge, u, v, e1, e2, trace_path, types = "0,1";
  int face_type = 0, position = 0, max_vertices = 1, max_i = 0;
  bool random_order = false, allow_free = false, allow_disconnected = false;

  auto* build = app.add_subcommand("build", "Presentation complex of a presentation such as \"a,b|b,baBAA\"");
  build->add_option("presentation", text)->required();
  build->callback([&] {
    action = [&] {
      emit(g, morphism_to_json(presentation_complex(parse_presentation(text))));
      return kOk;
    };
  });

  auto* family = app.add_subcommand("family", "Family member, e.g. C:5 or Dt:3");
  family->add_option("spec", text)->required();
  family->callback([&] {
    action = [&] {
      emit(g, morphism_to_json(build_family(parse_family_tag(text))));
      return kOk;
    };
  });

  auto* chi = app.add_subcommand("chi", "Euler characteristic");
  chi->add_option("file", file)->required();
  chi->callback([&] {
    action = [&] {
      emit(g, std::to_string(euler_characteristic(load(file).domain)) + "\n");
      return kOk;
    };
  });

  auto* kappa = app.add_subcommand("kappa", "Average curvature");
  kappa->add_option("file", file)->required();
  kappa->callback([&] {
    action = [&] {
      emit(g, to_string(average_curvature(load(file).domain)) + "\n");
      return kOk;
    };
  });

  auto* check = app.add_subcommand("check-immersion", "Is the map an immersion");
  check->add_option("file", file)->required();
  check->callback([&] {
    action = [&] {
      const auto r = is_immersion(load(file));
      emit(g, r.immersion ? "immersion\n" : "not an immersion: " + r.witness + "\n");
      return r.immersion ? kOk : kViolated;
    };
  });

  auto* free = app.add_subcommand("free-faces", "Edges lying on exactly one face side");
  free->add_option("file", file)->required();
  free->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      std::string out;
      for (std::size_t e : free_faces(f.domain)) out += f.domain.edges[e].id + "\n";
      emit(g, out);
      return kOk;
    };
  });

  auto* collapse = app.add_subcommand("collapse", "Elementary collapse across a free edge");
  collapse->add_option("file", file)->required();
  collapse->add_option("--edge", edge)->required();
  collapse->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      emit(g, morphism_to_json(collapse_free_face(f, need_edge(f, edge))));
      return kOk;
    };
  });

  auto* fold_cmd = app.add_subcommand("fold", "Fold to an immersion");
  fold_cmd->add_option("file", file)->required();
  fold_cmd->add_option("--trace", trace_path, "Write merge events as JSON lines");
  fold_cmd->add_flag("--random-order", random_order, "Resolve conflicts in a seeded random order");
  fold_cmd->callback([&] {
    action = [&] {
      FoldOptions options;
      if (random_order) options.shuffle_seed = g.seed;
      const FoldResult r = fold(load(file), options);
      if (!trace_path.empty()) write_text_file(trace_path, trace_to_jsonl(r.trace));
      emit(g, morphism_to_json(r.morphism));
      return kOk;
    };
  });

  auto* couple_cmd = app.add_subcommand("couple", "Glue a fresh face along an edge, then fold");
  couple_cmd->add_option("file", file)->required();
  couple_cmd->add_option("--type", face_type, "Relator index")->required();
  couple_cmd->add_option("--pos", position, "Relator position")->required();
  couple_cmd->add_option("--edge", edge)->required();
  couple_cmd->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      emit(g, morphism_to_json(couple(f, face_type, position, need_edge(f, edge))));
      return kOk;
    };
  });

  auto* idv = app.add_subcommand("identify-vertices", "Identify two vertices, then fold");
  idv->add_option("file", file)->required();
  idv->add_option("--u", u)->required();
  idv->add_option("--v", v)->required();
  idv->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      emit(g, morphism_to_json(identify_vertices(f, need_vertex(f, u), need_vertex(f, v))));
      return kOk;
    };
  });

  auto* ide = app.add_subcommand("identify-edges", "Identify two equally labeled edges, then fold");
  ide->add_option("file", file)->required();
  ide->add_option("--e1", e1)->required();
  ide->add_option("--e2", e2)->required();
  ide->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      emit(g, morphism_to_json(identify_edges(f, need_edge(f, e1), need_edge(f, e2))));
      return kOk;
    };
  });

  auto* iso = app.add_subcommand("iso", "Label-preserving isomorphism test");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->callback([&] {
    action = [&] {
      const Morphism f = load(file);
      const Morphism h = load(file2);
      const auto m = isomorphic(f, h);
      if (!m) {
        emit(g, "not isomorphic\n");
        return kViolated;
      }
      nlohmann::ordered_json j;
      j["isomorphic"] = true;
      for (std::size_t k = 0; k < m->vertex_map.size(); ++k) {
        j["vertices"][f.domain.vertices[k]] = h.domain.vertices[m->vertex_map[k]];
      }
      for (std::size_t k = 0; k < m->edge_map.size(); ++k) {
        j["edges"][f.domain.edges[k].id] = h.domain.edges[m->edge_map[k]].id;
      }
      for (std::size_t k = 0; k < m->face_map.size(); ++k) {
        j["faces"][f.domain.faces[k].id] = h.domain.faces[m->face_map[k]].id;
      }
      emit(g, j.dump(2) + "\n");
      return kOk;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Name the D/C family member, or Other");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const auto tag = classify(load(file));
      emit(g, (tag ? to_string(*tag) : "Other") + "\n");
      return kOk;
    };
  });

  auto* hom = app.add_subcommand("homology", "Integer homology");
  hom->add_option("file", file)->required();
  hom->callback([&] {
    action = [&] {
      emit(g, homology_to_json(homology(load(file).domain)));
      return kOk;
    };
  });

  auto* cert = app.add_subcommand("certify", "Contractibility certificate");
  cert->add_option("file", file)->required();
  cert->callback([&] {
    action = [&] {
      const Certificate c = certify_contractible(load(file).domain, default_budgets());
      emit(g, certificate_to_json(c));
      if (c.contractible()) return kOk;
      return c.kind == Certificate::Kind::not_contractible ? kViolated : kBadInput;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "All immersions over K_P up to isomorphism");
  enumerate->add_option("--max-vertices", max_vertices)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--types", types, "Face types that must occur (and no others)")->capture_default_str();
  enumerate->add_flag("--allow-free-faces", allow_free);
  enumerate->add_flag("--allow-disconnected", allow_disconnected);
  enumerate->callback([&] {
    action = [&] {
      EnumerationFilter filter;
      filter.max_vertices = max_vertices;
      filter.required_types = parse_types(types);
      filter.require_no_free_faces = !allow_free;
      filter.require_connected = !allow_disconnected;
      SearchOptions options = default_search_options();
      options.jobs = g.jobs;
      const auto r = enumerate_immersions(filter, options);
      nlohmann::ordered_json j;
      j["version"] = version();
      j["seed"] = g.seed;
      j["budget"] = options.budget;
      j["skeletons"] = r.skeletons;
      j["candidates"] = r.candidates;
      j["classes"] = nlohmann::ordered_json::array();
      for (const auto& m : r.classes) {
        const auto tag = filter.require_connected ? classify(m) : std::nullopt;
        nlohmann::ordered_json c;
        c["classification"] = tag ? to_string(*tag) : "Other";
        c["chi"] = euler_characteristic(m.domain);
        c["complex"] = nlohmann::ordered_json::parse(morphism_to_json(m));
        j["classes"].push_back(std::move(c));
      }
      emit(g, j.dump(2) + "\n");
      return kOk;
    };
  });

  auto* lemma = app.add_subcommand("verify-lemma", "Run one lemma checker");
  lemma->add_option("lemma", text)->required()->check(CLI::IsMember({"2.2", "2.4", "2.5"}));
  lemma->add_option("--max-i", max_i)->required()->check(CLI::NonNegativeNumber);
  lemma->callback([&] {
    action = [&] {
      if (text == "2.2") return emit_report(g, check_lemma_vertex_identification(max_i));
      if (text == "2.4") return emit_report(g, check_lemma_edge_identification(max_i));
      return emit_report(g, check_lemma_coupling(max_i));
    };
  });

  auto* theorem = app.add_subcommand("verify-theorem", "Exhaustive check at a given vertex count");
  theorem->add_option("--max-vertices", max_vertices)->required()->check(CLI::PositiveNumber);
  theorem->callback([&] {
    action = [&] {
      SearchOptions options = default_search_options();
      options.jobs = g.jobs;
      return emit_report(g, verify_main_theorem(max_vertices, options, default_budgets()));
    };
  });

  auto* dot = app.add_subcommand("export-dot", "1-skeleton as Graphviz DOT");
  dot->add_option("file", file)->required();
  dot->callback([&] {
    action = [&] {
      emit(g, morphism_to_dot(load(file)));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kBadInput;
}
