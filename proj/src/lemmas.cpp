#include <chrono>

#include "foldcx/canonical.hpp"
#include "foldcx/fold.hpp"
#include "foldcx/verify.hpp"

namespace foldcx {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string tag_text(const std::optional<FamilyTag>& tag) { return tag ? to_string(*tag) : "Other"; }

std::size_t edge_named(const Morphism& f, const std::string& id) {
  const auto e = f.domain.edge_index(id);
  if (!e) throw std::logic_error("family member lacks edge " + id);
  return *e;
}

const char* variant_prefix(Variant v) { return v == Variant::standard ? "" : "t"; }

}  // namespace

VerificationReport check_lemma_vertex_identification(int max_i) {
  const auto start = Clock::now();
  VerificationReport report;
  report.name = "vertex identification in C_i";
  report.parameters = {{"version", version()}, {"max_i", std::to_string(max_i)}};
  for (int i = 3; i <= max_i; i += 2) {
    const Morphism c = build_C(i);
    for (std::size_t u = 0; u < c.domain.vertex_count(); ++u) {
      for (std::size_t v = u + 1; v < c.domain.vertex_count(); ++v) {
        const Morphism r = identify_vertices(c, u, v);
        const auto tag = classify(r);
        ReportRow row;
        row.input = "C:" + std::to_string(i) + " " + c.domain.vertices[u] + "~" + c.domain.vertices[v];
        row.classification = tag_text(tag);
        row.euler = euler_characteristic(r.domain);
        row.pass = tag && tag->family == Family::C && tag->index < i;
        if (!row.pass) row.detail = "expected C_k with k < " + std::to_string(i);
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.wall_clock_ms = elapsed_ms(start);
  return report;
}

VerificationReport check_lemma_edge_identification(int max_i) {
  const auto start = Clock::now();
  VerificationReport report;
  report.name = "b-edge identification in D_i";
  report.parameters = {{"version", version()}, {"max_i", std::to_string(max_i)}};
  for (Variant variant : {Variant::standard, Variant::tilde}) {
    for (int i = 1; i <= max_i; ++i) {
      const Morphism d = build_D(i, variant);
      const std::size_t bi = edge_named(d, "b" + std::to_string(i));
      for (int j = 0; j < i; ++j) {
        const Morphism r = identify_edges(d, bi, edge_named(d, "b" + std::to_string(j)));
        const auto tag = classify(r);
        ReportRow row;
        row.input = std::string("D") + variant_prefix(variant) + ":" + std::to_string(i) + " b" + std::to_string(i) +
                    "~b" + std::to_string(j);
        row.classification = tag_text(tag);
        row.euler = euler_characteristic(r.domain);
        row.pass = tag && tag->family == Family::C;
        if (!row.pass) row.detail = "expected some C_k";
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.wall_clock_ms = elapsed_ms(start);
  return report;
}

VerificationReport check_lemma_coupling(int max_i) {
  const auto start = Clock::now();
  VerificationReport report;
  report.name = "coupling a 2-cell to b_i in D_i";
  report.parameters = {{"version", version()}, {"max_i", std::to_string(max_i)}};
  const Presentation& kp = kp_presentation();
  const int b = kp.generator_index("b");
  for (Variant variant : {Variant::standard, Variant::tilde}) {
    for (int i = 0; i <= max_i; ++i) {
      const Morphism d = build_D(i, variant);
      std::vector<FamilyTag> accepted{{Family::D, i, variant}, {Family::D, i + 1, variant}};
      if (i >= 1) accepted.push_back({Family::C, i, variant});
      if (i == 0) {
        // D_0 is its own tilde; either b-position of the new type-2 cell is
        // a legitimate first step.
        accepted.push_back({Family::D, 1, variant == Variant::standard ? Variant::tilde : Variant::standard});
      }
      std::vector<std::string> accepted_forms;
      for (const auto& t : accepted) accepted_forms.push_back(canonical_form(build_family(t)));

      const std::size_t bi = edge_named(d, "b" + std::to_string(i));
      for (const SideSlot& slot : side_slots(kp, b)) {
        const Morphism r = couple(d, slot.relator, slot.position, bi);
        const auto form = canonical_form(r);
        ReportRow row;
        row.input = std::string("D") + variant_prefix(variant) + ":" + std::to_string(i) + " + type " +
                    std::to_string(slot.relator) + " pos " + std::to_string(slot.position);
        row.classification = tag_text(classify(r));
        row.euler = euler_characteristic(r.domain);
        row.pass = std::find(accepted_forms.begin(), accepted_forms.end(), form) != accepted_forms.end();
        if (!row.pass) {
          row.detail = "expected one of";
          for (const auto& t : accepted) row.detail += " " + to_string(t);
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.wall_clock_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_main_theorem(int max_vertices, const SearchOptions& options, const Budgets& budgets) {
  const auto start = Clock::now();
  VerificationReport report;
  report.name = "contracting non-positive immersions over K_P";
  report.parameters = {{"version", version()},
                       {"max_vertices", std::to_string(max_vertices)},
                       {"enumeration_budget", std::to_string(options.budget)},
                       {"collapse_budget", std::to_string(budgets.collapse_nodes)},
                       {"coset_budget", std::to_string(budgets.max_cosets)}};

  struct Pass {
    const char* label;
    std::vector<int> types;
    bool both;
  };
  for (const Pass& pass : {Pass{"both", {0, 1}, true}, Pass{"type-2", {1}, false}, Pass{"type-1", {0}, false}}) {
    EnumerationFilter filter;
    filter.max_vertices = max_vertices;
    filter.require_connected = true;
    filter.require_no_free_faces = true;
    filter.required_types = pass.types;
    const auto found = enumerate_immersions(filter, options);
    report.notes.push_back(std::string(pass.label) + ": " + std::to_string(found.classes.size()) + " classes from " +
                           std::to_string(found.skeletons) + " skeleta");
    for (std::size_t k = 0; k < found.classes.size(); ++k) {
      const Morphism& x = found.classes[k];
      ReportRow row;
      row.input = std::string(pass.label) + " #" + std::to_string(k) + " (V=" +
                  std::to_string(x.domain.vertex_count()) + " E=" + std::to_string(x.domain.edge_count()) +
                  " F=" + std::to_string(x.domain.face_count()) + ")";
      const auto tag = classify(x);
      row.classification = tag_text(tag);
      row.euler = euler_characteristic(x.domain);
      if (pass.both) {
        const bool is_c = tag && tag->family == Family::C;
        const auto cert = certify_contractible(x.domain, budgets);
        row.pass = is_c && row.euler == 1 && cert.contractible();
        row.detail = to_string(cert.kind);
        if (!is_c) row.detail += "; not a C_k";
      } else if (row.euler <= 0) {
        row.pass = true;
        row.detail = "chi <= 0";
      } else {
        const auto cert = certify_contractible(x.domain, budgets);
        row.pass = cert.contractible();
        row.detail = to_string(cert.kind);
      }
      report.rows.push_back(std::move(row));
    }
  }
  for (int k = 3; k <= max_vertices; k += 2) {
    const bool same = isomorphic(build_C(k), build_C(k, Variant::tilde)).has_value();
    report.notes.push_back("Ct:" + std::to_string(k) + (same ? " is" : " is not") + " isomorphic to C:" +
                           std::to_string(k));
  }
  report.wall_clock_ms = elapsed_ms(start);
  return report;
}

}  // namespace foldcx
