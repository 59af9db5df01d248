#include "gkm2/report.hpp"

#include <nlohmann/json.hpp>

namespace gkm2 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json class_json(const MomentGraph& g, const std::vector<Polynomial>& values) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < values.size(); ++v) out[g.vertex(v)] = values[v].to_string();
  return out;
}

ordered_json assignment_json(const SymDiffInstance& inst, const std::vector<Subset>& assignment) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < assignment.size(); ++v) out[inst.vertices()[v]] = assignment[v];
  return out;
}

ordered_json relaxed_solution_json(const SymDiffInstance& inst, const RelaxedSolution& s) {
  ordered_json out;
  out["assignment"] = assignment_json(inst, s.assignment);
  ordered_json scalars = ordered_json::array();
  for (bool b : s.scalars) scalars.push_back(b ? 1 : 0);
  out["scalars"] = std::move(scalars);
  out["exact"] = s.exact;
  return out;
}

}  // namespace

std::string cohomology_json(const HilbertData& hilbert, const std::vector<GradedBasis>* bases,
                            const std::optional<std::vector<std::size_t>>& betti) {
  ordered_json doc;
  ordered_json degrees = ordered_json::array();
  for (std::size_t d = 0; d < hilbert.dims.size(); ++d) {
    ordered_json entry;
    entry["d"] = d;
    entry["dim"] = hilbert.dims[d];
    if (bases != nullptr && d < bases->size()) {
      ordered_json basis = ordered_json::array();
      for (const auto& c : (*bases)[d].classes) basis.push_back(class_json(c.graph(), c.values()));
      entry["basis"] = std::move(basis);
    }
    degrees.push_back(std::move(entry));
  }
  doc["degrees"] = std::move(degrees);
  doc["numerator"] = hilbert.numerator;
  doc["stabilized"] = hilbert.stabilized;
  doc["betti"] = betti ? *betti : std::vector<std::size_t>{};
  return dump(doc);
}

std::string validation_json(const ValidationReport& report) {
  ordered_json doc;
  doc["mode"] = std::string(to_string(report.mode));
  doc["valid"] = report.valid;
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json entry;
    entry["vertex"] = v.vertex;
    entry["description"] = v.description;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  return dump(doc);
}

std::string exact_json(const SymDiffInstance& inst, const ExactResult& result) {
  ordered_json doc;
  doc["mode"] = "exact";
  doc["consistent"] = result.consistent;
  doc["components"] = result.components;
  doc["unique_up_to_equivalence"] = result.unique_up_to_equivalence;
  doc["extra_component_freedom"] = result.extra_component_freedom;
  doc["assignment"] = result.consistent ? assignment_json(inst, result.assignment) : ordered_json(nullptr);
  return dump(doc);
}

std::string relaxed_json(const SymDiffInstance& inst, const RelaxedResult& result) {
  ordered_json doc;
  doc["mode"] = "relaxed";
  doc["solution_dimension"] = result.solution_dimension;
  doc["trivial_dimension"] = result.trivial_dimension;
  doc["class_dimension"] = result.class_dimension;
  doc["class_count"] = result.class_count();
  doc["nontrivial_classes"] = result.nontrivial_classes();
  doc["components"] = result.components;
  doc["component_freedom"] = result.component_freedom;
  doc["complement_shift"] = result.complement_shift;
  ordered_json basis = ordered_json::array();
  for (const auto& s : result.basis) basis.push_back(relaxed_solution_json(inst, s));
  doc["basis"] = std::move(basis);
  if (result.representatives_listed) {
    ordered_json reps = ordered_json::array();
    for (const auto& s : result.representatives) reps.push_back(relaxed_solution_json(inst, s));
    doc["representatives"] = std::move(reps);
  } else {
    doc["representatives"] = nullptr;
  }
  return dump(doc);
}

std::string crosscheck_json(const H1CrossCheck& check) {
  ordered_json doc;
  doc["applicable"] = check.applicable;
  if (!check.applicable) doc["reason"] = check.reason;
  doc["rank"] = check.rank;
  doc["components"] = check.components;
  doc["h1_dimension"] = check.h1_dimension;
  doc["solution_dimension"] = check.solution_dimension;
  doc["class_dimension"] = check.class_dimension;
  doc["group_sizes_match"] = check.group_sizes_match;
  doc["class_count_matches"] = check.class_count_matches;
  doc["passed"] = check.passed();
  return dump(doc);
}

std::string restriction_json(const MomentGraph& g, const Restriction& r) {
  ordered_json doc;
  doc["target_rank"] = r.target_rank;
  ordered_json degrees = ordered_json::array();
  for (std::size_t d = 0; d < r.hilbert.dims.size(); ++d) {
    ordered_json entry;
    entry["d"] = d;
    entry["dim"] = r.hilbert.dims[d];
    ordered_json basis = ordered_json::array();
    for (const auto& values : r.bases[d]) {
      ordered_json cls = ordered_json::object();
      for (std::size_t v = 0; v < values.size(); ++v) cls[g.vertex(v)] = values[v].to_string();
      basis.push_back(std::move(cls));
    }
    entry["basis"] = std::move(basis);
    degrees.push_back(std::move(entry));
  }
  doc["degrees"] = std::move(degrees);
  doc["numerator"] = r.hilbert.numerator;
  doc["stabilized"] = r.hilbert.stabilized;
  return dump(doc);
}

std::string ring_table_json(const RingTable& table) {
  ordered_json doc;
  ordered_json gens = ordered_json::array();
  for (std::size_t a = 0; a < table.size(); ++a) {
    const auto& g = table.generators[a];
    ordered_json entry;
    entry["name"] = "g" + std::to_string(a);
    entry["degree"] = g.degree();
    entry["class"] = class_json(g.graph(), g.values());
    gens.push_back(std::move(entry));
  }
  doc["generators"] = std::move(gens);
  ordered_json products = ordered_json::array();
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = a; b < table.size(); ++b) {
      ordered_json entry;
      entry["left"] = "g" + std::to_string(a);
      entry["right"] = "g" + std::to_string(b);
      ordered_json terms = ordered_json::array();
      for (std::size_t c = 0; c < table.size(); ++c)
        if (table.products[a][b].get(c)) terms.push_back("g" + std::to_string(c));
      entry["product"] = std::move(terms);
      products.push_back(std::move(entry));
    }
  doc["products"] = std::move(products);
  return dump(doc);
}

}  // namespace gkm2
