#include "gkm2/symdiff.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

namespace gkm2 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<F2Vector> solve_with(Kernel k, const F2Matrix& m, const F2Vector& b) {
  return k == Kernel::packed ? solve(m, b) : naive::solve(m, b);
}

std::vector<F2Vector> kernel_with(Kernel k, const F2Matrix& m) {
  return k == Kernel::packed ? kernel_basis(m) : naive::kernel_basis(m);
}

// Components with the lexicographically least id of each as root.
struct Layout {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> roots;
};

Layout layout_of(const SymDiffInstance& inst) {
  const MomentGraph g(1, inst.vertices(), [&] {
    std::vector<Edge> edges;
    for (const auto& e : inst.edges()) edges.push_back({e.u, e.v, LinearForm::variable(1, 1)});
    return edges;
  }());
  Layout out;
  out.components = g.components();
  for (const auto& comp : out.components)
    out.roots.push_back(*std::min_element(comp.begin(), comp.end(), [&](std::size_t a, std::size_t b) {
      return inst.vertices()[a] < inst.vertices()[b];
    }));
  return out;
}

std::size_t global_root(const SymDiffInstance& inst) {
  const auto& ids = inst.vertices();
  return static_cast<std::size_t>(std::min_element(ids.begin(), ids.end()) - ids.begin());
}

Subset subset_at(const F2Vector& x, std::size_t vertex, std::size_t n) {
  Subset s;
  for (std::size_t k = 0; k < n; ++k)
    if (x.get(vertex * n + k)) s.push_back(static_cast<int>(k) + 1);
  return s;
}

std::vector<Subset> assignment_of(const F2Vector& x, std::size_t vertices, std::size_t n) {
  std::vector<Subset> out;
  for (std::size_t v = 0; v < vertices; ++v) out.push_back(subset_at(x, v, n));
  return out;
}

std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (int k : s) m |= std::uint64_t{1} << (k - 1);
  return m;
}

// Relaxed unknowns: alpha_v[k] at v * n + k, then lambda_e at V * n + e.
F2Matrix relaxed_system(const SymDiffInstance& inst) {
  const std::size_t n = inst.universe();
  const std::size_t vars = inst.vertices().size() * n + inst.edges().size();
  F2Matrix m(0, vars);
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    const auto& edge = inst.edges()[e];
    const std::uint64_t label = mask_of(edge.subset);
    for (std::size_t k = 0; k < n; ++k) {
      F2Vector row(vars);
      row.flip(edge.u * n + k);
      row.flip(edge.v * n + k);
      if ((label >> k) & 1U) row.set(inst.vertices().size() * n + e);
      m.append_row(row);
    }
  }
  return m;
}

RelaxedSolution relaxed_from(const SymDiffInstance& inst, const F2Vector& x) {
  const std::size_t n = inst.universe();
  const std::size_t offset = inst.vertices().size() * n;
  RelaxedSolution s;
  s.assignment = assignment_of(x, inst.vertices().size(), n);
  s.exact = true;
  for (std::size_t e = 0; e < inst.edges().size(); ++e) {
    s.scalars.push_back(x.get(offset + e));
    s.exact = s.exact && s.scalars.back();
  }
  return s;
}

}  // namespace

SymDiffInstance::SymDiffInstance(std::size_t universe, std::vector<std::string> vertices,
                                 std::vector<SymDiffEdge> edges)
    : universe_(universe), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (universe_ == 0 || universe_ > LinearForm::kMaxRank)
    throw GraphError("universe must be between 1 and " + std::to_string(LinearForm::kMaxRank));
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!seen.emplace(vertices_[i], i).second)
      throw GraphError("duplicate vertex id '" + vertices_[i] + "'");
  for (auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loop at vertex '" + vertices_[e.u] + "'");
    if (e.subset.empty()) throw GraphError("edge label must be a nonempty subset");
    std::sort(e.subset.begin(), e.subset.end());
    if (std::adjacent_find(e.subset.begin(), e.subset.end()) != e.subset.end())
      throw GraphError("repeated element in edge label");
    for (int k : e.subset)
      if (k < 1 || static_cast<std::size_t>(k) > universe_)
        throw GraphError("label element " + std::to_string(k) + " outside the universe");
  }
}

std::size_t SymDiffInstance::index_of(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw GraphError("unknown vertex '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

MomentGraph SymDiffInstance::to_moment_graph() const {
  std::vector<Edge> edges;
  for (const auto& e : edges_) edges.push_back({e.u, e.v, LinearForm(universe_, e.subset)});
  return MomentGraph(universe_, vertices_, std::move(edges));
}

SymDiffInstance instance_from_graph(const MomentGraph& g) {
  std::vector<SymDiffEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight.support()});
  return SymDiffInstance(g.rank(), g.vertices(), std::move(edges));
}

SymDiffInstance parse_instance(std::string_view document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& err) {
    throw GraphError(std::string("malformed JSON: ") + err.what());
  }
  try {
    if (!doc.is_object()) throw GraphError("instance document must be an object");
    for (const char* key : {"universe", "vertices", "edges"})
      if (!doc.contains(key)) throw GraphError(std::string("missing key '") + key + "'");
    if (!doc.at("universe").is_number_integer() || doc.at("universe").get<long long>() < 1)
      throw GraphError("universe must be a positive integer");
    const auto universe = doc.at("universe").get<std::size_t>();
    std::vector<std::string> vertices;
    std::map<std::string, std::size_t> index;
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_string()) throw GraphError("vertex ids must be strings");
      index.emplace(v.get<std::string>(), vertices.size());
      vertices.push_back(v.get<std::string>());
    }
    std::vector<SymDiffEdge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("subset"))
        throw GraphError("edge must have keys u, v, subset");
      const auto lookup = [&](const ordered_json& node) {
        if (!node.is_string()) throw GraphError("edge endpoints must be strings");
        auto it = index.find(node.get<std::string>());
        if (it == index.end())
          throw GraphError("unknown vertex '" + node.get<std::string>() + "' in edge");
        return it->second;
      };
      Subset subset;
      for (const auto& k : e.at("subset")) {
        if (!k.is_number_integer()) throw GraphError("subset entries must be integers");
        subset.push_back(k.get<int>());
      }
      edges.push_back({lookup(e.at("u")), lookup(e.at("v")), std::move(subset)});
    }
    return SymDiffInstance(universe, std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& err) {
    throw GraphError(std::string("schema error: ") + err.what());
  }
}

std::string serialize_instance(const SymDiffInstance& inst) {
  ordered_json doc;
  doc["universe"] = inst.universe();
  doc["vertices"] = inst.vertices();
  ordered_json edges = ordered_json::array();
  for (const auto& e : inst.edges()) {
    ordered_json entry;
    entry["u"] = inst.vertices()[e.u];
    entry["v"] = inst.vertices()[e.v];
    entry["subset"] = e.subset;
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

ExactResult solve_exact(const SymDiffInstance& inst, Kernel kernel) {
  const std::size_t n = inst.universe();
  const std::size_t vertices = inst.vertices().size();
  const Layout layout = layout_of(inst);

  F2Matrix m(0, vertices * n);
  std::vector<bool> rhs;
  for (const auto& e : inst.edges()) {
    const std::uint64_t label = mask_of(e.subset);
    for (std::size_t k = 0; k < n; ++k) {
      F2Vector row(vertices * n);
      row.flip(e.u * n + k);
      row.flip(e.v * n + k);
      m.append_row(row);
      rhs.push_back(((label >> k) & 1U) != 0);
    }
  }
  // Pin each component root to the empty set.
  for (std::size_t root : layout.roots) {
    for (std::size_t k = 0; k < n; ++k) {
      F2Vector row(vertices * n);
      row.set(root * n + k);
      m.append_row(row);
      rhs.push_back(false);
    }
  }
  F2Vector b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b.set(i, rhs[i]);

  ExactResult result;
  result.components = layout.components.size();
  result.extra_component_freedom = result.components == 0 ? 0 : result.components - 1;
  const auto x = solve_with(kernel, m, b);
  if (!x) return result;
  result.consistent = true;
  result.assignment = assignment_of(*x, vertices, n);
  result.unique_up_to_equivalence = result.components == 1;
  return result;
}

RelaxedResult solve_relaxed(const SymDiffInstance& inst, Kernel kernel) {
  const std::size_t n = inst.universe();
  const std::size_t vertices = inst.vertices().size();
  const F2Matrix system = relaxed_system(inst);
  const std::size_t vars = system.cols();

  RelaxedResult result;
  const auto basis = kernel_with(kernel, system);
  result.solution_dimension = basis.size();
  result.trivial_dimension = vertices == 0 ? 0 : n;
  result.class_dimension = result.solution_dimension - result.trivial_dimension;
  result.components = layout_of(inst).components.size();
  result.component_freedom = result.components == 0 ? 0 : n * (result.components - 1);
  for (const auto& v : basis) result.basis.push_back(relaxed_from(inst, v));

  if (vertices > 0) {
    F2Vector ones(vars);
    for (std::size_t i = 0; i < vertices * n; ++i) ones.set(i);
    result.complement_shift = system.multiply(ones).is_zero();
  }

  // Representatives: solutions with the global root pinned to the empty set.
  if (result.class_dimension <= RelaxedResult::kMaxListedDimension && vertices > 0) {
    F2Matrix pinned = system;
    const std::size_t root = global_root(inst);
    for (std::size_t k = 0; k < n; ++k) {
      F2Vector row(vars);
      row.set(root * n + k);
      pinned.append_row(row);
    }
    const auto reps = kernel_with(kernel, pinned);
    if (reps.size() != result.class_dimension)
      throw std::logic_error("pinned solution space has unexpected dimension");
    const std::size_t count = std::size_t{1} << reps.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      F2Vector x(vars);
      for (std::size_t j = 0; j < reps.size(); ++j)
        if ((mask >> j) & 1U) x ^= reps[j];
      result.representatives.push_back(relaxed_from(inst, x));
    }
    result.representatives_listed = true;
  }
  return result;
}

bool satisfies_exact(const SymDiffInstance& inst, const std::vector<Subset>& assignment) {
  if (assignment.size() != inst.vertices().size()) return false;
  for (const auto& e : inst.edges()) {
    Subset diff;
    std::set_symmetric_difference(assignment[e.u].begin(), assignment[e.u].end(),
                                  assignment[e.v].begin(), assignment[e.v].end(),
                                  std::back_inserter(diff));
    if (diff != e.subset) return false;
  }
  return true;
}

bool satisfies_relaxed(const SymDiffInstance& inst, const std::vector<Subset>& assignment,
                       const std::vector<bool>& scalars) {
  if (assignment.size() != inst.vertices().size() || scalars.size() != inst.edges().size())
    return false;
  for (std::size_t k = 0; k < inst.edges().size(); ++k) {
    const auto& e = inst.edges()[k];
    Subset diff;
    std::set_symmetric_difference(assignment[e.u].begin(), assignment[e.u].end(),
                                  assignment[e.v].begin(), assignment[e.v].end(),
                                  std::back_inserter(diff));
    if (diff != (scalars[k] ? e.subset : Subset{})) return false;
  }
  return true;
}

bool equivalent(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::uint64_t shift = mask_of(a.front()) ^ mask_of(b.front());
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((mask_of(a[i]) ^ mask_of(b[i])) != shift) return false;
  return true;
}

H1CrossCheck crosscheck_h1(const SymDiffInstance& inst) {
  H1CrossCheck report;
  report.rank = inst.universe();
  const MomentGraph g = inst.to_moment_graph();
  const ValidationReport validation = validate_mod2_gkm(g);
  if (!validation.valid) {
    report.reason = "labels do not form a mod-2 GKM graph: " + validation.violations.front().vertex +
                    " " + validation.violations.front().description;
    return report;
  }
  report.applicable = true;
  report.components = g.components().size();
  report.h1_dimension = CohomologyEngine(g, Mode::gkm).dimension(1);
  const RelaxedResult relaxed = solve_relaxed(inst);
  report.solution_dimension = relaxed.solution_dimension;
  report.class_dimension = relaxed.class_dimension;
  report.group_sizes_match = report.h1_dimension == report.solution_dimension;
  report.class_count_matches =
      report.h1_dimension >= report.rank && relaxed.class_dimension == report.h1_dimension - report.rank;
  return report;
}

}  // namespace gkm2
