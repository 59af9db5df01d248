#include "gkm2/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkm2/cohomology.hpp"
#include "gkm2/examples.hpp"
#include "gkm2/moment_graph.hpp"
#include "gkm2/report.hpp"
#include "gkm2/symdiff.hpp"

namespace gkm2::cli {

namespace {

/// Input problems: unreadable files, malformed documents, bad arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

MomentGraph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

Mode mode_from(const std::string& text) {
  try {
    return parse_mode(text);
  } catch (const std::exception&) {
    throw InputError("unknown mode '" + text + "' (expected gkm or gh)");
  }
}

Kernel kernel_from(const std::string& text) {
  if (text == "packed") return Kernel::packed;
  if (text == "naive") return Kernel::naive;
  throw InputError("unknown kernel '" + text + "' (expected packed or naive)");
}

std::string subset_text(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::size_t id_width(const std::vector<std::string>& ids) {
  std::size_t w = 0;
  for (const auto& id : ids) w = std::max(w, id.size());
  return w;
}

// --- text renderings ---------------------------------------------------

void print_validation(std::ostream& out, const ValidationReport& r) {
  out << "mode: " << to_string(r.mode) << "\n";
  out << "valid: " << (r.valid ? "yes" : "no") << "\n";
  if (r.violations.empty()) return;
  out << "violations:\n";
  for (const auto& v : r.violations)
    out << "  " << (v.vertex.empty() ? "-" : v.vertex) << "  " << v.description << "\n";
}

void print_hilbert(std::ostream& out, const HilbertData& h) {
  out << std::setw(4) << "d" << std::setw(8) << "dim" << std::setw(11) << "numerator" << "\n";
  for (std::size_t d = 0; d < h.dims.size(); ++d)
    out << std::setw(4) << d << std::setw(8) << h.dims[d] << std::setw(11) << h.numerator[d] << "\n";
  out << "stabilized: " << (h.stabilized ? "yes" : "no") << "\n";
}

void print_sequence(std::ostream& out, const std::string& label, const std::vector<std::size_t>& xs) {
  out << label << ":";
  for (std::size_t x : xs) out << " " << x;
  out << "\n";
}

void print_class(std::ostream& out, const MomentGraph& g, const std::vector<Polynomial>& values) {
  const std::size_t w = id_width(g.vertices());
  for (std::size_t v = 0; v < values.size(); ++v)
    out << "    " << std::left << std::setw(static_cast<int>(w)) << g.vertex(v) << std::right
        << "  " << values[v].to_string() << "\n";
}

void print_assignment(std::ostream& out, const SymDiffInstance& inst,
                      const std::vector<Subset>& assignment) {
  const std::size_t w = id_width(inst.vertices());
  for (std::size_t v = 0; v < assignment.size(); ++v)
    out << "    " << std::left << std::setw(static_cast<int>(w)) << inst.vertices()[v] << std::right
        << "  " << subset_text(assignment[v]) << "\n";
}

void print_crosscheck(std::ostream& out, const H1CrossCheck& c) {
  out << "H^1 cross-check: ";
  if (!c.applicable) {
    out << "not applicable (" << c.reason << ")\n";
    return;
  }
  out << (c.passed() ? "passed" : "FAILED") << "\n";
  out << "  dim H^1 = " << c.h1_dimension << ", relaxed solution dimension = " << c.solution_dimension
      << ", class dimension = " << c.class_dimension << " (rank " << c.rank << ")\n";
}

// --- the map argument of `project` -------------------------------------

F2Matrix parse_map(const std::string& arg) {
  const bool inline_json = arg.find_first_not_of(" \t\n") != std::string::npos &&
                           arg[arg.find_first_not_of(" \t\n")] == '[';
  const std::string text = inline_json ? arg : read_input(arg);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed map JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw InputError("map must be a nonempty array of rows");
  const std::size_t cols = doc[0].is_array() ? doc[0].size() : 0;
  if (cols == 0) throw InputError("map rows must be nonempty arrays");
  F2Matrix m(doc.size(), cols);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols) throw InputError("map rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& x = doc[i][j];
      if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
        throw InputError("map entries must be 0 or 1");
      if (x.get<int>() == 1) m.set(i, j);
    }
  }
  return m;
}

// --- commands -----------------------------------------------------------

struct Common {
  std::string input;
  std::string mode = "gkm";
  std::optional<unsigned> max_degree;
  bool json = false;
  std::string kernel = "packed";
};

unsigned degree_or_default(const Common& c, const MomentGraph& g) {
  return c.max_degree ? *c.max_degree : default_max_degree(g);
}

int cmd_validate(const Common& c, std::ostream& out) {
  const MomentGraph g = load_graph(c.input);
  const ValidationReport r = validate(g, mode_from(c.mode));
  if (c.json)
    out << validation_json(r);
  else
    print_validation(out, r);
  return r.valid ? kOk : kInvalid;
}

int cmd_cohom(const Common& c, bool with_basis, std::ostream& out) {
  const MomentGraph g = load_graph(c.input);
  const CohomologyEngine engine(g, mode_from(c.mode), kernel_from(c.kernel));
  const unsigned D = degree_or_default(c, g);
  std::vector<GradedBasis> bases;
  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= D; ++d) {
    if (with_basis) {
      bases.push_back(engine.graded_basis(d));
      dims.push_back(bases.back().dimension());
    } else {
      dims.push_back(engine.dimension(d));
    }
  }
  const HilbertData h = make_hilbert(std::move(dims), g.rank());
  std::optional<std::vector<std::size_t>> betti;
  if (h.stabilized) betti = engine.ordinary_betti(D);

  if (c.json) {
    out << cohomology_json(h, with_basis ? &bases : nullptr, betti);
    return kOk;
  }
  out << "graph: " << g.vertex_count() << " vertices, " << g.edges().size() << " edges, rank "
      << g.rank() << ", mode " << c.mode << "\n";
  print_hilbert(out, h);
  if (betti)
    print_sequence(out, "betti", *betti);
  else
    out << "betti: not stabilized by degree " << D << "\n";
  for (const auto& b : bases) {
    out << "H^" << b.degree << " basis (" << b.dimension() << "):\n";
    for (std::size_t k = 0; k < b.classes.size(); ++k) {
      out << "  c" << k << "\n";
      print_class(out, g, b.classes[k].values());
    }
  }
  return kOk;
}

int cmd_betti(const Common& c, std::ostream& out, std::ostream& err) {
  const MomentGraph g = load_graph(c.input);
  const CohomologyEngine engine(g, mode_from(c.mode), kernel_from(c.kernel));
  const unsigned D = degree_or_default(c, g);
  const HilbertData h = engine.hilbert(D);
  if (!h.stabilized) {
    err << "gkm2: Hilbert numerator not stabilized by degree " << D
        << "; truncated data follows, raise --max-degree\n";
    if (c.json)
      out << cohomology_json(h, nullptr, std::nullopt);
    else
      print_hilbert(out, h);
    return kPrecondition;
  }
  const auto betti = engine.ordinary_betti(D);
  if (c.json) {
    nlohmann::ordered_json doc;
    doc["max_degree"] = D;
    doc["betti"] = betti;
    doc["total"] = std::accumulate(betti.begin(), betti.end(), std::size_t{0});
    out << doc.dump(2) << "\n";
  } else {
    print_sequence(out, "betti", betti);
    out << "total: " << std::accumulate(betti.begin(), betti.end(), std::size_t{0}) << "\n";
  }
  return kOk;
}

struct ExampleArgs {
  std::string name;
  int n = 0;
  int k = 0;
  int d = 0;
  std::string output;
  std::vector<std::string> factors;
};

int cmd_example(const ExampleArgs& a, std::ostream& out) {
  examples::Family family;
  try {
    family = examples::parse_family(a.name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  MomentGraph g;
  try {
    if (family == examples::Family::product) {
      if (a.factors.size() < 2) throw InputError("product needs at least two --factor graph files");
      g = load_graph(a.factors[0]);
      for (std::size_t i = 1; i < a.factors.size(); ++i) g = examples::product(g, load_graph(a.factors[i]));
    } else {
      examples::ExampleSpec spec;
      spec.family = family;
      spec.n = a.n;
      spec.k = a.k;
      spec.d = a.d;
      g = examples::make(spec);
    }
  } catch (const GraphError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::string doc = serialize_graph(g);
  if (a.output.empty()) {
    out << doc;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + a.output + "'");
    file << doc;
  }
  return kOk;
}

SymDiffInstance load_instance(const std::string& path) {
  const std::string text = read_input(path);
  // Graph documents are accepted too: labels are the weight supports.
  nlohmann::json probe;
  try {
    probe = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (probe.is_object() && probe.contains("rank") && !probe.contains("universe"))
    return instance_from_graph(parse_graph(text));
  return parse_instance(text);
}

int cmd_symdiff(const Common& c, bool relaxed, bool crosscheck, std::ostream& out) {
  const SymDiffInstance inst = load_instance(c.input);
  const Kernel kernel = kernel_from(c.kernel);
  if (c.json) {
    out << (relaxed ? relaxed_json(inst, solve_relaxed(inst, kernel))
                    : exact_json(inst, solve_exact(inst, kernel)));
    if (crosscheck) out << crosscheck_json(crosscheck_h1(inst));
    return kOk;
  }
  if (!relaxed) {
    const ExactResult r = solve_exact(inst, kernel);
    out << "exact system: " << (r.consistent ? "consistent" : "inconsistent") << "\n";
    out << "components: " << r.components << "\n";
    if (r.consistent) {
      out << "unique up to equivalence: " << (r.unique_up_to_equivalence ? "yes" : "no") << "\n";
      if (r.extra_component_freedom > 0)
        out << "extra per-component shifts: " << r.extra_component_freedom << "\n";
      out << "solution:\n";
      print_assignment(out, inst, r.assignment);
    }
  } else {
    const RelaxedResult r = solve_relaxed(inst, kernel);
    out << "relaxed system\n";
    out << "solution dimension: " << r.solution_dimension << "\n";
    out << "trivial dimension: " << r.trivial_dimension << "\n";
    out << "classes: " << r.class_count() << " (" << r.nontrivial_classes() << " nontrivial)\n";
    out << "components: " << r.components << "\n";
    if (r.component_freedom > 0) out << "per-component freedom: " << r.component_freedom << "\n";
    out << "complement shift is trivial: " << (r.complement_shift ? "yes" : "no") << "\n";
    if (r.representatives_listed) {
      for (std::size_t k = 1; k < r.representatives.size(); ++k) {
        const auto& rep = r.representatives[k];
        out << "class " << k << (rep.exact ? " (exact)" : "") << ":\n";
        print_assignment(out, inst, rep.assignment);
      }
    } else {
      out << "representatives not listed (class dimension above "
          << RelaxedResult::kMaxListedDimension << ")\n";
    }
  }
  if (crosscheck) print_crosscheck(out, crosscheck_h1(inst));
  return kOk;
}

int cmd_project(const Common& c, const std::string& map_arg, std::ostream& out) {
  const MomentGraph g = load_graph(c.input);
  const F2Matrix map = parse_map(map_arg);
  const CohomologyEngine engine(g, mode_from(c.mode), kernel_from(c.kernel));
  const unsigned D = degree_or_default(c, g);
  const Restriction r = engine.restrict_scalars(map, D);
  if (c.json) {
    out << restriction_json(g, r);
    return kOk;
  }
  out << "image of H^* under restriction to rank " << r.target_rank << "\n";
  out << std::setw(4) << "d" << std::setw(8) << "source" << std::setw(8) << "image" << "\n";
  for (unsigned d = 0; d <= D; ++d)
    out << std::setw(4) << d << std::setw(8) << engine.dimension(d) << std::setw(8)
        << r.hilbert.dims[d] << "\n";
  return kOk;
}

int cmd_oracle(const Common& c, std::ostream& out) {
  const MomentGraph g = load_graph(c.input);
  const Mode mode = mode_from(c.mode);
  const CohomologyEngine packed(g, mode, Kernel::packed);
  const CohomologyEngine naive(g, mode, Kernel::naive);
  const unsigned D = degree_or_default(c, g);
  std::size_t mismatches = 0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!c.json) out << std::setw(4) << "d" << std::setw(8) << "packed" << std::setw(8) << "naive" << "  basis\n";
  for (unsigned d = 0; d <= D; ++d) {
    const GradedBasis a = packed.graded_basis(d);
    const GradedBasis b = naive.graded_basis(d);
    const bool same_basis = a.coordinates == b.coordinates;
    const bool ok = a.dimension() == b.dimension() && same_basis;
    if (!ok) ++mismatches;
    if (c.json) {
      nlohmann::ordered_json row;
      row["d"] = d;
      row["packed"] = a.dimension();
      row["naive"] = b.dimension();
      row["same_basis"] = same_basis;
      rows.push_back(std::move(row));
    } else {
      out << std::setw(4) << d << std::setw(8) << a.dimension() << std::setw(8) << b.dimension()
          << "  " << (same_basis ? "same" : "DIFFERENT") << "\n";
    }
  }
  if (c.json) {
    nlohmann::ordered_json doc;
    doc["degrees"] = std::move(rows);
    doc["mismatches"] = mismatches;
    out << doc.dump(2) << "\n";
  } else {
    out << "mismatches: " << mismatches << "\n";
  }
  return mismatches == 0 ? kOk : kOracleMismatch;
}

int cmd_ringtable(const Common& c, std::ostream& out) {
  const MomentGraph g = load_graph(c.input);
  const CohomologyEngine engine(g, mode_from(c.mode), kernel_from(c.kernel));
  const RingTable t = engine.ring_table(degree_or_default(c, g));
  if (c.json) {
    out << ring_table_json(t);
    return kOk;
  }
  out << "generators:\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "  g" << i << " (degree " << t.generators[i].degree() << ")\n";
    print_class(out, g, t.generators[i].values());
  }
  out << "products modulo (x1..x" << g.rank() << "):\n";
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b) {
      std::string terms;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t.products[a][b].get(k)) terms += (terms.empty() ? "g" : " + g") + std::to_string(k);
      out << "  g" << a << " * g" << b << " = " << (terms.empty() ? "0" : terms) << "\n";
    }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant mod-2 cohomology of moment graphs", "gkm2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gkm2 1.0.0");

  Common common;
  bool with_basis = false;
  bool relaxed = false;
  bool crosscheck = false;
  std::string map_arg;
  ExampleArgs ex;

  const auto add_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", common.input, what + " ('-' reads standard input)")->required();
  };
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", common.mode, "gkm or gh")->capture_default_str();
  };
  const auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree,-D", common.max_degree, "highest degree computed (default 2n+2)");
  };
  const auto add_kernel = [&](CLI::App* sub) {
    sub->add_option("--kernel", common.kernel, "packed or naive")->capture_default_str();
  };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", common.json, "JSON output"); };

  auto* validate_cmd = app.add_subcommand("validate", "check the mod-2 GKM or GH hypotheses");
  add_input(validate_cmd, "graph JSON");
  add_mode(validate_cmd);
  add_json(validate_cmd);

  auto* cohom_cmd = app.add_subcommand("cohom", "graded dimensions, Hilbert numerator, bases");
  add_input(cohom_cmd, "graph JSON");
  add_degree(cohom_cmd);
  add_mode(cohom_cmd);
  add_kernel(cohom_cmd);
  cohom_cmd->add_flag("--basis", with_basis, "include canonical bases");
  add_json(cohom_cmd);

  auto* betti_cmd = app.add_subcommand("betti", "ordinary mod-2 Betti numbers");
  add_input(betti_cmd, "graph JSON");
  add_degree(betti_cmd);
  add_mode(betti_cmd);
  add_kernel(betti_cmd);
  add_json(betti_cmd);

  auto* example_cmd = app.add_subcommand("example", "emit a generated graph");
  example_cmd->add_option("name", ex.name,
                          "complete, hypercube, permutahedron, johnson, gh_cycle, cp2_bad, product")
      ->required();
  example_cmd->add_option("--n", ex.n, "size parameter");
  example_cmd->add_option("--k", ex.k, "subset size (johnson)");
  example_cmd->add_option("--d", ex.d, "cycle length (gh_cycle)");
  example_cmd->add_option("-o,--output", ex.output, "write to a file instead of standard output");
  example_cmd->add_option("--factor", ex.factors, "graph file; repeat for each factor (product)");

  auto* symdiff_cmd = app.add_subcommand("symdiff", "solve a symmetric-difference system");
  add_input(symdiff_cmd, "instance or graph JSON");
  symdiff_cmd->add_flag("--relaxed", relaxed, "allow each edge to be satisfied by the empty set");
  symdiff_cmd->add_flag("--crosscheck", crosscheck, "compare with degree-one cohomology");
  add_kernel(symdiff_cmd);
  add_json(symdiff_cmd);

  auto* project_cmd = app.add_subcommand("project", "image of H^* under a change of scalars");
  add_input(project_cmd, "graph JSON");
  project_cmd->add_option("--map", map_arg, "m x n 0/1 matrix as JSON, inline or a file")->required();
  add_degree(project_cmd);
  add_mode(project_cmd);
  add_kernel(project_cmd);
  add_json(project_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "compare the packed and naive kernels");
  add_input(oracle_cmd, "graph JSON");
  add_degree(oracle_cmd);
  add_mode(oracle_cmd);
  add_json(oracle_cmd);

  auto* ring_cmd = app.add_subcommand("ringtable", "products of module generators");
  add_input(ring_cmd, "graph JSON");
  add_degree(ring_cmd);
  add_mode(ring_cmd);
  add_kernel(ring_cmd);
  add_json(ring_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*validate_cmd) return cmd_validate(common, out);
    if (*cohom_cmd) return cmd_cohom(common, with_basis, out);
    if (*betti_cmd) return cmd_betti(common, out, err);
    if (*example_cmd) return cmd_example(ex, out);
    if (*symdiff_cmd) return cmd_symdiff(common, relaxed, crosscheck, out);
    if (*project_cmd) return cmd_project(common, map_arg, out);
    if (*oracle_cmd) return cmd_oracle(common, out);
    if (*ring_cmd) return cmd_ringtable(common, out);
  } catch (const InputError& e) {
    err << "gkm2: " << e.what() << "\n";
    return kParseError;
  } catch (const GraphError& e) {
    err << "gkm2: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidGraph& e) {
    err << "gkm2: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotStabilized& e) {
    err << "gkm2: " << e.what() << "; raise --max-degree\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "gkm2: " << e.what() << "\n";
    return kPrecondition;
  }
  return kParseError;
}

}  // namespace gkm2::cli
