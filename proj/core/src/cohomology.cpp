#include "gkm2/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace gkm2 {

namespace {

struct DegreeSpace {
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t> index;
};

DegreeSpace make_space(std::size_t rank, unsigned d) {
  DegreeSpace s;
  s.basis = monomial_basis(rank, d);
  for (std::size_t i = 0; i < s.basis.size(); ++i) s.index.emplace(s.basis[i], i);
  return s;
}

// lists[t] = indices of the basis monomials whose image contains basis
// monomial t. Images stay homogeneous of the same degree.
template <typename Image>
std::vector<std::vector<std::size_t>> transpose_images(const DegreeSpace& s, Image image) {
  std::vector<std::vector<std::size_t>> lists(s.basis.size());
  for (std::size_t m = 0; m < s.basis.size(); ++m) {
    const Polynomial img = image(Polynomial::from_monomial(s.basis[m]));
    for (const auto& term : img.terms()) lists[s.index.at(term)].push_back(m);
  }
  return lists;
}

struct WeightTables {
  std::vector<std::vector<std::size_t>> mod_alpha;
  std::vector<std::vector<std::size_t>> mod_alpha_square;
};

std::vector<F2Vector> kernel_dispatch(Kernel k, const F2Matrix& m) {
  return k == Kernel::packed ? kernel_basis(m) : naive::kernel_basis(m);
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CohomologyClass::CohomologyClass(std::shared_ptr<const MomentGraph> graph, unsigned degree,
                                 std::vector<Polynomial> values)
    : graph_(std::move(graph)), degree_(degree), values_(std::move(values)) {
  if (!graph_) throw std::invalid_argument("cohomology class needs a graph");
  if (values_.size() != graph_->vertex_count())
    throw std::invalid_argument("cohomology class needs one value per vertex");
  for (const auto& p : values_) {
    if (p.rank() != graph_->rank()) throw std::invalid_argument("class value has wrong rank");
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<int>(degree_)))
      throw std::invalid_argument("class value is not homogeneous of degree " +
                                  std::to_string(degree_));
  }
}

CohomologyClass CohomologyClass::zero(std::shared_ptr<const MomentGraph> graph, unsigned degree) {
  const std::size_t rank = graph->rank();
  const std::size_t count = graph->vertex_count();
  return CohomologyClass(std::move(graph), degree, std::vector<Polynomial>(count, Polynomial(rank)));
}

CohomologyClass CohomologyClass::unit(std::shared_ptr<const MomentGraph> graph) {
  const std::size_t rank = graph->rank();
  const std::size_t count = graph->vertex_count();
  return CohomologyClass(std::move(graph), 0,
                         std::vector<Polynomial>(count, Polynomial::constant(rank)));
}

bool CohomologyClass::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

HilbertData make_hilbert(std::vector<std::size_t> dims, std::size_t rank) {
  HilbertData h;
  h.rank = rank;
  h.max_degree = dims.empty() ? 0 : static_cast<unsigned>(dims.size() - 1);
  h.dims = std::move(dims);
  h.numerator.assign(h.dims.size(), 0);
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    long long c = 0;
    for (std::size_t j = 0; j <= std::min(k, rank); ++j) {
      const long long term = binomial(static_cast<long long>(rank), static_cast<long long>(j)) *
                             static_cast<long long>(h.dims[k - j]);
      c += (j % 2 == 0) ? term : -term;
    }
    h.numerator[k] = c;
  }
  const std::size_t tail = (h.max_degree + 1) / 2;
  h.stabilized = std::all_of(h.numerator.end() - static_cast<std::ptrdiff_t>(tail),
                             h.numerator.end(), [](long long c) { return c == 0; });
  return h;
}

CohomologyEngine::CohomologyEngine(MomentGraph graph, Mode mode, Kernel kernel)
    : graph_(std::make_shared<const MomentGraph>(std::move(graph))), mode_(mode), kernel_(kernel) {
  ValidationReport report = validate(*graph_, mode_);
  if (!report.valid) {
    std::string what = "graph is not a valid mod-2 " + std::string(to_string(mode_)) + " graph";
    if (!report.violations.empty())
      what += ": " + report.violations.front().vertex + " " + report.violations.front().description;
    throw InvalidGraph(what, std::move(report));
  }
  for (const auto& weight : graph_->distinct_weights())
    components_.push_back(alpha_components(*graph_, weight));
}

std::size_t CohomologyEngine::unknowns(unsigned d) const {
  return graph_->vertex_count() * monomial_count(graph_->rank(), d);
}

F2Matrix CohomologyEngine::constraints(unsigned d) const {
  const std::size_t n = graph_->rank();
  const DegreeSpace space = make_space(n, d);
  const std::size_t nb = space.basis.size();
  F2Matrix m(0, unknowns(d));
  const auto& edges = graph_->edges();

  // Flatten components in discovery order: by their first edge.
  std::vector<const AlphaComponent*> order;
  for (const auto& per_weight : components_)
    for (const auto& comp : per_weight) order.push_back(&comp);
  std::sort(order.begin(), order.end(), [](const AlphaComponent* a, const AlphaComponent* b) {
    return a->edges.front() < b->edges.front();
  });

  std::map<LinearForm, WeightTables> tables;
  for (const AlphaComponent* comp : order) {
    const LinearForm& alpha = comp->weight;
    auto [it, fresh] = tables.try_emplace(alpha);
    WeightTables& t = it->second;
    if (fresh)
      t.mod_alpha = transpose_images(space, [&](const Polynomial& p) { return reduce_mod_linear(p, alpha); });

    for (std::size_t e : comp->tree_edges) {
      const std::size_t u = edges[e].u;
      const std::size_t v = edges[e].v;
      for (const auto& sources : t.mod_alpha) {
        if (sources.empty()) continue;
        F2Vector row(m.cols());
        for (std::size_t s : sources) {
          row.flip(u * nb + s);
          row.flip(v * nb + s);
        }
        m.append_row(row);
      }
    }

    if (comp->local_degree == 2 && d >= 1) {
      if (t.mod_alpha_square.empty())
        t.mod_alpha_square = transpose_images(
            space, [&](const Polynomial& p) { return residue_mod_linear_square(p, alpha).terms; });
      for (const auto& sources : t.mod_alpha_square) {
        if (sources.empty()) continue;
        F2Vector row(m.cols());
        for (std::size_t v : comp->vertices)
          for (std::size_t s : sources) row.flip(v * nb + s);
        m.append_row(row);
      }
    }
  }
  return m;
}

std::size_t CohomologyEngine::rank_of(const F2Matrix& m) const {
  return kernel_ == Kernel::packed ? rank(m) : naive::rank(m);
}

std::vector<F2Vector> CohomologyEngine::kernel_of(const F2Matrix& m) const {
  return kernel_dispatch(kernel_, m);
}

std::vector<F2Vector> CohomologyEngine::span_of(std::span<const F2Vector> vectors,
                                                std::size_t size) const {
  if (kernel_ == Kernel::packed) return span_basis(vectors, size);
  const F2Matrix reduced = naive::rref(F2Matrix::from_rows(vectors, size));
  std::vector<F2Vector> out;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    F2Vector row = reduced.row(r);
    if (!row.is_zero()) out.push_back(std::move(row));
  }
  return out;
}

CohomologyClass CohomologyEngine::from_coordinates(unsigned d, const F2Vector& coords) const {
  const std::size_t n = graph_->rank();
  const auto basis = monomial_basis(n, d);
  const std::size_t nb = basis.size();
  if (coords.size() != graph_->vertex_count() * nb)
    throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Polynomial> values;
  values.reserve(graph_->vertex_count());
  for (std::size_t v = 0; v < graph_->vertex_count(); ++v) {
    std::vector<Monomial> terms;
    for (std::size_t k = 0; k < nb; ++k)
      if (coords.get(v * nb + k)) terms.push_back(basis[k]);
    values.emplace_back(n, std::move(terms));
  }
  return CohomologyClass(graph_, d, std::move(values));
}

F2Vector CohomologyEngine::coordinates(const CohomologyClass& c) const {
  const DegreeSpace space = make_space(graph_->rank(), c.degree());
  const std::size_t nb = space.basis.size();
  if (c.values().size() != graph_->vertex_count())
    throw std::invalid_argument("class belongs to a different graph");
  F2Vector out(graph_->vertex_count() * nb);
  for (std::size_t v = 0; v < c.values().size(); ++v)
    for (const auto& term : c.at(v).terms()) out.set(v * nb + space.index.at(term));
  return out;
}

GradedBasis CohomologyEngine::graded_basis(unsigned d) const {
  GradedBasis b;
  b.degree = d;
  b.coordinates = kernel_of(constraints(d));
  for (const auto& coords : b.coordinates) b.classes.push_back(from_coordinates(d, coords));
  return b;
}

std::size_t CohomologyEngine::dimension(unsigned d) const {
  return unknowns(d) - rank_of(constraints(d));
}

HilbertData CohomologyEngine::hilbert(unsigned max_degree) const {
  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= max_degree; ++d) dims.push_back(dimension(d));
  return make_hilbert(std::move(dims), graph_->rank());
}

std::vector<F2Vector> CohomologyEngine::ideal_part(const GradedBasis& lower, unsigned d) const {
  const std::size_t n = graph_->rank();
  std::vector<F2Vector> out;
  for (const auto& c : lower.classes) {
    for (std::size_t i = 1; i <= n; ++i) {
      const Polynomial x = Polynomial::variable(n, static_cast<int>(i));
      std::vector<Polynomial> values;
      for (const auto& p : c.values()) values.push_back(p * x);
      out.push_back(coordinates(CohomologyClass(graph_, d, std::move(values))));
    }
  }
  return out;
}

std::vector<GradedBasis> CohomologyEngine::stabilized_bases(unsigned max_degree) const {
  std::vector<GradedBasis> bases;
  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= max_degree; ++d) {
    bases.push_back(graded_basis(d));
    dims.push_back(bases.back().dimension());
  }
  if (!make_hilbert(std::move(dims), graph_->rank()).stabilized)
    throw NotStabilized("Hilbert numerator has not stabilized by degree " +
                        std::to_string(max_degree));
  return bases;
}

std::vector<std::size_t> CohomologyEngine::ordinary_betti(unsigned max_degree) const {
  const auto bases = stabilized_bases(max_degree);
  std::vector<std::size_t> betti = {bases[0].dimension()};
  for (unsigned d = 1; d <= max_degree; ++d) {
    const auto ideal = ideal_part(bases[d - 1], d);
    betti.push_back(bases[d].dimension() - span_of(ideal, unknowns(d)).size());
  }
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

RingTable CohomologyEngine::ring_table(unsigned max_degree) const {
  const auto bases = stabilized_bases(max_degree);

  // Per degree: canonical basis, ideal spanning set, chosen generators.
  std::vector<std::vector<F2Vector>> ideals(max_degree + 1);
  std::vector<std::vector<std::size_t>> generators_by_degree(max_degree + 1);
  RingTable table;
  std::vector<F2Vector> generator_coords;
  std::vector<unsigned> generator_degree;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const GradedBasis& current = bases[d];
    if (d > 0) ideals[d] = span_of(ideal_part(bases[d - 1], d), unknowns(d));
    std::vector<F2Vector> spanned = ideals[d];
    std::size_t reached = spanned.size();
    for (std::size_t k = 0; k < current.classes.size(); ++k) {
      spanned.push_back(current.coordinates[k]);
      const std::size_t r = span_of(spanned, unknowns(d)).size();
      if (r == reached) {
        spanned.pop_back();
        continue;
      }
      reached = r;
      generators_by_degree[d].push_back(table.generators.size());
      table.generators.push_back(current.classes[k]);
      generator_coords.push_back(current.coordinates[k]);
      generator_degree.push_back(d);
    }
  }

  const std::size_t g = table.generators.size();
  table.products.assign(g, std::vector<F2Vector>(g, F2Vector(g)));
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = a; b < g; ++b) {
      const unsigned e = generator_degree[a] + generator_degree[b];
      F2Vector expansion(g);
      if (e <= max_degree) {
        const CohomologyClass product = multiply_classes(table.generators[a], table.generators[b]);
        std::vector<F2Vector> columns;
        for (std::size_t idx : generators_by_degree[e]) columns.push_back(generator_coords[idx]);
        const std::size_t gen_count = columns.size();
        columns.insert(columns.end(), ideals[e].begin(), ideals[e].end());
        const std::size_t size = unknowns(e);
        const F2Matrix system = F2Matrix::from_rows(columns, size).transpose();
        const F2Vector rhs = coordinates(product);
        const auto x = columns.empty()
                           ? (rhs.is_zero() ? std::optional<F2Vector>(F2Vector(0)) : std::nullopt)
                           : (kernel_ == Kernel::packed ? solve(system, rhs) : naive::solve(system, rhs));
        if (!x) throw std::logic_error("product of generators left the computed ring");
        for (std::size_t k = 0; k < gen_count; ++k)
          if (x->get(k)) expansion.set(generators_by_degree[e][k]);
      } else {
        throw NotStabilized("product degree exceeds computed range");
      }
      table.products[a][b] = expansion;
      table.products[b][a] = expansion;
    }
  }
  return table;
}

Restriction CohomologyEngine::restrict_scalars(const F2Matrix& map, unsigned max_degree) const {
  const std::size_t n = graph_->rank();
  if (map.cols() != n)
    throw std::invalid_argument("projection has " + std::to_string(map.cols()) +
                                " columns, graph rank is " + std::to_string(n));
  const std::size_t m = map.rows();
  if (m == 0 || m > LinearForm::kMaxRank)
    throw std::invalid_argument("projection target rank out of range");

  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < m; ++i)
      if (map.get(i, j)) terms.push_back(Monomial::variable(m, static_cast<int>(i) + 1));
    images.emplace_back(m, std::move(terms));
  }

  Restriction out;
  out.target_rank = m;
  std::vector<std::size_t> dims;
  const std::size_t vertices = graph_->vertex_count();
  for (unsigned d = 0; d <= max_degree; ++d) {
    const DegreeSpace target = make_space(m, d);
    const std::size_t nb = target.basis.size();
    std::vector<F2Vector> image_coords;
    for (const auto& c : graded_basis(d).classes) {
      F2Vector coords(vertices * nb);
      for (std::size_t v = 0; v < vertices; ++v) {
        const Polynomial image = substitute(c.at(v), images, m);
        for (const auto& term : image.terms()) coords.set(v * nb + target.index.at(term));
      }
      image_coords.push_back(std::move(coords));
    }
    const auto reduced = span_of(image_coords, vertices * nb);
    dims.push_back(reduced.size());
    std::vector<std::vector<Polynomial>> basis;
    for (const auto& coords : reduced) {
      std::vector<Polynomial> values;
      for (std::size_t v = 0; v < vertices; ++v) {
        std::vector<Monomial> terms;
        for (std::size_t k = 0; k < nb; ++k)
          if (coords.get(v * nb + k)) terms.push_back(target.basis[k]);
        values.emplace_back(m, std::move(terms));
      }
      basis.push_back(std::move(values));
    }
    out.bases.push_back(std::move(basis));
  }
  out.hilbert = make_hilbert(std::move(dims), m);
  return out;
}

namespace {

using Terms = std::vector<std::uint32_t>;

// Index lists of the image of every basis monomial under f.
template <typename Image>
std::vector<Terms> forward_images(const DegreeSpace& s, Image f) {
  std::vector<Terms> out(s.basis.size());
  for (std::size_t m = 0; m < s.basis.size(); ++m) {
    const Polynomial image = f(Polynomial::from_monomial(s.basis[m]));
    for (const auto& term : image.terms())
      out[m].push_back(static_cast<std::uint32_t>(s.index.at(term)));
  }
  return out;
}

void flip_bits(std::vector<std::uint64_t>& bits, const Terms& terms) {
  for (std::uint32_t t : terms) bits[t / 64] ^= std::uint64_t{1} << (t % 64);
}

template <typename Visit>
void for_each_bit(const std::uint64_t* words, std::size_t count, Visit visit) {
  for (std::size_t w = 0; w < count; ++w)
    for (std::uint64_t x = words[w]; x != 0; x &= x - 1)
      visit(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
}

bool all_zero(const std::vector<std::uint64_t>& bits) {
  return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace

ClosureReport CohomologyEngine::check_closure(unsigned max_degree) const {
  const std::size_t n = graph_->rank();
  const std::size_t vertices = graph_->vertex_count();
  const auto& edges = graph_->edges();

  std::vector<DegreeSpace> spaces;
  // sparse[d][k][v]: monomial indices of basis class k at vertex v.
  std::vector<std::vector<std::vector<Terms>>> sparse;
  for (unsigned d = 0; d <= max_degree; ++d) {
    spaces.push_back(make_space(n, d));
    const std::size_t nb = spaces.back().basis.size();
    auto& classes = sparse.emplace_back();
    for (const auto& coords : kernel_of(constraints(d))) {
      auto& per_vertex = classes.emplace_back(vertices);
      for_each_bit(coords.words().data(), coords.words().size(), [&](std::uint32_t bit) {
        per_vertex[bit / nb].push_back(static_cast<std::uint32_t>(bit % nb));
      });
    }
  }

  ClosureReport report;
  report.max_degree = max_degree;
  for (unsigned e = 0; e <= max_degree; ++e) {
    const DegreeSpace& target = spaces[e];
    const std::size_t words = (target.basis.size() + 63) / 64;

    // Condition tables for degree e, one set per component.
    struct Check {
      const AlphaComponent* comp;
      const std::vector<Terms>* mod_alpha;
      std::vector<Terms> residue;
    };
    std::map<LinearForm, std::vector<Terms>> mod_tables;
    std::vector<Check> checks;
    for (const auto& per_weight : components_)
      for (const auto& comp : per_weight) {
        const LinearForm& alpha = comp.weight;
        auto it = mod_tables.find(alpha);
        if (it == mod_tables.end())
          it = mod_tables
                   .emplace(alpha, forward_images(target, [&](const Polynomial& p) {
                              return reduce_mod_linear(p, alpha);
                            }))
                   .first;
        Check c{&comp, &it->second, {}};
        if (comp.local_degree == 2 && e >= 1)
          c.residue = forward_images(
              target, [&](const Polynomial& p) { return residue_mod_linear_square(p, alpha).terms; });
        checks.push_back(std::move(c));
      }

    std::vector<std::uint64_t> product(vertices * words);
    std::vector<std::uint64_t> scratch(words);
    const auto satisfied = [&] {
      for (const Check& c : checks) {
        for (std::size_t ei : c.comp->tree_edges) {
          std::fill(scratch.begin(), scratch.end(), 0);
          const std::uint64_t* pu = &product[edges[ei].u * words];
          const std::uint64_t* pv = &product[edges[ei].v * words];
          for (std::size_t w = 0; w < words; ++w)
            for (std::uint64_t x = pu[w] ^ pv[w]; x != 0; x &= x - 1)
              flip_bits(scratch, (*c.mod_alpha)[w * 64 + static_cast<std::size_t>(std::countr_zero(x))]);
          if (!all_zero(scratch)) return false;
        }
        if (!c.residue.empty()) {
          std::vector<std::uint64_t> sum(words);
          for (std::size_t v : c.comp->vertices)
            for (std::size_t w = 0; w < words; ++w) sum[w] ^= product[v * words + w];
          std::fill(scratch.begin(), scratch.end(), 0);
          for_each_bit(sum.data(), words, [&](std::uint32_t t) { flip_bits(scratch, c.residue[t]); });
          if (!all_zero(scratch)) return false;
        }
      }
      return true;
    };

    for (unsigned d1 = 0; 2 * d1 <= e; ++d1) {
      const unsigned d2 = e - d1;
      const auto& left = spaces[d1].basis;
      const auto& right = spaces[d2].basis;
      std::vector<std::uint32_t> mul(left.size() * right.size());
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
          mul[i * right.size() + j] = static_cast<std::uint32_t>(target.index.at(left[i] * right[j]));

      const auto& as = sparse[d1];
      const auto& bs = sparse[d2];
      for (std::size_t a = 0; a < as.size(); ++a)
        for (std::size_t b = (d1 == d2 ? a : 0); b < bs.size(); ++b) {
          std::fill(product.begin(), product.end(), 0);
          for (std::size_t v = 0; v < vertices; ++v)
            for (std::uint32_t i : as[a][v])
              for (std::uint32_t j : bs[b][v]) {
                const std::uint32_t t = mul[i * right.size() + j];
                product[v * words + t / 64] ^= std::uint64_t{1} << (t % 64);
              }
          ++report.pairs;
          if (!satisfied()) ++report.failures;
        }
    }
  }
  return report;
}

bool CohomologyEngine::verify(const CohomologyClass& c) const {
  if (c.values().size() != graph_->vertex_count()) return false;
  for (const auto& p : c.values()) {
    if (p.rank() != graph_->rank()) return false;
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<int>(c.degree())))
      return false;
  }
  const auto& edges = graph_->edges();
  for (const auto& per_weight : components_) {
    for (const auto& comp : per_weight) {
      const LinearForm& alpha = comp.weight;
      for (std::size_t e : comp.edges)
        if (!divides_linear(alpha, c.at(edges[e].u) + c.at(edges[e].v))) return false;
      const Polynomial& first = c.at(comp.vertices.front());
      for (std::size_t v : comp.vertices)
        if (!divides_linear(alpha, first + c.at(v))) return false;
      if (comp.local_degree == 2 && c.degree() >= 1) {
        Polynomial sum(graph_->rank());
        for (std::size_t v : comp.vertices) sum += c.at(v);
        if (!residue_mod_linear_square(sum, alpha).is_zero()) return false;
      }
    }
  }
  return true;
}

bool CohomologyEngine::in_span(const CohomologyClass& c) const {
  const GradedBasis b = graded_basis(c.degree());
  std::vector<F2Vector> vectors = b.coordinates;
  vectors.push_back(coordinates(c));
  return span_of(vectors, unknowns(c.degree())).size() == b.dimension();
}

unsigned default_max_degree(const MomentGraph& g) {
  return static_cast<unsigned>(2 * g.rank() + 2);
}

F2Matrix assemble_constraints(const MomentGraph& g, unsigned d, Mode mode) {
  return CohomologyEngine(g, mode).constraints(d);
}

GradedBasis graded_basis(const MomentGraph& g, unsigned d, Mode mode) {
  return CohomologyEngine(g, mode).graded_basis(d);
}

bool verify_class(const CohomologyClass& c, Mode mode) {
  return CohomologyEngine(c.graph(), mode).verify(c);
}

HilbertData hilbert(const MomentGraph& g, unsigned max_degree, Mode mode) {
  return CohomologyEngine(g, mode).hilbert(max_degree);
}

std::vector<std::size_t> ordinary_betti(const MomentGraph& g, unsigned max_degree, Mode mode) {
  return CohomologyEngine(g, mode).ordinary_betti(max_degree);
}

CohomologyClass multiply_classes(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph()))
    throw std::invalid_argument("classes belong to different graphs");
  std::vector<Polynomial> values;
  values.reserve(a.values().size());
  for (std::size_t v = 0; v < a.values().size(); ++v) values.push_back(a.at(v) * b.at(v));
  return CohomologyClass(a.graph_ptr(), a.degree() + b.degree(), std::move(values));
}

Restriction restrict_scalars(const MomentGraph& g, const F2Matrix& map, unsigned max_degree,
                             Mode mode) {
  return CohomologyEngine(g, mode).restrict_scalars(map, max_degree);
}

RingTable ordinary_ring_table(const MomentGraph& g, unsigned max_degree, Mode mode) {
  return CohomologyEngine(g, mode).ring_table(max_degree);
}

}  // namespace gkm2
