#include <doctest.h>

#include <future>
#include <random>
#include <set>

#include "gkm2/cohomology.hpp"
#include "gkm2/examples.hpp"
#include "oracle.hpp"

using namespace gkm2;
using examples::complete_graph;
using examples::gh_cycle;
using examples::hypercube;

namespace {

MomentGraph k2() { return MomentGraph(1, {"N", "S"}, {{0, 1, LinearForm(1, {1})}}); }

std::vector<std::size_t> dims_of(const MomentGraph& g, Mode mode, unsigned max_degree,
                                 Kernel kernel = Kernel::packed) {
  const CohomologyEngine engine(g, mode, kernel);
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(engine.dimension(d));
  return out;
}

// Random invertible change of variables applied to every weight.
MomentGraph relabel(const MomentGraph& g, std::mt19937_64& rng) {
  const std::size_t n = g.rank();
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> columns;
  for (;;) {
    columns.clear();
    F2Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      columns.push_back(pick(rng));
      for (std::size_t i = 0; i < n; ++i)
        if ((columns[j] >> i) & 1U) m.set(i, j);
    }
    if (naive::rank(m) == n) break;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    std::uint64_t image = 0;
    for (std::size_t j = 0; j < n; ++j)
      if ((e.weight.mask() >> j) & 1U) image ^= columns[j];
    edges.push_back({e.u, e.v, LinearForm::from_mask(n, image)});
  }
  return MomentGraph(n, g.vertices(), edges);
}

// Oracle for restriction: image dimension by enumerating every admissible
// assignment and counting distinct substituted images.
std::size_t enumerated_image_dimension(const MomentGraph& g, Mode mode, unsigned d,
                                       const std::vector<Polynomial>& images, std::size_t m) {
  const auto basis = monomial_basis(g.rank(), d);
  const std::size_t unknowns = g.vertex_count() * basis.size();
  REQUIRE(unknowns <= 20);
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << unknowns); ++mask) {
    std::vector<Polynomial> values;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::vector<Monomial> terms;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if ((mask >> (v * basis.size() + k)) & 1U) terms.push_back(basis[k]);
      values.emplace_back(g.rank(), std::move(terms));
    }
    if (!testing::admissible(g, mode, d, values)) continue;
    std::vector<std::string> image;
    for (const auto& p : values) image.push_back(substitute(p, images, m).to_string());
    seen.insert(image);
  }
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < seen.size()) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("constraint matrices") {
  const CohomologyEngine engine(k2(), Mode::gkm);
  CHECK(engine.unknowns(1) == 2);
  CHECK(naive::rank(engine.constraints(1)) == 0);
  CHECK(kernel_basis(engine.constraints(1)).size() == 2);
  CHECK(kernel_basis(engine.constraints(0)).size() == 1);

  const F2Matrix cycle = assemble_constraints(gh_cycle(3), 1, Mode::gh);
  CHECK(cycle.cols() == 3);
  CHECK(naive::kernel_basis(cycle).size() == 2);

  // Identical output on repeated assembly.
  CHECK(assemble_constraints(complete_graph(4), 2, Mode::gkm) ==
        assemble_constraints(complete_graph(4), 2, Mode::gkm));
  CHECK_THROWS_AS(assemble_constraints(gh_cycle(4), 1, Mode::gkm), InvalidGraph);
}

TEST_CASE("graded_basis") {
  CHECK(graded_basis(complete_graph(3), 0, Mode::gkm).dimension() == 1);
  CHECK(graded_basis(k2(), 3, Mode::gkm).dimension() == 2);

  const GradedBasis h1 = graded_basis(complete_graph(3), 1, Mode::gkm);
  CHECK(h1.dimension() == 4);
  CHECK(testing::enumerated_dimension(complete_graph(3), Mode::gkm, 1) == 4);
  CHECK(h1.canonical);

  // Coefficient matrix in reduced echelon form.
  const F2Matrix coeffs = F2Matrix::from_rows(h1.coordinates, 9);
  CHECK(rref(coeffs) == coeffs);

  CHECK_THROWS_AS(graded_basis(examples::cp2_bad(), 1, Mode::gh), InvalidGraph);
  try {
    graded_basis(gh_cycle(4), 1, Mode::gkm);
  } catch (const InvalidGraph& e) {
    CHECK_FALSE(e.report().valid);
  }
}

TEST_CASE("verify_class") {
  const auto graph = std::make_shared<const MomentGraph>(complete_graph(3));
  CHECK(verify_class(CohomologyClass::zero(graph, 2), Mode::gkm));
  CHECK(verify_class(CohomologyClass::unit(graph), Mode::gkm));

  std::vector<Polynomial> values(3, Polynomial(3));
  values[0] = Polynomial::variable(3, 1);
  CHECK_FALSE(verify_class(CohomologyClass(graph, 1, values), Mode::gkm));
  // The failure is visible edge by edge.
  CHECK_FALSE(divides_linear(LinearForm(3, {1, 2}), values[0] + values[1]));
  CHECK_FALSE(divides_linear(LinearForm(3, {1, 3}), values[0] + values[2]));

  CHECK_THROWS_AS(CohomologyClass(graph, 2, values), std::invalid_argument);
  CHECK_THROWS(CohomologyClass(graph, 1, std::vector<Polynomial>(2, Polynomial(3))));

  for (const auto& entry : examples::catalog())
    for (unsigned d = 0; d <= 3; ++d)
      for (const auto& c : graded_basis(entry.graph, d, entry.mode).classes)
        CHECK(verify_class(c, entry.mode));
}

TEST_CASE("gh sum condition in degree one") {
  const auto graph = std::make_shared<const MomentGraph>(gh_cycle(3));
  const Polynomial x = Polynomial::variable(1, 1);
  const Polynomial zero(1);
  CHECK(verify_class(CohomologyClass(graph, 1, {x, x, zero}), Mode::gh));
  CHECK_FALSE(verify_class(CohomologyClass(graph, 1, {x, zero, zero}), Mode::gh));
  // Constants survive on odd cycles.
  CHECK(verify_class(CohomologyClass::unit(graph), Mode::gh));
}

TEST_CASE("hilbert") {
  const HilbertData k = hilbert(k2(), 5, Mode::gkm);
  CHECK(k.dims == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  CHECK(k.numerator == std::vector<long long>{1, 1, 0, 0, 0, 0});
  CHECK(k.stabilized);

  const HilbertData c3 = hilbert(complete_graph(3), 6, Mode::gkm);
  CHECK(c3.numerator == std::vector<long long>{1, 1, 1, 0, 0, 0, 0});
  CHECK(c3.stabilized);
  for (unsigned d = 0; d <= 2; ++d)
    CHECK(c3.dims[d] == testing::enumerated_dimension(complete_graph(3), Mode::gkm, d));
  for (unsigned d = 0; d <= 6; ++d)
    CHECK(c3.dims[d] == testing::free_module_dimension({1, 1, 1}, 3, d));

  const HilbertData cycle = hilbert(gh_cycle(4), 4, Mode::gh);
  CHECK(cycle.dims == std::vector<std::size_t>{1, 3, 4, 4, 4});
  CHECK(cycle.numerator == std::vector<long long>{1, 2, 1, 0, 0});

  CHECK(hilbert(gh_cycle(3), 4, Mode::gh).dims == std::vector<std::size_t>{1, 2, 3, 3, 3});
  CHECK(hilbert(gh_cycle(5), 4, Mode::gh).dims == std::vector<std::size_t>{1, 4, 5, 5, 5});

  // Truncated data is reported, not assumed.
  CHECK_FALSE(hilbert(complete_graph(4), 2, Mode::gkm).stabilized);

  const HilbertData made = make_hilbert({1, 2, 2, 2}, 1);
  CHECK(made.max_degree == 3);
  CHECK(made.numerator == std::vector<long long>{1, 1, 0, 0});
  CHECK(made.stabilized);
}

TEST_CASE("dims[0] counts components") {
  const MomentGraph two_pieces(1, {"a", "b", "c", "d"},
                               {{0, 1, LinearForm(1, {1})}, {2, 3, LinearForm(1, {1})}});
  const HilbertData h = hilbert(two_pieces, 4, Mode::gkm);
  CHECK(h.dims[0] == 2);
  CHECK(h.numerator[0] == 2);
  CHECK(hilbert(MomentGraph(2, {"only"}, {}), 2, Mode::gkm).dims == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("ordinary_betti") {
  CHECK(ordinary_betti(k2(), 5, Mode::gkm) == std::vector<std::size_t>{1, 1});
  const auto perm3 = ordinary_betti(examples::permutahedron(3), 8, Mode::gkm);
  REQUIRE(perm3.size() >= 2);
  CHECK(perm3[1] == 2);
  CHECK(perm3 == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(ordinary_betti(hypercube(2), 6, Mode::gkm) == std::vector<std::size_t>{1, 2, 1});
  CHECK(ordinary_betti(gh_cycle(4), 4, Mode::gh) == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS_AS(ordinary_betti(complete_graph(4), 2, Mode::gkm), NotStabilized);
}

TEST_CASE("permutahedron(4) needs a larger degree bound") {
  const MomentGraph g = examples::permutahedron(4);
  CHECK_FALSE(hilbert(g, default_max_degree(g), Mode::gkm).stabilized);
  const HilbertData h = hilbert(g, 12, Mode::gkm);
  CHECK(h.stabilized);
  const auto betti = ordinary_betti(g, 12, Mode::gkm);
  CHECK(betti == std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});
  for (unsigned d = 0; d <= 12; ++d) CHECK(h.dims[d] == testing::free_module_dimension(betti, 4, d));
}

TEST_CASE("freeness, numerator and betti agree on the catalog") {
  for (const auto& entry : examples::catalog()) {
    CAPTURE(entry.spec.label());
    const CohomologyEngine engine(entry.graph, entry.mode);
    const unsigned D = default_max_degree(entry.graph);
    const HilbertData h = engine.hilbert(D);
    REQUIRE(h.stabilized);
    CHECK(h.dims[0] == entry.graph.components().size());
    for (long long c : h.numerator) CHECK(c >= 0);
    const auto betti = engine.ordinary_betti(D);
    for (std::size_t j = 0; j < h.numerator.size(); ++j) {
      const std::size_t b = j < betti.size() ? betti[j] : 0;
      CHECK(static_cast<long long>(b) == h.numerator[j]);
    }
    for (unsigned d = 0; d <= D; ++d)
      CHECK(h.dims[d] == testing::free_module_dimension(betti, entry.graph.rank(), d));
  }
}

TEST_CASE("multiply_classes") {
  const CohomologyEngine engine(complete_graph(3), Mode::gkm);
  const GradedBasis h1 = engine.graded_basis(1);
  const CohomologyClass one = CohomologyClass::unit(engine.graph_ptr());
  for (const auto& a : h1.classes) {
    CHECK(multiply_classes(a, one) == a);
    const CohomologyClass sq = multiply_classes(a, a);
    CHECK(sq.degree() == 2);
    for (std::size_t v = 0; v < 3; ++v) CHECK(sq.at(v) == a.at(v) * a.at(v));
  }
  const CohomologyClass ab = multiply_classes(h1.classes[0], h1.classes[1]);
  CHECK(engine.in_span(ab));

  // Membership by rank comparison with the naive kernel.
  const GradedBasis h2 = engine.graded_basis(2);
  F2Matrix rows = F2Matrix::from_rows(h2.coordinates, engine.unknowns(2));
  const std::size_t before = naive::rank(rows);
  rows.append_row(engine.coordinates(ab));
  CHECK(naive::rank(rows) == before);

  const auto other = std::make_shared<const MomentGraph>(hypercube(2));
  CHECK_THROWS(multiply_classes(h1.classes[0], CohomologyClass::unit(other)));
}

TEST_CASE("closure under products") {
  for (const auto& g : {complete_graph(3), hypercube(2), examples::permutahedron(3)}) {
    const CohomologyEngine engine(g, Mode::gkm);
    for (unsigned d1 = 0; d1 <= 2; ++d1)
      for (unsigned d2 = d1; d1 + d2 <= 3; ++d2)
        for (const auto& a : engine.graded_basis(d1).classes)
          for (const auto& b : engine.graded_basis(d2).classes) {
            const CohomologyClass p = multiply_classes(a, b);
            CHECK(engine.verify(p));
            CHECK(engine.in_span(p));
          }
  }
}

TEST_CASE("coordinates round trip") {
  const CohomologyEngine engine(examples::permutahedron(3), Mode::gkm);
  for (const auto& c : engine.graded_basis(2).classes)
    CHECK(engine.from_coordinates(2, engine.coordinates(c)) == c);
}

TEST_CASE("gkm and gh modes agree on gkm graphs") {
  for (const auto& entry : examples::catalog()) {
    if (entry.mode != Mode::gkm) continue;
    CAPTURE(entry.spec.label());
    CHECK(dims_of(entry.graph, Mode::gkm, 3) == dims_of(entry.graph, Mode::gh, 3));
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(17);
  for (const auto& entry : examples::catalog()) {
    if (entry.graph.vertex_count() > 16) continue;
    CAPTURE(entry.spec.label());
    const MomentGraph g = relabel(entry.graph, rng);
    REQUIRE(validate(g, entry.mode).valid);
    CHECK(dims_of(g, entry.mode, 3) == dims_of(entry.graph, entry.mode, 3));
  }
}

TEST_CASE("packed and naive paths agree, and match enumeration") {
  for (const auto& entry : examples::catalog()) {
    if (entry.graph.vertex_count() > 6 || entry.graph.rank() > 3) continue;
    CAPTURE(entry.spec.label());
    const auto packed = dims_of(entry.graph, entry.mode, 3, Kernel::packed);
    CHECK(packed == dims_of(entry.graph, entry.mode, 3, Kernel::naive));
    for (unsigned d = 0; d <= 3; ++d)
      if (entry.graph.vertex_count() * monomial_count(entry.graph.rank(), d) <= 18)
        CHECK(packed[d] == testing::enumerated_dimension(entry.graph, entry.mode, d));
  }
}

TEST_CASE("degrees evaluated concurrently match sequential evaluation") {
  const CohomologyEngine engine(hypercube(3), Mode::gkm);
  std::vector<std::future<GradedBasis>> jobs;
  for (unsigned d = 0; d <= 6; ++d)
    jobs.push_back(std::async(std::launch::async, [&engine, d] { return engine.graded_basis(d); }));
  for (unsigned d = 0; d <= 6; ++d) {
    const GradedBasis parallel = jobs[d].get();
    const GradedBasis serial = engine.graded_basis(d);
    CHECK(parallel.coordinates == serial.coordinates);
  }
}

TEST_CASE("restrict_scalars") {
  const F2Matrix id1 = F2Matrix::identity(1);
  const Restriction same = restrict_scalars(hypercube(1), id1, 5, Mode::gkm);
  CHECK(same.hilbert.dims == hilbert(hypercube(1), 5, Mode::gkm).dims);
  CHECK(same.hilbert.dims == hilbert(k2(), 5, Mode::gkm).dims);

  const Restriction id2 = restrict_scalars(hypercube(2), F2Matrix::identity(2), 4, Mode::gkm);
  CHECK(id2.hilbert.dims == hilbert(hypercube(2), 4, Mode::gkm).dims);

  const F2Matrix diagonal = F2Matrix::from_strings({"11"});
  const Restriction diag = restrict_scalars(hypercube(2), diagonal, 3, Mode::gkm);
  const std::vector<Polynomial> images(2, Polynomial::variable(1, 1));
  for (unsigned d = 0; d <= 2; ++d)
    CHECK(diag.hilbert.dims[d] ==
          enumerated_image_dimension(hypercube(2), Mode::gkm, d, images, 1));
  CHECK(diag.hilbert.dims[1] == 3);
  CHECK(diag.target_rank == 1);
  REQUIRE(diag.bases.size() == 4);
  CHECK(diag.bases[1].size() == 3);

  CHECK_THROWS_AS(restrict_scalars(hypercube(2), F2Matrix::from_strings({"111"}), 2, Mode::gkm),
                  std::invalid_argument);
}

TEST_CASE("ordinary_ring_table") {
  const RingTable k = ordinary_ring_table(k2(), 5, Mode::gkm);
  REQUIRE(k.size() == 2);
  CHECK(k.generators[0].degree() == 0);
  CHECK(k.generators[1].degree() == 1);
  CHECK(k.products[1][1].is_zero());

  const RingTable rp2 = ordinary_ring_table(complete_graph(3), 6, Mode::gkm);
  REQUIRE(rp2.size() == 3);
  CHECK(rp2.products[1][1].to_string() == "001");
  CHECK(rp2.products[1][2].is_zero());
  CHECK(rp2.products[2][2].is_zero());

  for (const RingTable* t : {&k, &rp2})
    for (std::size_t g = 0; g < t->size(); ++g) {
      F2Vector e(t->size());
      e.set(g);
      CHECK(t->products[0][g] == e);
      CHECK(t->products[g][0] == e);
    }

  CHECK_THROWS_AS(ordinary_ring_table(complete_graph(4), 2, Mode::gkm), NotStabilized);
}

TEST_CASE("check_closure agrees with the polynomial path") {
  for (const auto& entry : examples::catalog()) {
    if (entry.graph.vertex_count() > 8 || entry.graph.rank() > 3) continue;
    CAPTURE(entry.spec.label());
    const CohomologyEngine engine(entry.graph, entry.mode);
    const unsigned D = 4;
    std::vector<GradedBasis> bases;
    for (unsigned d = 0; d <= D; ++d) bases.push_back(engine.graded_basis(d));
    std::size_t pairs = 0;
    std::size_t failures = 0;
    for (unsigned d1 = 0; d1 <= D; ++d1)
      for (unsigned d2 = d1; d1 + d2 <= D; ++d2)
        for (std::size_t a = 0; a < bases[d1].dimension(); ++a)
          for (std::size_t b = (d1 == d2 ? a : 0); b < bases[d2].dimension(); ++b) {
            ++pairs;
            const CohomologyClass p = multiply_classes(bases[d1].classes[a], bases[d2].classes[b]);
            if (!verify_class(p, entry.mode)) ++failures;
          }
    const ClosureReport report = engine.check_closure(D);
    CHECK(report.pairs == pairs);
    CHECK(report.failures == failures);
    CHECK(report.passed());
  }
}

TEST_CASE("closure through twice the rank on the catalog") {
  for (const auto& entry : examples::catalog()) {
    CAPTURE(entry.spec.label());
    const ClosureReport r =
        CohomologyEngine(entry.graph, entry.mode).check_closure(2 * static_cast<unsigned>(entry.graph.rank()));
    CHECK(r.pairs > 0);
    CHECK(r.passed());
  }
}
