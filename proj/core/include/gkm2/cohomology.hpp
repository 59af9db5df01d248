#pragma once

// Equivariant cohomology of a moment graph over F2 = Z/2.
//
// A degree-d class assigns a homogeneous degree-d polynomial to every
// vertex. The admissible assignments are cut out by one block of linear
// conditions per alpha-component of the graph:
//
//   * members of a component agree modulo alpha (f_u - f_v in (alpha));
//   * for a component of local degree 2 and d >= 1, the sum of the member
//     values lies in (alpha^2).
//
// On a mod-2 GKM graph every component is a single edge and only the first
// condition appears. Each graded piece is computed as the kernel of the
// assembled F2 matrix over the unknowns (vertex, degree-d monomial).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gkm2/f2linalg.hpp"
#include "gkm2/f2poly.hpp"
#include "gkm2/moment_graph.hpp"

namespace gkm2 {

/// Elimination backend used for kernels and ranks.
enum class Kernel { packed, naive };

/// The graph does not satisfy the hypotheses of the requested mode.
class InvalidGraph : public std::runtime_error {
 public:
  InvalidGraph(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Hilbert data did not stabilize at the requested maximum degree.
class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CohomologyClass {
 public:
  CohomologyClass(std::shared_ptr<const MomentGraph> graph, unsigned degree,
                  std::vector<Polynomial> values);

  /// Zero class of the given degree.
  static CohomologyClass zero(std::shared_ptr<const MomentGraph> graph, unsigned degree);
  /// The unit: constant 1 at every vertex.
  static CohomologyClass unit(std::shared_ptr<const MomentGraph> graph);

  const MomentGraph& graph() const { return *graph_; }
  const std::shared_ptr<const MomentGraph>& graph_ptr() const { return graph_; }
  unsigned degree() const { return degree_; }
  const std::vector<Polynomial>& values() const { return values_; }
  const Polynomial& at(std::size_t vertex) const { return values_[vertex]; }
  const Polynomial& at(std::string_view id) const { return values_[graph_->index_of(id)]; }
  bool is_zero() const;

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const MomentGraph> graph_;
  unsigned degree_;
  std::vector<Polynomial> values_;
};

struct GradedBasis {
  unsigned degree = 0;
  std::vector<CohomologyClass> classes;
  /// Coordinate vectors of `classes` over (vertex, monomial) unknowns.
  std::vector<F2Vector> coordinates;
  bool canonical = true;

  std::size_t dimension() const { return classes.size(); }
};

struct HilbertData {
  unsigned max_degree = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> dims;        // dim H^0 .. dim H^D
  std::vector<long long> numerator;     // (1 - t)^rank * sum dims t^d, truncated at t^D
  bool stabilized = false;              // trailing ceil(D/2) numerator coefficients vanish
};

/// Numerator and stabilization flag from a dimension sequence.
HilbertData make_hilbert(std::vector<std::size_t> dims, std::size_t rank);

/// Multiplication table of lifted module generators modulo (x1..xn) H.
struct RingTable {
  std::vector<CohomologyClass> generators;
  /// products[a][b] has one bit per generator: the expansion of
  /// generators[a] * generators[b] in the generator basis mod (x1..xn) H.
  std::vector<std::vector<F2Vector>> products;

  std::size_t size() const { return generators.size(); }
};

/// Image of each graded piece under a change of scalars.
struct Restriction {
  std::size_t target_rank = 0;
  HilbertData hilbert;
  /// bases[d][k][v]: value at vertex v of the k-th canonical image class.
  std::vector<std::vector<std::vector<Polynomial>>> bases;
};

/// Outcome of checking that products of basis classes are classes again.
struct ClosureReport {
  unsigned max_degree = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

class CohomologyEngine {
 public:
  /// Throws InvalidGraph unless `graph` passes validation in `mode`.
  CohomologyEngine(MomentGraph graph, Mode mode, Kernel kernel = Kernel::packed);

  const MomentGraph& graph() const { return *graph_; }
  const std::shared_ptr<const MomentGraph>& graph_ptr() const { return graph_; }
  Mode mode() const { return mode_; }
  Kernel kernel() const { return kernel_; }

  /// Number of unknowns in degree d: vertices * C(n-1+d, d).
  std::size_t unknowns(unsigned d) const;

  /// Constraint matrix over the degree-d unknowns. Rows follow components
  /// in discovery order, scanning edges in input order.
  F2Matrix constraints(unsigned d) const;

  GradedBasis graded_basis(unsigned d) const;
  std::size_t dimension(unsigned d) const;
  HilbertData hilbert(unsigned max_degree) const;

  /// b_d = dim H^d - dim (x1..xn) H^{d-1}, trimmed after the last nonzero
  /// entry. Throws NotStabilized when hilbert(max_degree) is not stabilized.
  std::vector<std::size_t> ordinary_betti(unsigned max_degree) const;

  RingTable ring_table(unsigned max_degree) const;

  /// `map` is m x n: variable x_j goes to sum_i map(i, j) y_i.
  Restriction restrict_scalars(const F2Matrix& map, unsigned max_degree) const;

  /// Direct polynomial check of every condition, independent of the
  /// linear algebra.
  bool verify(const CohomologyClass& c) const;

  F2Vector coordinates(const CohomologyClass& c) const;
  CohomologyClass from_coordinates(unsigned d, const F2Vector& coords) const;

  /// True iff c lies in the span of graded_basis(c.degree()).
  bool in_span(const CohomologyClass& c) const;

  /// Multiplies every pair of basis classes with d1 + d2 <= max_degree and
  /// re-checks each condition on the product. Works on coordinates through
  /// monomial index tables, so it stays fast in high degrees.
  ClosureReport check_closure(unsigned max_degree) const;

 private:
  std::size_t rank_of(const F2Matrix& m) const;
  std::vector<F2Vector> kernel_of(const F2Matrix& m) const;
  std::vector<F2Vector> span_of(std::span<const F2Vector> vectors, std::size_t size) const;
  /// Coordinates spanning (x1..xn) H^{d-1} inside the degree-d unknowns.
  std::vector<F2Vector> ideal_part(const GradedBasis& lower, unsigned d) const;
  /// Bases of degrees 0..max_degree; throws NotStabilized.
  std::vector<GradedBasis> stabilized_bases(unsigned max_degree) const;

  std::shared_ptr<const MomentGraph> graph_;
  Mode mode_;
  Kernel kernel_;
  /// Per distinct weight, its components.
  std::vector<std::vector<AlphaComponent>> components_;
};

/// Default maximum degree 2n + 2.
unsigned default_max_degree(const MomentGraph& g);

F2Matrix assemble_constraints(const MomentGraph& g, unsigned d, Mode mode);
GradedBasis graded_basis(const MomentGraph& g, unsigned d, Mode mode);
bool verify_class(const CohomologyClass& c, Mode mode);
HilbertData hilbert(const MomentGraph& g, unsigned max_degree, Mode mode);
std::vector<std::size_t> ordinary_betti(const MomentGraph& g, unsigned max_degree, Mode mode);
CohomologyClass multiply_classes(const CohomologyClass& a, const CohomologyClass& b);
Restriction restrict_scalars(const MomentGraph& g, const F2Matrix& map, unsigned max_degree,
                             Mode mode);
RingTable ordinary_ring_table(const MomentGraph& g, unsigned max_degree, Mode mode);

}  // namespace gkm2
