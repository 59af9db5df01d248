#pragma once

// Generators for the standard example families and the bundled corpus.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gkm2/moment_graph.hpp"
#include "gkm2/symdiff.hpp"

namespace gkm2::examples {

/// CP^{n-1}: vertices "1".."n", edge {i, j} with weight x_i + x_j.
MomentGraph complete_graph(int n);

/// (CP^1)^n: binary words of length n; words differing in position i are
/// joined by an edge of weight x_i.
MomentGraph hypercube(int n);

/// Flag variety U(n)/T: permutations of 1..n in one-line notation
/// (lexicographic order); sigma and tau are joined when tau sigma^{-1} is
/// the transposition (i j), with weight x_i + x_j. Supports n <= 9.
MomentGraph permutahedron(int n);

/// Grassmannian Gr(k, n): k-subsets of {1..n} written "1,3", joined when
/// they share k-1 elements; S\T = {i}, T\S = {j} gives weight x_i + x_j.
MomentGraph johnson(int n, int k);

/// A d-cycle p1..pd of rank 1 with every weight x1: one four-dimensional
/// alpha-component.
MomentGraph gh_cycle(int d);

/// The mod-2 reduced weights of CP^2 under the circle action with weights
/// (-1, 0, 1): edges p1p2 = x, p1p3 = 0, p2p3 = x. Fails validation.
MomentGraph cp2_bad();

/// Cartesian product with vertex ids "a,b"; g2's variables are shifted by
/// g1.rank(). Edges of g1 (times vertices of g2) come first.
MomentGraph product(const MomentGraph& g1, const MomentGraph& g2);

enum class Family { complete, hypercube, permutahedron, johnson, gh_cycle, cp2_bad, product };

std::string_view to_string(Family family);
/// Accepts the names used by the CLI: complete, hypercube, permutahedron,
/// johnson, gh_cycle, cp2_bad, product.
Family parse_family(std::string_view name);

struct ExampleSpec {
  Family family = Family::complete;
  int n = 0;
  int k = 0;
  int d = 0;
  /// Factors of a product, multiplied left to right.
  std::vector<ExampleSpec> factors;

  std::string label() const;
};

/// Throws std::invalid_argument when parameters are out of range.
MomentGraph make(const ExampleSpec& spec);

struct CatalogEntry {
  ExampleSpec spec;
  Mode mode = Mode::gkm;
  MomentGraph graph;
};

/// Every bundled valid example, in a fixed order. Each one stabilizes by
/// the default maximum degree.
std::vector<CatalogEntry> catalog();

/// The bipartite K_{3,3} instance: A_i -- B_j labelled {i, j} for i != j
/// and {1,2,3} \ {i} for i == j.
SymDiffInstance k33_instance();

}  // namespace gkm2::examples
