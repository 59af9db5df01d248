#pragma once

// Symmetric-difference systems on a graph.
//
// Each edge e = {i, j} carries a nonempty subset S_e of {1..n}. The exact
// system asks for subsets S_i with S_i xor S_j = S_e on every edge; the
// relaxed system allows S_i xor S_j to be either S_e or empty. Writing
// subsets as vectors of F2^n, both are linear systems over F2: the relaxed
// one has an extra unknown scalar per edge. Two solutions are equivalent
// when they differ by one global subset S_0 xor-ed into every S_i.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gkm2/cohomology.hpp"
#include "gkm2/moment_graph.hpp"

namespace gkm2 {

/// Sorted 1-based element list.
using Subset = std::vector<int>;

struct SymDiffEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Subset subset;

  friend bool operator==(const SymDiffEdge&, const SymDiffEdge&) = default;
};

class SymDiffInstance {
 public:
  SymDiffInstance() = default;
  /// Throws GraphError on empty or out-of-range subsets, loops, unknown
  /// endpoints or duplicate vertex ids.
  SymDiffInstance(std::size_t universe, std::vector<std::string> vertices,
                  std::vector<SymDiffEdge> edges);

  std::size_t universe() const { return universe_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<SymDiffEdge>& edges() const { return edges_; }
  std::size_t index_of(std::string_view id) const;

  /// The same graph with each label read as a linear form.
  MomentGraph to_moment_graph() const;

  friend bool operator==(const SymDiffInstance&, const SymDiffInstance&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::string> vertices_;
  std::vector<SymDiffEdge> edges_;
};

/// Labels are the supports of the edge weights. Throws on zero weights.
SymDiffInstance instance_from_graph(const MomentGraph& g);

SymDiffInstance parse_instance(std::string_view document);
std::string serialize_instance(const SymDiffInstance& inst);

struct ExactResult {
  bool consistent = false;
  /// Lexicographically least vertex of each component holds the empty set.
  std::vector<Subset> assignment;
  std::size_t components = 0;
  /// Consistent and connected: the solution is unique up to equivalence.
  bool unique_up_to_equivalence = false;
  /// Independent per-component shifts beyond the global one, in subsets.
  std::size_t extra_component_freedom = 0;
};

ExactResult solve_exact(const SymDiffInstance& inst, Kernel kernel = Kernel::packed);

struct RelaxedSolution {
  std::vector<Subset> assignment;
  std::vector<bool> scalars;  // one per edge
  /// Every scalar is 1, so this also solves the exact system.
  bool exact = false;

  friend bool operator==(const RelaxedSolution&, const RelaxedSolution&) = default;
};

struct RelaxedResult {
  std::size_t solution_dimension = 0;  // log2 of the solution group size
  std::size_t trivial_dimension = 0;   // constant assignments: universe
  std::size_t class_dimension = 0;     // solution_dimension - trivial_dimension
  std::size_t components = 0;
  /// Per-component constant shifts that the global quotient leaves in place.
  std::size_t component_freedom = 0;
  /// The all-ones constant (complementing every S_i) lies in the group.
  bool complement_shift = false;
  std::vector<RelaxedSolution> basis;
  /// One representative per class, normalized so the lexicographically
  /// least vertex holds the empty set; the trivial class comes first.
  /// Filled only when class_dimension <= kMaxListedDimension.
  std::vector<RelaxedSolution> representatives;
  bool representatives_listed = false;

  static constexpr std::size_t kMaxListedDimension = 16;

  std::size_t class_count() const { return std::size_t{1} << class_dimension; }
  std::size_t nontrivial_classes() const { return class_count() - 1; }
};

RelaxedResult solve_relaxed(const SymDiffInstance& inst, Kernel kernel = Kernel::packed);

/// Direct set-operation checks, independent of the linear algebra.
bool satisfies_exact(const SymDiffInstance& inst, const std::vector<Subset>& assignment);
bool satisfies_relaxed(const SymDiffInstance& inst, const std::vector<Subset>& assignment,
                       const std::vector<bool>& scalars);
/// a and b differ by one global subset.
bool equivalent(const std::vector<Subset>& a, const std::vector<Subset>& b);

struct H1CrossCheck {
  bool applicable = false;
  std::string reason;  // why not applicable
  std::size_t rank = 0;
  std::size_t components = 0;
  std::size_t h1_dimension = 0;
  std::size_t solution_dimension = 0;
  std::size_t class_dimension = 0;
  /// 2^dim H^1 equals the size of the relaxed solution group.
  bool group_sizes_match = false;
  /// log2(class count) = dim H^1 - rank.
  bool class_count_matches = false;

  bool passed() const { return applicable && group_sizes_match && class_count_matches; }
};

H1CrossCheck crosscheck_h1(const SymDiffInstance& inst);

}  // namespace gkm2
