#pragma once

// Moment graphs: fixed points as vertices, edges labelled by mod-2 reduced
// weights. Includes the JSON document format and the mod-2 GKM / GH
// hypothesis checks.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gkm2/f2poly.hpp"

namespace gkm2 {

/// Malformed graph document or inconsistent structure.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  LinearForm weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class MomentGraph {
 public:
  MomentGraph() = default;
  /// Throws GraphError on duplicate ids, loops, bad endpoints or weights of
  /// the wrong rank. Zero weights are admitted and reported by degenerate().
  MomentGraph(std::size_t rank, std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex(std::size_t i) const { return vertices_[i]; }
  /// Index of a vertex id; throws GraphError if absent.
  std::size_t index_of(std::string_view id) const;
  bool has_vertex(std::string_view id) const;

  /// Indices of the edges incident to vertex i, in input order.
  const std::vector<std::size_t>& incident(std::size_t i) const { return incident_[i]; }
  std::size_t other_end(const Edge& e, std::size_t i) const { return e.u == i ? e.v : e.u; }

  /// True if any edge weight is the zero form.
  bool degenerate() const;

  /// Distinct edge weights in order of first appearance.
  std::vector<LinearForm> distinct_weights() const;

  /// Connected components, each a sorted list of vertex indices, ordered by
  /// their smallest index.
  std::vector<std::vector<std::size_t>> components() const;

  friend bool operator==(const MomentGraph& a, const MomentGraph& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> incident_;
};

MomentGraph parse_graph(std::string_view document);
/// Canonical document: keys in schema order, two-space indentation,
/// trailing newline.
std::string serialize_graph(const MomentGraph& g);

enum class Mode { gkm, gh };

std::string_view to_string(Mode mode);
/// Accepts "gkm" or "gh".
Mode parse_mode(std::string_view text);

struct Violation {
  std::string vertex;
  std::string description;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  Mode mode = Mode::gkm;
  bool valid = true;
  std::vector<Violation> violations;
};

/// Incident weights at every vertex are nonzero and pairwise distinct, and
/// the vertex degree is at most 2^n - 1.
ValidationReport validate_mod2_gkm(const MomentGraph& g);

/// Incident weights are nonzero and each value occurs at most twice per
/// vertex, every alpha-component has uniform local degree, and the vertex
/// degree is at most 2 (2^n - 1).
ValidationReport validate_mod2_gh(const MomentGraph& g);

ValidationReport validate(const MomentGraph& g, Mode mode);

/// Connected piece of the subgraph of edges with one fixed weight.
struct AlphaComponent {
  LinearForm weight;
  std::vector<std::size_t> vertices;  // ascending
  std::vector<std::size_t> edges;     // indices into g.edges(), ascending
  /// Number of weight-alpha edges at each member: 1 for a two-dimensional
  /// piece, 2 for a four-dimensional one.
  unsigned local_degree = 0;
  /// Edges of a breadth-first spanning tree rooted at the member whose id
  /// is lexicographically least, in visiting order.
  std::vector<std::size_t> tree_edges;
};

/// Components of the weight-alpha subgraph in discovery order (scanning
/// edges in input order). Throws GraphError if a component has mixed local
/// degree or local degree above 2.
std::vector<AlphaComponent> alpha_components(const MomentGraph& g, const LinearForm& alpha);

}  // namespace gkm2
