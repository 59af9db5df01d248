#include "gkm2/examples.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gkm2::examples {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

LinearForm pair_weight(std::size_t rank, int i, int j) {
  const int support[] = {std::min(i, j), std::max(i, j)};
  return LinearForm(rank, support);
}

std::string join(const std::vector<int>& items) {
  std::string out;
  for (int x : items) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

MomentGraph complete_graph(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  const auto rank = static_cast<std::size_t>(n);
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                       pair_weight(rank, i, j)});
  return MomentGraph(rank, std::move(vertices), std::move(edges));
}

MomentGraph hypercube(int n) {
  require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
  const auto rank = static_cast<std::size_t>(n);
  const std::size_t count = std::size_t{1} << n;
  // Word w has character i (0-based) equal to bit (n - 1 - i) of its index,
  // so indices enumerate words lexicographically.
  std::vector<std::string> vertices;
  for (std::size_t w = 0; w < count; ++w) {
    std::string word(rank, '0');
    for (int i = 0; i < n; ++i)
      if ((w >> (n - 1 - i)) & 1U) word[static_cast<std::size_t>(i)] = '1';
    vertices.push_back(std::move(word));
  }
  std::vector<Edge> edges;
  for (std::size_t w = 0; w < count; ++w)
    for (int i = 0; i < n; ++i) {
      const std::size_t other = w ^ (std::size_t{1} << (n - 1 - i));
      if (other > w) edges.push_back({w, other, LinearForm::variable(rank, i + 1)});
    }
  return MomentGraph(rank, std::move(vertices), std::move(edges));
}

MomentGraph permutahedron(int n) {
  require(n >= 2 && n <= 9, "permutahedron needs 2 <= n <= 9");
  const auto rank = static_cast<std::size_t>(n);
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> index;
  do {
    std::string id;
    for (int x : perm) id += static_cast<char>('0' + x);
    index.emplace(id, vertices.size());
    vertices.push_back(std::move(id));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Edge> edges;
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        // Composing with (i j) on the left swaps the values i and j.
        std::string tau = vertices[s];
        for (char& c : tau) {
          if (c == '0' + i)
            c = static_cast<char>('0' + j);
          else if (c == '0' + j)
            c = static_cast<char>('0' + i);
        }
        const std::size_t t = index.at(tau);
        if (t > s) edges.push_back({s, t, pair_weight(rank, i, j)});
      }
  }
  return MomentGraph(rank, std::move(vertices), std::move(edges));
}

MomentGraph johnson(int n, int k) {
  require(k >= 1 && k < n && n <= 20, "johnson graph needs 1 <= k < n <= 20");
  const auto rank = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  const auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      subsets.push_back(current);
      return;
    }
    for (int x = next; x <= n; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);

  std::vector<std::string> vertices;
  for (const auto& s : subsets) vertices.push_back(join(s));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<int> only_a;
      std::vector<int> only_b;
      std::set_difference(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                          subsets[b].end(), std::back_inserter(only_a));
      std::set_difference(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                          subsets[a].end(), std::back_inserter(only_b));
      if (only_a.size() == 1) edges.push_back({a, b, pair_weight(rank, only_a[0], only_b[0])});
    }
  return MomentGraph(rank, std::move(vertices), std::move(edges));
}

MomentGraph gh_cycle(int d) {
  require(d >= 3, "gh_cycle needs d >= 3");
  std::vector<std::string> vertices;
  for (int i = 1; i <= d; ++i) vertices.push_back("p" + std::to_string(i));
  std::vector<Edge> edges;
  const auto count = static_cast<std::size_t>(d);
  for (std::size_t i = 0; i < count; ++i)
    edges.push_back({i, (i + 1) % count, LinearForm::variable(1, 1)});
  return MomentGraph(1, std::move(vertices), std::move(edges));
}

MomentGraph cp2_bad() {
  const int x[] = {1};
  const LinearForm weight_x = LinearForm::possibly_zero(1, x);
  const LinearForm zero = LinearForm::possibly_zero(1, {});
  return MomentGraph(1, {"p1", "p2", "p3"}, {{0, 1, weight_x}, {0, 2, zero}, {1, 2, weight_x}});
}

MomentGraph product(const MomentGraph& g1, const MomentGraph& g2) {
  const std::size_t rank = g1.rank() + g2.rank();
  const std::size_t n2 = g2.vertex_count();
  std::vector<std::string> vertices;
  for (const auto& a : g1.vertices())
    for (const auto& b : g2.vertices()) vertices.push_back(a + "," + b);
  const auto at = [&](std::size_t a, std::size_t b) { return a * n2 + b; };
  std::vector<Edge> edges;
  for (const auto& e : g1.edges())
    for (std::size_t b = 0; b < n2; ++b)
      edges.push_back({at(e.u, b), at(e.v, b), LinearForm::from_mask(rank, e.weight.mask())});
  for (std::size_t a = 0; a < g1.vertex_count(); ++a)
    for (const auto& e : g2.edges())
      edges.push_back(
          {at(a, e.u), at(a, e.v), LinearForm::from_mask(rank, e.weight.mask() << g1.rank())});
  return MomentGraph(rank, std::move(vertices), std::move(edges));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::hypercube: return "hypercube";
    case Family::permutahedron: return "permutahedron";
    case Family::johnson: return "johnson";
    case Family::gh_cycle: return "gh_cycle";
    case Family::cp2_bad: return "cp2_bad";
    case Family::product: return "product";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::complete, Family::hypercube, Family::permutahedron, Family::johnson,
                   Family::gh_cycle, Family::cp2_bad, Family::product})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::string ExampleSpec::label() const {
  switch (family) {
    case Family::complete:
    case Family::hypercube:
    case Family::permutahedron:
      return std::string(to_string(family)) + "(" + std::to_string(n) + ")";
    case Family::johnson:
      return "johnson(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Family::gh_cycle:
      return "gh_cycle(" + std::to_string(d) + ")";
    case Family::cp2_bad:
      return "cp2_bad()";
    case Family::product: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f.label();
      return out.empty() ? "product()" : out;
    }
  }
  return "unknown";
}

MomentGraph make(const ExampleSpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::hypercube: return hypercube(spec.n);
    case Family::permutahedron: return permutahedron(spec.n);
    case Family::johnson: return johnson(spec.n, spec.k);
    case Family::gh_cycle: return gh_cycle(spec.d);
    case Family::cp2_bad: return cp2_bad();
    case Family::product: {
      require(!spec.factors.empty(), "product needs at least one factor");
      MomentGraph g = make(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i) g = product(g, make(spec.factors[i]));
      return g;
    }
  }
  throw std::invalid_argument("unknown example family");
}

std::vector<CatalogEntry> catalog() {
  const auto of = [](Family f, int n = 0, int k = 0, int d = 0) {
    ExampleSpec s;
    s.family = f;
    s.n = n;
    s.k = k;
    s.d = d;
    return s;
  };
  const auto times = [&](ExampleSpec a, ExampleSpec b) {
    ExampleSpec s = of(Family::product);
    s.factors = {std::move(a), std::move(b)};
    return s;
  };
  using F = Family;
  const std::vector<std::pair<ExampleSpec, Mode>> specs = {
      {of(F::complete, 2), Mode::gkm},
      {of(F::complete, 3), Mode::gkm},
      {of(F::complete, 4), Mode::gkm},
      {of(F::hypercube, 1), Mode::gkm},
      {of(F::hypercube, 2), Mode::gkm},
      {of(F::hypercube, 3), Mode::gkm},
      {of(F::hypercube, 4), Mode::gkm},
      {of(F::permutahedron, 2), Mode::gkm},
      {of(F::permutahedron, 3), Mode::gkm},
      {of(F::johnson, 3, 1), Mode::gkm},
      {of(F::johnson, 4, 2), Mode::gkm},
      {of(F::gh_cycle, 0, 0, 3), Mode::gh},
      {of(F::gh_cycle, 0, 0, 4), Mode::gh},
      {of(F::gh_cycle, 0, 0, 5), Mode::gh},
      {times(of(F::complete, 3), of(F::hypercube, 1)), Mode::gkm},
      {times(of(F::gh_cycle, 0, 0, 4), of(F::hypercube, 1)), Mode::gh},
  };
  std::vector<CatalogEntry> out;
  for (const auto& [spec, mode] : specs) out.push_back({spec, mode, make(spec)});
  return out;
}

SymDiffInstance k33_instance() {
  std::vector<std::string> vertices = {"A1", "A2", "A3", "B1", "B2", "B3"};
  std::vector<SymDiffEdge> edges;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Subset label;
      if (i != j) {
        label = {std::min(i, j), std::max(i, j)};
      } else {
        for (int x = 1; x <= 3; ++x)
          if (x != i) label.push_back(x);
      }
      edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(2 + j),
                       std::move(label)});
    }
  return SymDiffInstance(3, std::move(vertices), std::move(edges));
}

}  // namespace gkm2::examples
