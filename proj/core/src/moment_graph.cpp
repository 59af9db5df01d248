#include "gkm2/moment_graph.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>

namespace gkm2 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t vertex_bound(std::size_t rank, Mode mode) {
  const std::size_t nonzero = rank >= 63 ? ~std::size_t{0} >> 1 : (std::size_t{1} << rank) - 1;
  return mode == Mode::gkm ? nonzero : 2 * nonzero;
}

void check_degree_bound(const MomentGraph& g, std::size_t i, Mode mode, ValidationReport& report) {
  const std::size_t bound = vertex_bound(g.rank(), mode);
  if (g.incident(i).size() > bound)
    report.violations.push_back({g.vertex(i), "degree " + std::to_string(g.incident(i).size()) +
                                                  " exceeds bound " + std::to_string(bound)});
}

// Weight multiplicities at vertex i, in order of first appearance.
std::vector<std::pair<LinearForm, unsigned>> weight_counts(const MomentGraph& g, std::size_t i) {
  std::vector<std::pair<LinearForm, unsigned>> counts;
  for (std::size_t e : g.incident(i)) {
    const LinearForm& w = g.edges()[e].weight;
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& entry) { return entry.first == w; });
    if (it == counts.end())
      counts.emplace_back(w, 1U);
    else
      ++it->second;
  }
  return counts;
}

}  // namespace

MomentGraph::MomentGraph(std::size_t rank, std::vector<std::string> vertices,
                         std::vector<Edge> edges)
    : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (rank_ == 0 || rank_ > LinearForm::kMaxRank)
    throw GraphError("rank must be between 1 and " + std::to_string(LinearForm::kMaxRank));
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw GraphError("duplicate vertex id '" + vertices_[i] + "'");
  }
  incident_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loop at vertex '" + vertices_[e.u] + "'");
    if (e.weight.rank() != rank_) throw GraphError("edge weight rank differs from graph rank");
    incident_[e.u].push_back(k);
    incident_[e.v].push_back(k);
  }
}

std::size_t MomentGraph::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

bool MomentGraph::has_vertex(std::string_view id) const { return index_.contains(id); }

bool MomentGraph::degenerate() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight.is_zero(); });
}

std::vector<LinearForm> MomentGraph::distinct_weights() const {
  std::vector<LinearForm> out;
  for (const auto& e : edges_)
    if (std::find(out.begin(), out.end(), e.weight) == out.end()) out.push_back(e.weight);
  return out;
}

std::vector<std::vector<std::size_t>> MomentGraph::components() const {
  std::vector<int> label(vertices_.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members{start};
    label[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t e : incident_[members[head]]) {
        const std::size_t w = other_end(edges_[e], members[head]);
        if (label[w] < 0) {
          label[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

MomentGraph parse_graph(std::string_view document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& err) {
    throw GraphError(std::string("malformed JSON: ") + err.what());
  }
  try {
    if (!doc.is_object()) throw GraphError("graph document must be an object");
    for (const char* key : {"rank", "vertices", "edges"})
      if (!doc.contains(key)) throw GraphError(std::string("missing key '") + key + "'");
    const auto& rank_node = doc.at("rank");
    if (!rank_node.is_number_integer() || rank_node.get<long long>() < 1)
      throw GraphError("rank must be a positive integer");
    const auto rank = rank_node.get<std::size_t>();

    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_string()) throw GraphError("vertex ids must be strings");
      vertices.push_back(v.get<std::string>());
    }
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (!index.emplace(vertices[i], i).second)
        throw GraphError("duplicate vertex id '" + vertices[i] + "'");

    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("weight"))
        throw GraphError("edge must have keys u, v, weight");
      const auto lookup = [&](const ordered_json& node) {
        if (!node.is_string()) throw GraphError("edge endpoints must be strings");
        auto it = index.find(node.get<std::string>());
        if (it == index.end())
          throw GraphError("unknown vertex '" + node.get<std::string>() + "' in edge");
        return it->second;
      };
      std::vector<int> support;
      for (const auto& x : e.at("weight")) {
        if (!x.is_number_integer()) throw GraphError("weight entries must be integers");
        const auto index_value = x.get<long long>();
        if (index_value < 1 || static_cast<std::size_t>(index_value) > rank)
          throw GraphError("variable index " + std::to_string(index_value) + " out of range");
        support.push_back(static_cast<int>(index_value));
      }
      std::sort(support.begin(), support.end());
      if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw GraphError("repeated variable index in weight");
      edges.push_back({lookup(e.at("u")), lookup(e.at("v")),
                       LinearForm::possibly_zero(rank, support)});
    }
    return MomentGraph(rank, std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& err) {
    throw GraphError(std::string("schema error: ") + err.what());
  } catch (const AlgebraError& err) {
    throw GraphError(err.what());
  }
}

std::string serialize_graph(const MomentGraph& g) {
  ordered_json doc;
  doc["rank"] = g.rank();
  doc["vertices"] = g.vertices();
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json entry;
    entry["u"] = g.vertex(e.u);
    entry["v"] = g.vertex(e.v);
    entry["weight"] = e.weight.support();
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string_view to_string(Mode mode) { return mode == Mode::gkm ? "gkm" : "gh"; }

Mode parse_mode(std::string_view text) {
  if (text == "gkm") return Mode::gkm;
  if (text == "gh") return Mode::gh;
  throw std::invalid_argument("mode must be 'gkm' or 'gh'");
}

ValidationReport validate_mod2_gkm(const MomentGraph& g) {
  ValidationReport report{Mode::gkm, true, {}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (const auto& [weight, count] : weight_counts(g, i)) {
      if (weight.is_zero())
        report.violations.push_back({g.vertex(i), "zero weight"});
      else if (count > 1)
        report.violations.push_back({g.vertex(i), "repeated weight " + weight.to_string()});
    }
    check_degree_bound(g, i, Mode::gkm, report);
  }
  report.valid = report.violations.empty();
  return report;
}

ValidationReport validate_mod2_gh(const MomentGraph& g) {
  ValidationReport report{Mode::gh, true, {}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (const auto& [weight, count] : weight_counts(g, i)) {
      if (weight.is_zero())
        report.violations.push_back({g.vertex(i), "zero weight"});
      else if (count > 2)
        report.violations.push_back({g.vertex(i), "weight " + weight.to_string() + " appears " +
                                                      std::to_string(count) + " times"});
    }
    check_degree_bound(g, i, Mode::gh, report);
  }
  if (report.violations.empty()) {
    for (const auto& weight : g.distinct_weights()) {
      try {
        alpha_components(g, weight);
      } catch (const GraphError& err) {
        report.violations.push_back({"", err.what()});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

ValidationReport validate(const MomentGraph& g, Mode mode) {
  return mode == Mode::gkm ? validate_mod2_gkm(g) : validate_mod2_gh(g);
}

std::vector<AlphaComponent> alpha_components(const MomentGraph& g, const LinearForm& alpha) {
  const auto& edges = g.edges();
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<AlphaComponent> out;

  const auto alpha_edges_at = [&](std::size_t v) {
    std::vector<std::size_t> found;
    for (std::size_t e : g.incident(v))
      if (edges[e].weight == alpha) found.push_back(e);
    return found;
  };

  for (std::size_t seed = 0; seed < edges.size(); ++seed) {
    if (edges[seed].weight != alpha || label[edges[seed].u] >= 0) continue;
    const int id = static_cast<int>(out.size());
    AlphaComponent comp;
    comp.weight = alpha;

    // Collect members.
    std::vector<std::size_t> members{edges[seed].u};
    label[edges[seed].u] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t e : alpha_edges_at(members[head])) {
        const std::size_t w = g.other_end(edges[e], members[head]);
        if (label[w] < 0) {
          label[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comp.vertices = members;

    std::size_t local = 0;
    for (std::size_t v : members) {
      const std::size_t here = alpha_edges_at(v).size();
      if (local == 0) local = here;
      if (here != local)
        throw GraphError("mixed local degree in component of weight " + alpha.to_string() +
                         " at vertex '" + g.vertex(v) + "'");
      for (std::size_t e : alpha_edges_at(v))
        if (edges[e].u == v) comp.edges.push_back(e);
    }
    if (local > 2)
      throw GraphError("local degree " + std::to_string(local) + " in component of weight " +
                       alpha.to_string());
    comp.local_degree = static_cast<unsigned>(local);
    std::sort(comp.edges.begin(), comp.edges.end());

    // Breadth-first spanning tree from the lexicographically least id.
    const std::size_t root = *std::min_element(
        members.begin(), members.end(),
        [&](std::size_t a, std::size_t b) { return g.vertex(a) < g.vertex(b); });
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : alpha_edges_at(v)) {
        const std::size_t w = g.other_end(edges[e], v);
        if (seen[w]) continue;
        seen[w] = true;
        comp.tree_edges.push_back(e);
        queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gkm2
