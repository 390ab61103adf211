#include "plumb_hf/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "plumb_hf/determinant.hpp"
#include "plumb_hf/error.hpp"

namespace plumb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadId: return "BadId";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CycleCreated: return "CycleCreated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateFraction: return "DegenerateFraction";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonNegDefinite: return "NonNegDefinite";
    case ErrorCode::BaseCase: return "BaseCase";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::TooManyBadVertices: return "TooManyBadVertices";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace {

// Union-find over vertex ids, used for cycle and component detection.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PlumbingGraph PlumbingGraph::build(std::vector<Weight> weights, std::vector<Edge> edges, std::string name) {
  const auto n = static_cast<VertexId>(weights.size());
  std::set<Edge> seen;
  DisjointSets sets(weights.size());
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::BadId, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw Error(ErrorCode::CycleDetected, "self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") repeated");
    }
    if (!sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
      throw Error(ErrorCode::CycleDetected, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") closes a cycle");
    }
  }

  PlumbingGraph g;
  g.weights_ = std::move(weights);
  g.edges_.assign(seen.begin(), seen.end());
  g.adjacency_.resize(g.weights_.size());
  for (const auto& [a, b] : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.name_ = std::move(name);
  return g;
}

int PlumbingGraph::component_count() const {
  // Forest: components = vertices - edges.
  return static_cast<int>(weights_.size()) - static_cast<int>(edges_.size());
}

std::string PlumbingGraph::canonical_string() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(weights_[i]);
  }
  s += '|';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges_[i].first) + '-' + std::to_string(edges_[i].second);
  }
  return s;
}

std::string PlumbingGraph::canonical_hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char c : canonical_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::int64_t determinant(const PlumbingGraph& g) {
  return bareiss_determinant(intersection_matrix<std::int64_t>(g));
}

bool is_homology_sphere(const PlumbingGraph& g) {
  if (!g.connected()) {
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(g.component_count()) + " components");
  }
  const auto det = determinant(g);
  return det == 1 || det == -1;
}

bool is_negative_definite(const PlumbingGraph& g) {
  const auto minors = leading_principal_minors(intersection_matrix<std::int64_t>(g));
  if (static_cast<Eigen::Index>(minors.size()) < g.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // Sign of the (k+1)-th leading minor must be (-1)^(k+1).
    const bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

std::vector<VertexId> bad_vertices(const PlumbingGraph& g) {
  std::vector<VertexId> bad;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.weight(v) > -g.degree(v)) bad.push_back(v);
  }
  return bad;
}

PlumbingGraph blow_down(const PlumbingGraph& g) {
  std::vector<Weight> weights = g.weights();
  std::vector<Edge> edges = g.edges();

  auto neighbors_of = [&edges](VertexId v) {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges) {
      if (a == v) out.push_back(b);
      else if (b == v) out.push_back(a);
    }
    return out;
  };

  for (;;) {
    VertexId target = -1;
    std::vector<VertexId> nbrs;
    for (VertexId v = 0; v < static_cast<VertexId>(weights.size()); ++v) {
      if (weights[static_cast<std::size_t>(v)] != -1) continue;
      auto adj = neighbors_of(v);
      if (adj.size() <= 2) {
        target = v;
        nbrs = std::move(adj);
        break;
      }
    }
    if (target < 0) break;

    std::erase_if(edges, [target](const Edge& e) { return e.first == target || e.second == target; });
    for (const VertexId w : nbrs) weights[static_cast<std::size_t>(w)] += 1;
    if (nbrs.size() == 2) {
      const Edge joined{std::min(nbrs[0], nbrs[1]), std::max(nbrs[0], nbrs[1])};
      if (std::find(edges.begin(), edges.end(), joined) != edges.end()) {
        throw Error(ErrorCode::CycleCreated, "blowing down vertex " + std::to_string(target) +
                                                 " would create a double edge");
      }
      edges.push_back(joined);
    }

    // Remove the vertex and shift higher ids down to keep them dense.
    weights.erase(weights.begin() + target);
    for (auto& [a, b] : edges) {
      if (a > target) --a;
      if (b > target) --b;
    }
  }
  return PlumbingGraph::build(std::move(weights), std::move(edges), g.name());
}

}  // namespace plumb
