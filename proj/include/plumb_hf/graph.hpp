#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace plumb {

using VertexId = int;
using Weight = int;
using Edge = std::pair<VertexId, VertexId>;

/// Weighted plumbing forest. Vertex ids are dense (0..size()-1); the
/// empty graph is a legal value and stands for S^3.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  /// Validates and canonicalizes: edges are stored as (min, max) pairs in
  /// sorted order. Throws BadId, DuplicateEdge or CycleDetected.
  static PlumbingGraph build(std::vector<Weight> weights, std::vector<Edge> edges,
                             std::string name = {});

  Eigen::Index size() const { return static_cast<Eigen::Index>(weights_.size()); }
  bool empty() const { return weights_.empty(); }

  Weight weight(VertexId v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int component_count() const;
  bool connected() const { return component_count() <= 1; }

  /// Canonical text form "w0,w1,...|a-b,c-d,..." used for hashing.
  std::string canonical_string() const;
  /// 64-bit FNV-1a of canonical_string(), hex encoded.
  std::string canonical_hash() const;

  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::string name_;
};

inline PlumbingGraph build_graph(std::vector<Weight> weights, std::vector<Edge> edges) {
  return PlumbingGraph::build(std::move(weights), std::move(edges));
}

template <typename Scalar>
using IntersectionMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// M[v][v] = m(v), M[v][w] = 1 for each edge, 0 elsewhere.
template <typename Scalar = std::int64_t>
IntersectionMatrix<Scalar> intersection_matrix(const PlumbingGraph& g) {
  IntersectionMatrix<Scalar> m = IntersectionMatrix<Scalar>::Zero(g.size(), g.size());
  for (Eigen::Index v = 0; v < g.size(); ++v) m(v, v) = static_cast<Scalar>(g.weight(static_cast<VertexId>(v)));
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = Scalar(1);
    m(b, a) = Scalar(1);
  }
  return m;
}

std::int64_t determinant(const PlumbingGraph& g);

/// |det M(G)| == 1. Throws Disconnected for forests with several components.
bool is_homology_sphere(const PlumbingGraph& g);

bool is_negative_definite(const PlumbingGraph& g);

/// Vertices with m(v) > -degree(v), ascending.
std::vector<VertexId> bad_vertices(const PlumbingGraph& g);

/// Repeatedly blows down -1 vertices of degree <= 2 until none remain.
PlumbingGraph blow_down(const PlumbingGraph& g);

}  // namespace plumb
