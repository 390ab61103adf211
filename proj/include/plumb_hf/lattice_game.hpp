#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "plumb_hf/error.hpp"
#include "plumb_hf/graph.hpp"
#include "plumb_hf/seifert.hpp"

namespace plumb {

/// Integer label per vertex with n(v) = m(v) mod 2 and |n(v)| <= -m(v).
using Association = Eigen::VectorXi;

bool is_association(const PlumbingGraph& g, const Association& n);

/// m(v) < n(v) <= -m(v) everywhere.
bool is_initial(const PlumbingGraph& g, const Association& n);
/// m(v) <= n(v) < -m(v) everywhere.
bool is_final(const PlumbingGraph& g, const Association& n);

/// Vertices at n(v) = -m(v) whose move keeps every neighbor within bounds.
std::vector<VertexId> legal_moves(const PlumbingGraph& g, const Association& n);

/// n'(v) = m(v), neighbors +2. Throws IllegalMove.
Association apply_move(const PlumbingGraph& g, const Association& n, VertexId v);

/// States n_0..n_N and the vertex changed at each step.
struct GoodSequence {
  std::vector<Association> states;
  std::vector<VertexId> moved;

  std::size_t length() const { return moved.size(); }
};

/// Replays seq against g: initial start, final end, every step a legal move
/// at the recorded vertex.
bool is_good_sequence(const PlumbingGraph& g, const GoodSequence& seq);

/// -n_N, ..., -n_0 with the moved vertices in reverse order.
GoodSequence reversed(const GoodSequence& seq);

enum class MoveOrder { Ascending, Descending };

struct SearchOptions {
  MoveOrder order = MoveOrder::Ascending;
};

struct AssociationHash {
  std::size_t operator()(const Association& n) const noexcept;
};
struct AssociationEqual {
  bool operator()(const Association& a, const Association& b) const noexcept {
    return a.size() == b.size() && (a.array() == b.array()).all();
  }
};

/// Breadth-first good-sequence search over one graph. Outcomes are memoized
/// across calls: every state of an exhausted search is recorded dead, and every
/// state on a found witness is recorded good with its successor. Memory grows
/// with the number of distinct states visited; nothing is evicted.
class GameSolver {
 public:
  explicit GameSolver(PlumbingGraph g, SearchOptions options = {});
  ~GameSolver();
  GameSolver(GameSolver&&) noexcept;
  GameSolver& operator=(GameSolver&&) noexcept;

  const PlumbingGraph& graph() const { return graph_; }

  /// Witness from n0 to any final association, or nullopt.
  std::optional<GoodSequence> complete(const Association& n0);

  std::size_t memo_size() const;

 private:
  struct Memo;
  PlumbingGraph graph_;
  SearchOptions options_;
  std::unique_ptr<Memo> memo_;
};

std::optional<GoodSequence> completes_to_good(const Association& n0, const PlumbingGraph& g,
                                              SearchOptions options = {});

/// Number of initial associations, prod(-m(v)), saturating at UINT64_MAX.
std::uint64_t initial_count(const PlumbingGraph& g);

struct GoodInitialResult {
  std::uint64_t count = 0;
  bool partial = false;  // early stop hit before the enumeration finished
  std::vector<Association> good_initials;  // lexicographic
  std::size_t states_visited = 0;
};

struct CountOptions {
  std::optional<std::uint64_t> early_stop;
  SearchOptions search;
};

/// Counts initial associations completing to good sequences. Throws
/// TooManyBadVertices when more than one vertex is bad.
///
/// A full count scans every initial in lexicographic order. With early_stop,
/// candidates come first from the box m < n < -m (certified good without
/// search) and then by increasing total distance from the minimal initial 2+m,
/// stopping at the requested number.
GoodInitialResult good_initial_count(const PlumbingGraph& g, const CountOptions& options = {});

/// prod(-1 - m(w)). Throws WeightTooLarge when some weight is > -2.
std::int64_t d_lower_bound(const PlumbingGraph& g);

/// <x|y> = sum x(w) y(w), exact. Throws DimensionMismatch.
template <typename A, typename B>
std::int64_t pairing(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "sizes " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  return x.template cast<std::int64_t>().dot(y.template cast<std::int64_t>());
}

using PairingVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// n(v) = -A1 C1, n(w1_i) = C1 B_i, n(w2_j) = A1 D_j over the vertices of
/// star_graph(q), from the convergent tables of the two rays.
PairingVector pairing_vector(const SphereQuadruple& q);

/// Occurrences of `center` among the moved vertices.
std::size_t central_count(const GoodSequence& seq, VertexId center);

/// Follows the first legal move (in the given order) until stuck. Returns
/// true when the maximal path ends at a final association.
bool greedy_path_completes(const PlumbingGraph& g, const Association& n0, MoveOrder order = MoveOrder::Ascending);

}  // namespace plumb
