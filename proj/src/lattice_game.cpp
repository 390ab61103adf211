#include "plumb_hf/lattice_game.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace plumb {

namespace {

int bound_of(const PlumbingGraph& g, Eigen::Index v) { return -g.weight(static_cast<VertexId>(v)); }

bool move_is_legal(const PlumbingGraph& g, const Association& n, VertexId v) {
  if (n(v) != -g.weight(v)) return false;
  for (const VertexId w : g.neighbors(v)) {
    if (n(w) + 2 > -g.weight(w)) return false;
  }
  return true;
}

Association moved(const PlumbingGraph& g, const Association& n, VertexId v) {
  Association out = n;
  out(v) = g.weight(v);
  for (const VertexId w : g.neighbors(v)) out(w) += 2;
  return out;
}

}  // namespace

bool is_association(const PlumbingGraph& g, const Association& n) {
  if (n.size() != g.size()) return false;
  for (Eigen::Index v = 0; v < n.size(); ++v) {
    const int m = g.weight(static_cast<VertexId>(v));
    if ((n(v) - m) % 2 != 0 || std::abs(n(v)) > -m) return false;
  }
  return true;
}

bool is_initial(const PlumbingGraph& g, const Association& n) {
  for (Eigen::Index v = 0; v < n.size(); ++v) {
    if (!(-bound_of(g, v) < n(v) && n(v) <= bound_of(g, v))) return false;
  }
  return true;
}

bool is_final(const PlumbingGraph& g, const Association& n) {
  for (Eigen::Index v = 0; v < n.size(); ++v) {
    if (!(-bound_of(g, v) <= n(v) && n(v) < bound_of(g, v))) return false;
  }
  return true;
}

std::vector<VertexId> legal_moves(const PlumbingGraph& g, const Association& n) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (move_is_legal(g, n, v)) out.push_back(v);
  }
  return out;
}

Association apply_move(const PlumbingGraph& g, const Association& n, VertexId v) {
  if (v < 0 || v >= g.size() || n.size() != g.size() || !move_is_legal(g, n, v)) {
    throw Error(ErrorCode::IllegalMove, "no legal change at vertex " + std::to_string(v));
  }
  return moved(g, n, v);
}

bool is_good_sequence(const PlumbingGraph& g, const GoodSequence& seq) {
  if (seq.states.empty() || seq.states.size() != seq.moved.size() + 1) return false;
  for (const auto& s : seq.states) {
    if (!is_association(g, s)) return false;
  }
  if (!is_initial(g, seq.states.front()) || !is_final(g, seq.states.back())) return false;
  for (std::size_t k = 0; k < seq.moved.size(); ++k) {
    const VertexId v = seq.moved[k];
    if (v < 0 || v >= g.size() || !move_is_legal(g, seq.states[k], v)) return false;
    if (!AssociationEqual{}(moved(g, seq.states[k], v), seq.states[k + 1])) return false;
  }
  return true;
}

GoodSequence reversed(const GoodSequence& seq) {
  GoodSequence out;
  for (auto it = seq.states.rbegin(); it != seq.states.rend(); ++it) out.states.push_back(-*it);
  out.moved.assign(seq.moved.rbegin(), seq.moved.rend());
  return out;
}

std::size_t AssociationHash::operator()(const Association& n) const noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (Eigen::Index i = 0; i < n.size(); ++i) {
    h ^= static_cast<std::uint32_t>(n(i));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

struct GameSolver::Memo {
  struct Entry {
    bool good = false;
    Association next;  // successor on a witness, when good and not final
    VertexId via = -1;
  };
  std::unordered_map<Association, Entry, AssociationHash, AssociationEqual> outcome;
};

GameSolver::GameSolver(PlumbingGraph g, SearchOptions options)
    : graph_(std::move(g)), options_(options), memo_(std::make_unique<Memo>()) {}
GameSolver::~GameSolver() = default;
GameSolver::GameSolver(GameSolver&&) noexcept = default;
GameSolver& GameSolver::operator=(GameSolver&&) noexcept = default;

std::size_t GameSolver::memo_size() const { return memo_->outcome.size(); }

std::optional<GoodSequence> GameSolver::complete(const Association& n0) {
  const PlumbingGraph& g = graph_;
  auto& outcome = memo_->outcome;

  struct Node {
    Association state;
    int parent;
    VertexId via;
  };
  std::vector<Node> nodes;
  std::unordered_map<Association, int, AssociationHash, AssociationEqual> visited;
  std::deque<int> queue;

  auto push = [&](Association s, int parent, VertexId via) {
    const int id = static_cast<int>(nodes.size());
    visited.emplace(s, id);
    nodes.push_back({std::move(s), parent, via});
    queue.push_back(id);
  };

  if (auto it = outcome.find(n0); it != outcome.end() && !it->second.good) return std::nullopt;
  push(n0, -1, -1);

  int hit = -1;
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Association& s = nodes[static_cast<std::size_t>(id)].state;
    if (is_final(g, s)) {
      hit = id;
      break;
    }
    if (auto it = outcome.find(s); it != outcome.end() && it->second.good) {
      hit = id;
      break;
    }
    auto moves = legal_moves(g, s);
    if (options_.order == MoveOrder::Descending) std::reverse(moves.begin(), moves.end());
    for (const VertexId v : moves) {
      Association t = moved(g, nodes[static_cast<std::size_t>(id)].state, v);
      if (visited.contains(t)) continue;
      if (auto it = outcome.find(t); it != outcome.end() && !it->second.good) continue;
      push(std::move(t), id, v);
    }
  }

  if (hit < 0) {
    for (auto& node : nodes) outcome.try_emplace(std::move(node.state), Memo::Entry{});
    return std::nullopt;
  }

  GoodSequence seq;
  for (int id = hit; id >= 0; id = nodes[static_cast<std::size_t>(id)].parent) {
    seq.states.push_back(nodes[static_cast<std::size_t>(id)].state);
    if (nodes[static_cast<std::size_t>(id)].via >= 0) seq.moved.push_back(nodes[static_cast<std::size_t>(id)].via);
  }
  std::reverse(seq.states.begin(), seq.states.end());
  std::reverse(seq.moved.begin(), seq.moved.end());
  // Continue along a previously recorded witness.
  for (auto it = outcome.find(seq.states.back()); it != outcome.end() && it->second.via >= 0;
       it = outcome.find(seq.states.back())) {
    seq.moved.push_back(it->second.via);
    seq.states.push_back(it->second.next);
  }

  for (std::size_t k = 0; k < seq.states.size(); ++k) {
    Memo::Entry entry{true, {}, -1};
    if (k + 1 < seq.states.size()) {
      entry.next = seq.states[k + 1];
      entry.via = seq.moved[k];
    }
    outcome.try_emplace(seq.states[k], std::move(entry));
  }
  return seq;
}

std::optional<GoodSequence> completes_to_good(const Association& n0, const PlumbingGraph& g, SearchOptions options) {
  return GameSolver(g, options).complete(n0);
}

std::uint64_t initial_count(const PlumbingGraph& g) {
  std::uint64_t total = 1;
  for (VertexId v = 0; v < g.size(); ++v) {
    const int choices = -g.weight(v);
    if (choices <= 0) return 0;
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(choices), &total)) {
      total = std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total;
}

namespace {

// Initials are parametrized by levels l(v) in [0, -m(v) - 1] with
// n(v) = 2 + m(v) + 2 l(v). Lexicographic order on levels equals
// lexicographic order on values.
class InitialEnumerator {
 public:
  explicit InitialEnumerator(const PlumbingGraph& g) : g_(g), top_(static_cast<std::size_t>(g.size())) {
    for (VertexId v = 0; v < g.size(); ++v) top_[static_cast<std::size_t>(v)] = -g.weight(v) - 1;
  }

  bool any() const {
    return std::all_of(top_.begin(), top_.end(), [](int t) { return t >= 0; });
  }

  Association value(const std::vector<int>& levels) const {
    Association n(g_.size());
    for (VertexId v = 0; v < g_.size(); ++v) n(v) = 2 + g_.weight(v) + 2 * levels[static_cast<std::size_t>(v)];
    return n;
  }

  bool interior(const std::vector<int>& levels) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] >= top_[i]) return false;
    }
    return true;
  }

  // Mixed-radix walk over levels with l(v) <= top(v) - shrink, lexicographic.
  // visit returns false to stop.
  template <typename Visit>
  void box(int shrink, Visit&& visit) const {
    if (std::any_of(top_.begin(), top_.end(), [shrink](int t) { return t - shrink < 0; })) return;
    std::vector<int> levels(top_.size(), 0);
    for (;;) {
      if (!visit(levels)) return;
      std::size_t i = levels.size();
      while (i > 0) {
        --i;
        if (levels[i] < top_[i] - shrink) {
          ++levels[i];
          break;
        }
        levels[i] = 0;
        if (i == 0) return;
      }
      if (levels.empty()) return;
    }
  }

  // All level vectors with the given sum, lexicographic.
  template <typename Visit>
  bool with_sum(int sum, Visit&& visit) const {
    std::vector<int> suffix_cap(top_.size() + 1, 0);
    for (std::size_t i = top_.size(); i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + top_[i];
    std::vector<int> levels(top_.size(), 0);
    return fill(0, sum, levels, suffix_cap, visit);
  }

  int max_sum() const {
    int s = 0;
    for (const int t : top_) s += t;
    return s;
  }

 private:
  template <typename Visit>
  bool fill(std::size_t pos, int remaining, std::vector<int>& levels, const std::vector<int>& cap,
            Visit& visit) const {
    if (pos == levels.size()) return remaining == 0 ? visit(levels) : true;
    const int lo = std::max(0, remaining - cap[pos + 1]);
    const int hi = std::min(top_[pos], remaining);
    for (int l = lo; l <= hi; ++l) {
      levels[pos] = l;
      if (!fill(pos + 1, remaining - l, levels, cap, visit)) return false;
    }
    levels[pos] = 0;
    return true;
  }

  const PlumbingGraph& g_;
  std::vector<int> top_;
};

bool lex_less(const Association& a, const Association& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

GoodInitialResult good_initial_count(const PlumbingGraph& g, const CountOptions& options) {
  if (const auto bad = bad_vertices(g); bad.size() > 1) {
    throw Error(ErrorCode::TooManyBadVertices, std::to_string(bad.size()) + " bad vertices");
  }
  GoodInitialResult result;
  InitialEnumerator initials(g);
  if (!initials.any()) return result;

  GameSolver solver(g, options.search);
  const auto limit = options.early_stop.value_or(std::numeric_limits<std::uint64_t>::max());

  auto test = [&](const std::vector<int>& levels, bool certified) {
    Association n = initials.value(levels);
    if (certified || solver.complete(n)) {
      result.good_initials.push_back(std::move(n));
      ++result.count;
    }
    return result.count < limit;
  };

  if (!options.early_stop) {
    initials.box(0, [&](const std::vector<int>& levels) { return test(levels, initials.interior(levels)); });
  } else {
    bool more = true;
    initials.box(1, [&](const std::vector<int>& levels) { return more = test(levels, true); });
    for (int sum = 0; more && sum <= initials.max_sum(); ++sum) {
      initials.with_sum(sum, [&](const std::vector<int>& levels) {
        if (initials.interior(levels)) return true;
        return more = test(levels, false);
      });
    }
    result.partial = !more;
    std::sort(result.good_initials.begin(), result.good_initials.end(), lex_less);
  }
  result.states_visited = solver.memo_size();
  return result;
}

std::int64_t d_lower_bound(const PlumbingGraph& g) {
  std::int64_t d = 1;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.weight(v) > -2) {
      throw Error(ErrorCode::WeightTooLarge, "vertex " + std::to_string(v) + " has weight " + std::to_string(g.weight(v)));
    }
    d = detail::checked_mul(d, static_cast<std::int64_t>(-1 - g.weight(v)));
  }
  return d;
}

PairingVector pairing_vector(const SphereQuadruple& q) {
  const auto first = convergents(expand_cf(q.first().ratio()));
  const auto second = convergents(expand_cf(q.second().ratio()));
  const std::size_t p = first.length();
  const std::size_t r = second.length();
  const std::int64_t a1 = first.a[0];
  const std::int64_t c1 = second.a[0];

  PairingVector n(static_cast<Eigen::Index>(1 + p + r));
  n(0) = -detail::checked_mul(a1, c1);
  for (std::size_t i = 0; i < p; ++i) n(static_cast<Eigen::Index>(1 + i)) = detail::checked_mul(c1, first.b[i]);
  for (std::size_t j = 0; j < r; ++j) n(static_cast<Eigen::Index>(1 + p + j)) = detail::checked_mul(a1, second.b[j]);
  return n;
}

std::size_t central_count(const GoodSequence& seq, VertexId center) {
  return static_cast<std::size_t>(std::count(seq.moved.begin(), seq.moved.end(), center));
}

bool greedy_path_completes(const PlumbingGraph& g, const Association& n0, MoveOrder order) {
  Association n = n0;
  std::unordered_set<Association, AssociationHash, AssociationEqual> seen;
  for (;;) {
    if (is_final(g, n)) return true;
    const auto moves = legal_moves(g, n);
    if (moves.empty() || !seen.insert(n).second) return false;
    n = moved(g, n, order == MoveOrder::Ascending ? moves.front() : moves.back());
  }
}

}  // namespace plumb
