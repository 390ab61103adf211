#pragma once

// Independent reference implementations used only by tests.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "plumb_hf/graph.hpp"
#include "plumb_hf/seifert.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix to_rows(const plumb::PlumbingGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) m[v][v] = g.weight(static_cast<int>(v));
  for (const auto& [a, b] : g.edges()) {
    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  return m;
}

// Laplace expansion along the first row.
inline std::int64_t cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const std::int64_t sign = (c % 2 == 0) ? 1 : -1;
    det += sign * m[0][c] * cofactor_det(minor);
  }
  return det;
}

inline bool minors_negative_definite(const Matrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Matrix lead(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    }
    const auto d = cofactor_det(lead);
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

// Every (a1, b1, a2, b2) with a1 + a2 <= bound satisfying a1 a2 + a2 b1 + a1 b2 = 1,
// put in display order a1/b1 >= -2 (i.e. a1 <= -2 b1).
inline std::set<plumb::SphereQuadruple> brute_quadruples(std::int64_t bound) {
  std::set<plumb::SphereQuadruple> out;
  for (std::int64_t a1 = 1; a1 < bound; ++a1) {
    for (std::int64_t a2 = 1; a1 + a2 <= bound; ++a2) {
      for (std::int64_t b1 = -a1 - 2; b1 < 0; ++b1) {
        for (std::int64_t b2 = -a2 - 2; b2 < 0; ++b2) {
          if (a1 * a2 + a2 * b1 + a1 * b2 != 1) continue;
          plumb::SphereQuadruple q{a1, b1, a2, b2};
          if (!(a1 <= -2 * b1)) q = q.swapped();
          out.insert(q);
        }
      }
    }
  }
  return out;
}

// Plain depth-first reachability over the association state space with no
// cross-start memo: does some move sequence from n reach a final state?
inline bool reaches_final(const plumb::PlumbingGraph& g, std::vector<int> n, std::set<std::vector<int>>& seen) {
  if (!seen.insert(n).second) return false;
  bool final_state = true;
  for (int v = 0; v < g.size(); ++v) {
    if (n[static_cast<std::size_t>(v)] == -g.weight(v)) final_state = false;
  }
  if (final_state) return true;
  for (int v = 0; v < g.size(); ++v) {
    if (n[static_cast<std::size_t>(v)] != -g.weight(v)) continue;
    bool ok = true;
    for (const int w : g.neighbors(v)) ok = ok && n[static_cast<std::size_t>(w)] + 2 <= -g.weight(w);
    if (!ok) continue;
    auto next = n;
    next[static_cast<std::size_t>(v)] = g.weight(v);
    for (const int w : g.neighbors(v)) next[static_cast<std::size_t>(w)] += 2;
    if (reaches_final(g, next, seen)) return true;
  }
  return false;
}

// Count of initial associations from which some path reaches a final state,
// by direct enumeration of every initial.
inline std::uint64_t brute_good_initials(const plumb::PlumbingGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::uint64_t count = 0;
  std::vector<int> cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::set<std::vector<int>> seen;
      if (reaches_final(g, cur, seen)) ++count;
      return;
    }
    const int m = g.weight(static_cast<int>(i));
    for (int x = m + 2; x <= -m; x += 2) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
