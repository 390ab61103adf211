#pragma once

#include "plumb_hf/graph.hpp"

namespace fixture {

// All -2 star with chains of lengths 1, 2, 4: the E8 diagram.
inline plumb::PlumbingGraph e8() {
  return plumb::build_graph(std::vector<int>(8, -2), {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

// Center -1 with single vertices -2, -3, -7.
inline plumb::PlumbingGraph sigma_237() { return plumb::build_graph({-1, -2, -3, -7}, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace fixture
