#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "plumb_hf/contfrac.hpp"
#include "plumb_hf/lattice_game.hpp"
#include "plumb_hf/seifert.hpp"
#include "plumb_hf/survey.hpp"

using namespace plumb;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Overflow;
}

// prod(a) * (-m + sum b/a) == 1, with everything over the common denominator prod(a).
bool plumbing_condition_oracle(std::int64_t m, const std::vector<Ray>& rays) {
  std::int64_t product = 1;
  for (const auto& r : rays) product *= r.a;
  std::int64_t numerator = -m * product;
  for (const auto& r : rays) numerator += r.b * (product / r.a);
  return numerator == 1;
}

std::vector<int> ray_lengths(const PlumbingGraph& g) {
  std::vector<int> lengths;
  for (const VertexId first : g.neighbors(0)) {
    int len = 1;
    VertexId prev = 0, cur = first;
    for (;;) {
      VertexId next = -1;
      for (const VertexId w : g.neighbors(cur)) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

TEST_CASE("star_graph") {
  const SeifertInvariants poincare{-2, {{2, -1}, {3, -2}, {5, -4}}};
  CHECK(plumbing_condition_oracle(poincare.m, poincare.rays));
  const auto e8 = star_graph(poincare);
  CHECK(e8 == fixture::e8());
  CHECK(ray_lengths(e8) == std::vector<int>{1, 2, 4});

  const SeifertInvariants s237{-1, {{2, -1}, {3, -1}, {7, -1}}};
  CHECK(plumbing_condition_oracle(s237.m, s237.rays));
  CHECK(star_graph(s237) == fixture::sigma_237());

  CHECK(star_graph(SeifertInvariants{-1, {{2, -1}}}) == build_graph({-1, -2}, {{0, 1}}));
}

TEST_CASE("brieskorn") {
  const auto p = brieskorn({2, 3, 5});
  CHECK(p.m == -2);
  CHECK(p.rays == std::vector<Ray>{{2, -1}, {3, -2}, {5, -4}});
  CHECK(plumbing_condition_oracle(p.m, p.rays));

  const auto s237 = brieskorn({2, 3, 7});
  CHECK(s237.m == -1);
  CHECK(s237.rays == std::vector<Ray>{{2, -1}, {3, -1}, {7, -1}});

  const auto s2311 = brieskorn({2, 3, 11});
  CHECK(s2311.m == -2);
  CHECK(s2311.rays == std::vector<Ray>{{2, -1}, {3, -2}, {11, -9}});
  CHECK(plumbing_condition_oracle(s2311.m, s2311.rays));

  CHECK(code_of([] { brieskorn({2, 4, 5}); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { brieskorn({1, 3}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("every brieskorn star is a negative definite homology sphere with one bad vertex at most") {
  for (const auto& a : brieskorn_tuples(3, 30)) {
    const auto inv = brieskorn(a);
    CHECK(plumbing_condition_oracle(inv.m, inv.rays));
    CHECK(inv.satisfies_plumbing_condition());
    for (const auto& r : inv.rays) CHECK((-r.a < r.b && r.b < 0));
    const auto g = star_graph(inv);
    CHECK(is_negative_definite(g));
    CHECK(std::abs(determinant(g)) == 1);
    const auto bad = bad_vertices(g);
    CHECK(bad.size() <= 1);
    if (!bad.empty()) CHECK(bad.front() == 0);
  }
  for (const auto& a : brieskorn_tuples(4, 15)) {
    const auto g = star_graph(brieskorn(a));
    CHECK(std::abs(determinant(g)) == 1);
  }
}

TEST_CASE("check_quadruple") {
  CHECK(check_quadruple({2, -1, 3, -1}));
  CHECK(check_quadruple({3, -2, 4, -1}));
  CHECK_FALSE(check_quadruple({2, -1, 4, -1}));
}

TEST_CASE("reduce_quadruple") {
  const SphereQuadruple q{5, -3, 3, -1};
  CHECK(check_quadruple(q));
  const auto r = reduce_quadruple(q);
  CHECK(r == SphereQuadruple{3, -1, 2, -1});
  CHECK(check_quadruple(r));
  // (3,-1,2,-1) already carries a ray with ratio exactly -2.
  CHECK(code_of([&] { reduce_quadruple(r); }) == ErrorCode::BaseCase);
  CHECK(code_of([] { reduce_quadruple({2, -1, 3, -1}); }) == ErrorCode::BaseCase);
  CHECK(code_of([] { reduce_quadruple({2, -1, 4, -1}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("iterated reduction shrinks to the base family") {
  for (const auto& q : enumerate_quadruples(40)) {
    SphereQuadruple cur = q;
    int steps = 0;
    for (;;) {
      try {
        const auto next = reduce_quadruple(cur);
        CHECK(check_quadruple(next));
        CHECK(next.a1 + next.a2 < cur.a1 + cur.a2);
        const auto c = cur.canonical();
        CHECK((0 < next.a1 && next.a1 < c.a1));
        CHECK((0 < next.a2 && next.a2 < c.a2));
        cur = next;
        ++steps;
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::BaseCase);
        break;
      }
    }
    CHECK(steps < q.a1 + q.a2);
    const auto base = cur.canonical();
    CHECK(base.a1 == 2);
    CHECK(base.b1 == -1);
    CHECK(base.a2 == 1 - 2 * base.b2);
  }
}

TEST_CASE("exactly one ray ratio is >= -2") {
  for (const auto& q : enumerate_quadruples(40)) {
    const bool first = q.first().ratio() >= Rat(-2);
    const bool second = q.second().ratio() >= Rat(-2);
    CHECK(first != second);
    CHECK(first);  // display order
  }
}

TEST_CASE("enumerate_quadruples") {
  const auto five = enumerate_quadruples(5);
  CHECK(std::find(five.begin(), five.end(), SphereQuadruple{2, -1, 3, -1}) != five.end());
  const auto eight = enumerate_quadruples(8);
  CHECK(std::find(eight.begin(), eight.end(), SphereQuadruple{3, -2, 4, -1}) != eight.end());
  for (const auto& q : eight) CHECK(check_quadruple(q));
}

TEST_CASE("inverse-move closure equals the brute-force scan") {
  for (const std::int64_t bound : {5, 8, 13, 20, 30}) {
    const auto closure = enumerate_quadruples(bound);
    const auto brute = oracle::brute_quadruples(bound);
    CHECK(std::set<SphereQuadruple>(closure.begin(), closure.end()) == brute);
    CHECK(std::is_sorted(closure.begin(), closure.end()));
  }
}

TEST_CASE("quadruple stars are S^3 diagrams") {
  for (const auto& q : enumerate_quadruples(20)) {
    const auto g = star_graph(q);
    CHECK(std::abs(determinant(g)) == 1);
    CHECK(is_negative_definite(g));
    CHECK(good_initial_count(g).count == 1);
  }
}

TEST_CASE("bumped Lemma 1 fractions never degenerate on the bound-20 quadruples") {
  for (const auto& q : enumerate_quadruples(20)) {
    CAPTURE(q.a1);
    CAPTURE(q.b1);
    CAPTURE(q.a2);
    CAPTURE(q.b2);
    const auto t = expand_cf(q.first().ratio());
    const auto s = expand_cf(q.second().ratio());
    Lemma1Result r;
    CHECK_NOTHROW(r = lemma1_check(t, s));
    CHECK(r.bumped_first);
    CHECK(r.bumped_second);
  }
}
