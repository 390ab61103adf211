#include "plumb_hf/seifert.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace plumb {

namespace {

// Appends the ray path for a/b to weights/edges, attached to `center`.
void append_ray(const Ray& ray, VertexId center, std::vector<Weight>& weights, std::vector<Edge>& edges) {
  const auto cf = expand_cf(ray.ratio());
  VertexId prev = center;
  for (const auto t : cf.coeffs()) {
    const auto v = static_cast<VertexId>(weights.size());
    weights.push_back(static_cast<Weight>(t));
    edges.emplace_back(prev, v);
    prev = v;
  }
}

// x with x * a == 1 (mod modulus), in [0, modulus).
std::int64_t mod_inverse(std::int64_t a, std::int64_t modulus) {
  std::int64_t r0 = modulus, r1 = ((a % modulus) + modulus) % modulus;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw Error(ErrorCode::NotCoprime, std::to_string(a) + " not invertible mod " + std::to_string(modulus));
  return ((s0 % modulus) + modulus) % modulus;
}

std::string tuple_string(const std::vector<std::int64_t>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace

bool SeifertInvariants::satisfies_plumbing_condition() const {
  Rat e(-m);
  std::int64_t product = 1;
  for (const auto& r : rays) {
    e += Rat(r.b, r.a);
    product = detail::checked_mul(product, r.a);
  }
  return e * Rat(product) == Rat(1);
}

PlumbingGraph star_graph(const SeifertInvariants& inv) {
  std::vector<Weight> weights{static_cast<Weight>(inv.m)};
  std::vector<Edge> edges;
  for (const auto& ray : inv.rays) append_ray(ray, 0, weights, edges);
  return PlumbingGraph::build(std::move(weights), std::move(edges));
}

PlumbingGraph star_graph(const SphereQuadruple& q) {
  return star_graph(SeifertInvariants{-1, {q.first(), q.second()}});
}

SeifertInvariants brieskorn(const std::vector<std::int64_t>& multiplicities) {
  if (multiplicities.empty()) throw Error(ErrorCode::OutOfRange, "no multiplicities given");
  for (const auto a : multiplicities) {
    if (a < 2) throw Error(ErrorCode::OutOfRange, "multiplicity " + std::to_string(a) + " < 2");
  }
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    for (std::size_t j = i + 1; j < multiplicities.size(); ++j) {
      if (std::gcd(multiplicities[i], multiplicities[j]) != 1) {
        throw Error(ErrorCode::NotCoprime, tuple_string(multiplicities) + ": " + std::to_string(multiplicities[i]) +
                                               " and " + std::to_string(multiplicities[j]) + " share a factor");
      }
    }
  }

  std::int64_t product = 1;
  for (const auto a : multiplicities) product = detail::checked_mul(product, a);

  // b_i * (product / a_i) == 1 (mod a_i), then shift into (-a_i, 0).
  SeifertInvariants inv;
  std::int64_t sum = 0;
  for (const auto a : multiplicities) {
    const std::int64_t cofactor = product / a;
    const std::int64_t b = mod_inverse(cofactor, a) - a;
    inv.rays.push_back({a, b});
    sum = detail::checked_add(sum, detail::checked_mul(b, cofactor));
  }
  // -m * product + sum == 1.
  const std::int64_t numerator = sum - 1;
  if (numerator % product != 0) {
    throw Error(ErrorCode::OutOfRange, "center weight is not integral for " + tuple_string(multiplicities));
  }
  inv.m = numerator / product;
  if (inv.m >= 0 || !is_negative_definite(star_graph(inv))) {
    throw Error(ErrorCode::NonNegDefinite, "star for " + tuple_string(multiplicities) + " is not negative definite");
  }
  return inv;
}

SphereQuadruple SphereQuadruple::canonical() const {
  return first().ratio() >= Rat(-2) ? *this : swapped();
}

bool check_quadruple(const SphereQuadruple& q) {
  if (q.a1 <= 0 || q.a2 <= 0 || q.b1 >= 0 || q.b2 >= 0) return false;
  using detail::checked_add;
  using detail::checked_mul;
  return checked_add(checked_add(checked_mul(q.a1, q.a2), checked_mul(q.a2, q.b1)), checked_mul(q.a1, q.b2)) == 1;
}

SphereQuadruple reduce_quadruple(const SphereQuadruple& q) {
  if (!check_quadruple(q)) throw Error(ErrorCode::OutOfRange, "not a sphere quadruple");
  const SphereQuadruple c = q.canonical();
  if (c.first().ratio() == Rat(-2)) throw Error(ErrorCode::BaseCase, "ray ratio is exactly -2");
  return {-c.b1, 2 * c.b1 + c.a1, c.a2 + c.b2, c.b2};
}

std::vector<SphereQuadruple> enumerate_quadruples(std::int64_t bound) {
  std::set<SphereQuadruple> found;
  std::deque<SphereQuadruple> frontier;
  for (std::int64_t k = 1; 2 + 2 * k + 1 <= bound; ++k) {
    const SphereQuadruple base{2, -1, 2 * k + 1, -k};
    if (found.insert(base).second) frontier.push_back(base);
  }
  // Each inverse move strictly grows a1 + a2, so the bound prunes the closure.
  while (!frontier.empty()) {
    const SphereQuadruple q = frontier.front();
    frontier.pop_front();
    for (const auto& src : {q, q.swapped()}) {
      const SphereQuadruple up{src.b1 + 2 * src.a1, -src.a1, src.a2 - src.b2, src.b2};
      if (up.a1 + up.a2 > bound) continue;
      const auto c = up.canonical();
      if (found.insert(c).second) frontier.push_back(c);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace plumb
