#include "plumb_hf/contfrac.hpp"

#include <string>

namespace plumb {

NegContinuedFraction::NegContinuedFraction(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::OutOfRange, "empty continued fraction");
  for (const auto t : coeffs_) {
    if (t > -2) throw Error(ErrorCode::OutOfRange, "coefficient " + std::to_string(t) + " > -2");
  }
}

Rat eval_coeffs(const std::vector<std::int64_t>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::DegenerateFraction, "empty continued fraction");
  Rat value(coeffs.back());
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    if (value.num() == 0) throw Error(ErrorCode::DegenerateFraction, "inner value is zero");
    value = Rat(*it) - value.reciprocal();
  }
  return value;
}

Rat eval_cf(const NegContinuedFraction& cf) { return eval_coeffs(cf.coeffs()); }

NegContinuedFraction expand_cf(const Rat& x) {
  if (x >= Rat(-1)) throw Error(ErrorCode::OutOfRange, x.str() + " is not < -1");
  std::vector<std::int64_t> coeffs;
  Rat rest = x;
  for (;;) {
    if (rest.is_integer()) {
      coeffs.push_back(rest.num());
      break;
    }
    const std::int64_t t = rest.floor();
    coeffs.push_back(t);
    // rest - t lies in (0, 1), so the next value is < -1.
    rest = -(rest - Rat(t)).reciprocal();
  }
  return NegContinuedFraction(std::move(coeffs));
}

ConvergentTable convergents(const NegContinuedFraction& cf) {
  const auto& t = cf.coeffs();
  const std::size_t p = t.size();
  ConvergentTable table;
  table.a.assign(p + 1, 0);
  table.b.assign(p + 1, 0);
  table.a[p] = 1;
  table.b[p] = 0;
  for (std::size_t l = p; l-- > 0;) {
    table.b[l] = -table.a[l + 1];
    table.a[l] = detail::checked_add(detail::checked_mul(-t[l], table.a[l + 1]), table.b[l + 1]);
  }
  return table;
}

Lemma1Result lemma1_check(const NegContinuedFraction& t, const NegContinuedFraction& s) {
  auto bumped = [](std::vector<std::int64_t> c) {
    c.back() += 1;
    return c;
  };
  const Rat bound(-1);
  Lemma1Result r;
  r.bumped_first = eval_coeffs(bumped(t.coeffs())).reciprocal() + eval_cf(s).reciprocal() <= bound;
  r.bumped_second = eval_cf(t).reciprocal() + eval_coeffs(bumped(s.coeffs())).reciprocal() <= bound;
  return r;
}

}  // namespace plumb
