#include "ietsaf/poly.hpp"

namespace ietsaf {

namespace {

template <class C>
DivRem<C> divrem_impl(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::vector<C> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly<C>{}, a};
  std::vector<C> quo(static_cast<std::size_t>(da - db + 1));
  const C lead = b.lead();
  for (int k = da; k >= db; --k) {
    C q = rem[k] / lead;
    if (q == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
  }
  return {Poly<C>(std::move(quo)), Poly<C>(std::move(rem))};
}

RatPoly make_monic(RatPoly p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.lead();
  return p * inv;
}

template <class C>
std::string pretty_impl(const Poly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    C c = p[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    C mag = neg ? C(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k > 0) {
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

DivRem<Rational> divrem(const RatPoly& a, const RatPoly& b) { return divrem_impl(a, b); }

DivRem<Integer> divrem(const IntPoly& a, const IntPoly& b) {
  if (!b.is_zero() && b.lead() != 1 && b.lead() != -1) {
    throw InvalidInput("integer division requires a divisor with unit leading coefficient");
  }
  return divrem_impl(a, b);
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& z : p.coeffs()) c.emplace_back(z);
  return RatPoly(std::move(c));
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return !p.is_zero();
  auto q = to_rational(p);
  return gcd(q, derivative(q)).degree() == 0;
}

Rational root_bound(const RatPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[i] / p.lead());
    if (r > m) m = r;
  }
  return 1 + m;
}

IntPoly parse_int_poly(std::string_view text) {
  std::vector<Integer> c;
  for (const auto& q : parse_rational_list(text)) {
    if (q.get_den() != 1) throw InvalidInput("expected integer coefficients, got " + to_string(q));
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

RatPoly parse_rat_poly(std::string_view text) { return RatPoly(parse_rational_list(text)); }

std::string format_coeffs(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p[i]);
  }
  return out;
}

std::string format_coeffs(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p[i]);
  }
  return out;
}

std::string pretty(const IntPoly& p) { return pretty_impl(p); }
std::string pretty(const RatPoly& p) { return pretty_impl(p); }

}  // namespace ietsaf
