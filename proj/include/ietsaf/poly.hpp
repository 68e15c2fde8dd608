#pragma once

// Dense univariate polynomials over Z and Q, coefficients stored constant-first.

#include "ietsaf/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ietsaf {

template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(C value) { return Poly(std::vector<C>{std::move(value)}); }
  static Poly monomial(C value, std::size_t power) {
    std::vector<C> c(power + 1);
    c[power] = std::move(value);
    return Poly(std::move(c));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  std::span<const C> coeffs() const { return c_; }

  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  C eval(const C& x) const {
    C acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const C& s) {
    for (auto& x : c_) x *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class C>
struct DivRem {
  Poly<C> quotient;
  Poly<C> remainder;
};

// Euclidean division. Over Z the divisor must have leading coefficient +1 or -1.
DivRem<Rational> divrem(const RatPoly& a, const RatPoly& b);
DivRem<Integer> divrem(const IntPoly& a, const IntPoly& b);

// Monic gcd over Q (zero only when both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

/// Extended Euclid over Q: s*a + t*b = g with g the monic gcd.
struct ExtendedGcd {
  RatPoly g;
  RatPoly s;
  RatPoly t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

template <class C>
Poly<C> derivative(const Poly<C>& p) {
  if (p.degree() <= 0) return {};
  std::vector<C> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * C(static_cast<long>(i));
  return Poly<C>(std::move(out));
}

// x^n p(1/x) for n = deg p. Trailing zeros of p become stripped leading zeros.
template <class C>
Poly<C> reverse(const Poly<C>& p) {
  if (p.is_zero()) throw InvalidInput("reverse of the zero polynomial");
  std::vector<C> c(p.coeffs().begin(), p.coeffs().end());
  std::reverse(c.begin(), c.end());
  return Poly<C>(std::move(c));
}

// p(-x).
template <class C>
Poly<C> negate_variable(const Poly<C>& p) {
  std::vector<C> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly<C>(std::move(c));
}

/// Reciprocity in the normalized sense: p(x) == x^n p(1/x) / p(0).
/// Requires a monic p with nonzero constant term. An anti-palindromic unit
/// polynomial such as x - 1 counts as reciprocal.
template <class C>
bool is_reciprocal(const Poly<C>& p) {
  if (!p.is_monic()) throw InvalidInput("is_reciprocal requires a monic polynomial");
  const C a0 = p[0];
  if (a0 == 0) throw InvalidInput("is_reciprocal requires a nonzero constant term");
  const auto r = reverse(p);
  // r / a0 == p  <=>  r == a0 * p, which stays inside the coefficient ring.
  return r == p * a0;
}

RatPoly to_rational(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

// Cauchy bound: every complex root has |z| < bound.
Rational root_bound(const RatPoly& p);

// Constant-first comma lists, e.g. "-1,1,1,1" is x^3+x^2+x-1.
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
std::string format_coeffs(const IntPoly& p);
std::string format_coeffs(const RatPoly& p);
// Human-readable, highest power first: "x^3 - x - 1".
std::string pretty(const IntPoly& p);
std::string pretty(const RatPoly& p);

}  // namespace ietsaf
