#pragma once

// Polynomials over GF(2), bit-packed into one 64-bit word (bit i = coefficient of x^i).

#include "ietsaf/poly.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ietsaf {

class Gf2Poly {
 public:
  static constexpr int kMaxDegree = 63;

  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

  static Gf2Poly x_plus_one() { return Gf2Poly(0b11); }
  static Gf2Poly one() { return Gf2Poly(1); }
  // Coefficientwise reduction mod 2; throws if the degree exceeds kMaxDegree.
  static Gf2Poly reduce(const IntPoly& p);

  constexpr std::uint64_t bits() const { return bits_; }
  int degree() const { return bits_ == 0 ? -1 : 63 - __builtin_clzll(bits_); }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr bool coeff(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool constant_term() const { return bits_ & 1u; }

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly(a.bits_ ^ b.bits_); }
  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b);
  friend constexpr bool operator==(Gf2Poly a, Gf2Poly b) = default;
  friend constexpr auto operator<=>(Gf2Poly a, Gf2Poly b) = default;

  Gf2Poly pow(unsigned e) const;
  // Integer lift with coefficients in {0, 1}.
  IntPoly lift() const;

 private:
  std::uint64_t bits_ = 0;
};

struct Gf2DivRem {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

Gf2DivRem divrem(Gf2Poly a, Gf2Poly b);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly reverse(Gf2Poly p);
// Coefficient sequence equals its own reversal (self-reciprocal for p(0) = 1).
bool is_palindromic(Gf2Poly p);
bool is_irreducible(Gf2Poly p);

struct Gf2Factor {
  Gf2Poly factor;
  int multiplicity;
  friend bool operator==(const Gf2Factor&, const Gf2Factor&) = default;
};

// Complete factorization into irreducibles, sorted by factor bits.
std::vector<Gf2Factor> gf2_factor(Gf2Poly p);

std::string format_coeffs(Gf2Poly p);
std::string pretty(Gf2Poly p);

}  // namespace ietsaf
