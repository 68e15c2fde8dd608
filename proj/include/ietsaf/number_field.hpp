#pragma once

// Real number fields Q(alpha) = Q[x]/(m) with alpha a distinguished real root of m,
// and exact arithmetic/sign determination for their elements.

#include "ietsaf/poly.hpp"
#include "ietsaf/sturm.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ietsaf {

/// Raised when inversion finds a nontrivial common factor with the modulus.
class ReducibleModulus : public InvalidInput {
 public:
  explicit ReducibleModulus(RatPoly factor);
  const RatPoly& factor() const { return factor_; }

 private:
  RatPoly factor_;
};

class NumberField {
 public:
  /// The modulus must be monic with integer coefficients, squarefree, and have
  /// exactly one root in the open interval (lo, hi).
  static NumberField create(IntPoly modulus, Rational lo, Rational hi);

  const IntPoly& modulus() const;
  const RatPoly& rational_modulus() const;
  int degree() const;

  // The isolating interval as supplied to create(); this is what gets serialized.
  std::pair<Rational, Rational> root_interval() const;
  // Tightened interval with nonzero modulus values at both ends (or a point if the root is rational).
  std::pair<Rational, Rational> refined_interval() const;
  const std::optional<Rational>& rational_root() const;

  // Set when the modulus is irreducible modulo one of 2, 3, 5, 7, 11, 13.
  bool irreducibility_verified() const;
  std::optional<int> irreducibility_prime() const;

  // Reduces a coefficient vector of any length modulo the modulus; result has degree() entries.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  // Sign of the modulus at the refined lower endpoint.
  int lower_sign() const;

  // Same modulus and same distinguished root.
  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  struct Data;
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// An element of a NumberField in the power basis 1, alpha, ..., alpha^(d-1).
class AlgNum {
 public:
  AlgNum(NumberField field, std::vector<Rational> coords);

  static AlgNum from_rational(const NumberField& field, const Rational& q);
  static AlgNum generator(const NumberField& field);

  const NumberField& field() const { return field_; }
  std::span<const Rational> coords() const { return coords_; }
  const std::vector<Rational>& coord_vector() const { return coords_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  RatPoly representative() const { return RatPoly(coords_); }

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const Rational& q);

  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const Rational& q) { return a *= q; }
  friend AlgNum operator*(const Rational& q, AlgNum a) { return a *= q; }
  friend AlgNum operator-(AlgNum a) { return a *= Rational(-1); }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);

  AlgNum pow(unsigned e) const;

  friend bool operator==(const AlgNum& a, const AlgNum& b);
  // Exact order of the real values.
  friend std::strong_ordering operator<=>(const AlgNum& a, const AlgNum& b);

 private:
  void check_same_field(const AlgNum& o) const;

  NumberField field_;
  std::vector<Rational> coords_;
};

/// -1, 0 or +1: the sign of the real value at the distinguished root.
/// Refines the isolating interval by bisection; throws IterationCapExceeded
/// after 10^6 bisections (impossible for an irreducible modulus).
int alg_sign(const AlgNum& a);

AlgNum alg_inv(const AlgNum& a);

/// A rational within `tolerance` of the real value.
Rational approximate(const AlgNum& a, const Rational& tolerance);
double to_double(const AlgNum& a);

/// Monic minimal polynomial over Q, from the first linear dependency among 1, a, a^2, ...
RatPoly krylov_min_poly(const AlgNum& a);

// Comma list of the d coordinates.
std::string format_coords(const AlgNum& a);
AlgNum parse_coords(const NumberField& field, std::string_view text);

// Irreducibility of a monic integer polynomial modulo a small prime (Rabin's test).
bool irreducible_mod_p(const IntPoly& p, int prime);

}  // namespace ietsaf
