#pragma once

// Interval exchange transformations with lengths in a real number field.

#include "ietsaf/number_field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ietsaf {

/// An exchange of n subintervals of [0, total). perm[i] is the (0-based) position
/// of interval i in the image. Translations are derived, never supplied.
class Iet {
 public:
  /// Validates: positive lengths summing to total, perm a bijection, one field throughout.
  static Iet create(AlgNum total, std::vector<AlgNum> lengths, std::vector<int> perm, bool circle);

  /// Builds from per-interval translations and checks that the images tile [0, total).
  static Iet from_translations(AlgNum total, std::vector<AlgNum> lengths, const std::vector<AlgNum>& translations,
                               bool circle);

  const NumberField& field() const { return total_.field(); }
  const AlgNum& total() const { return total_; }
  std::size_t size() const { return lengths_.size(); }
  const std::vector<AlgNum>& lengths() const { return lengths_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<AlgNum>& translations() const { return translations_; }
  // a_0 = 0 < a_1 < ... < a_n = total.
  const std::vector<AlgNum>& breakpoints() const { return breakpoints_; }
  bool circle() const { return circle_; }

  // Index i with a_i <= x < a_{i+1}. Throws for x outside [0, total).
  std::size_t locate(const AlgNum& x) const;
  AlgNum operator()(const AlgNum& x) const;

  /// Merges adjacent intervals carrying equal translations.
  Iet canonical() const;

  Iet with_circle(bool circle) const;

  /// Equal after canonicalization (field, total, partition, translations and the circle flag).
  friend bool operator==(const Iet& a, const Iet& b);

 private:
  Iet(AlgNum total, std::vector<AlgNum> lengths, std::vector<int> perm, std::vector<AlgNum> translations,
      std::vector<AlgNum> breakpoints, bool circle);

  AlgNum total_;
  std::vector<AlgNum> lengths_;
  std::vector<int> perm_;
  std::vector<AlgNum> translations_;
  std::vector<AlgNum> breakpoints_;
  bool circle_;
};

Iet identity(const AlgNum& total, bool circle);
// x -> x + theta (mod total) on a circle; theta in [0, total).
Iet rotation(const AlgNum& total, const AlgNum& theta);

/// x -> f(g(x)).
Iet compose(const Iet& f, const Iet& g);
Iet inverse(const Iet& f);
/// x -> f(x) + c (mod total); requires circle semantics and 0 <= c < total.
Iet rotate(const Iet& f, const AlgNum& c);
/// Conjugate by x -> s x; s > 0.
Iet scale(const Iet& f, const AlgNum& s);

struct ReturnPiece {
  AlgNum start;
  AlgNum length;
  AlgNum translation;
  long return_time;
};

struct FirstReturn {
  Iet map;
  // Uncanonicalized pieces in domain order, with their return times.
  std::vector<ReturnPiece> pieces;
};

inline constexpr long kDefaultReturnCap = 100'000;

/// Induced map on [0, b) by forward iteration of partition pieces.
/// Throws IterationCapExceeded after `cap` piece-iterations.
FirstReturn first_return_detailed(const Iet& f, const AlgNum& b, long cap = kDefaultReturnCap);
Iet first_return(const Iet& f, const AlgNum& b, long cap = kDefaultReturnCap);

/// Consecutive blocks; pairing[i] = j swaps equal-length blocks i and j by
/// translation; pairing[i] = i fixes block i. Result has circle semantics.
Iet pair_involution(std::span<const AlgNum> blocks, std::span<const int> pairing);

/// An element of K wedge_Q K as an antisymmetric d x d rational matrix in the power basis.
class WedgeClass {
 public:
  WedgeClass(NumberField field, std::vector<Rational> entries);
  static WedgeClass zero(const NumberField& field);

  const NumberField& field() const { return field_; }
  int dimension() const { return field_.degree(); }
  const Rational& operator()(int row, int col) const { return m_[static_cast<std::size_t>(row * dimension() + col)]; }
  const std::vector<Rational>& entries() const { return m_; }

  bool is_zero() const;
  friend WedgeClass operator+(const WedgeClass& a, const WedgeClass& b);
  friend WedgeClass operator-(const WedgeClass& a);
  friend bool operator==(const WedgeClass& a, const WedgeClass& b);

 private:
  NumberField field_;
  std::vector<Rational> m_;
};

/// Sum over intervals of length_i wedge translation_i.
WedgeClass saf(const Iet& f);
inline bool wedge_is_zero(const WedgeClass& w) { return w.is_zero(); }
inline WedgeClass wedge_add(const WedgeClass& a, const WedgeClass& b) { return a + b; }

}  // namespace ietsaf
