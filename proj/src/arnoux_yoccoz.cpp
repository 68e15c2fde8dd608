#include "ietsaf/arnoux_yoccoz.hpp"

#include <algorithm>
#include <numeric>

namespace ietsaf {

namespace {

void require_genus(int g, int minimum) {
  if (g < minimum) {
    throw InvalidInput("Arnoux-Yoccoz construction requires g >= " + std::to_string(minimum) + ", got " +
                       std::to_string(g));
  }
}

// Isolating interval for alpha refined below width 2^-20.
std::pair<Rational, Rational> refined_unit_interval(const RatPoly& q) {
  Rational lo = 0, hi = 1;
  const int lo_sign = sign(q.eval(lo));
  const Rational width = Rational(1, 1 << 20);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    (sign(q.eval(mid)) == lo_sign ? lo : hi) = mid;
  }
  return {lo, hi};
}

}  // namespace

NumberField ay_alpha(int g) {
  require_genus(g, 2);
  std::vector<Integer> c(static_cast<std::size_t>(g + 1), 1);
  c[0] = -1;
  const IntPoly modulus(std::move(c));
  // Values -1 at 0 and g - 1 > 0 at 1; the polynomial is increasing on [0, 1].
  const auto [lo, hi] = refined_unit_interval(to_rational(modulus));
  return NumberField::create(modulus, lo, hi);
}

AlgNum ay_alpha_value(const NumberField& field) { return AlgNum::generator(field); }

Iet ay_boundary_involution(int g) {
  require_genus(g, 3);
  const NumberField field = ay_alpha(g);
  const AlgNum alpha = ay_alpha_value(field);
  std::vector<AlgNum> blocks;
  std::vector<int> pairing;
  AlgNum power = alpha;
  for (int k = 1; k <= g; ++k) {
    blocks.push_back(power);
    blocks.push_back(power);
    pairing.push_back(2 * k - 1);
    pairing.push_back(2 * k - 2);
    power = power * alpha;
  }
  return pair_involution(blocks, pairing);
}

Iet ay_lift_with_order(int g, std::span<const int> block_order) {
  require_genus(g, 3);
  std::vector<int> sorted(block_order.begin(), block_order.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(g));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) throw InvalidInput("block order must be a permutation of 1..g");
  const NumberField field = ay_alpha(g);
  const AlgNum alpha = ay_alpha_value(field);
  const AlgNum half = AlgNum::from_rational(field, Rational(1, 2));
  std::vector<AlgNum> blocks;
  std::vector<int> pairing;
  for (int k : block_order) {
    const AlgNum h = alpha.pow(static_cast<unsigned>(k)) * half;
    const int base = static_cast<int>(blocks.size());
    blocks.push_back(h);
    blocks.push_back(h);
    pairing.push_back(base + 1);
    pairing.push_back(base);
  }
  return rotate(pair_involution(blocks, pairing), half);
}

Iet ay_lift(int g) {
  require_genus(g, 3);
  const Iet inv = ay_boundary_involution(g);
  const AlgNum half = AlgNum::from_rational(inv.field(), Rational(1, 2));
  return rotate(scale(inv, half), half);
}

IntPoly ay_stretch_minpoly(int g) {
  require_genus(g, 2);
  std::vector<Integer> c(static_cast<std::size_t>(g + 1), -1);
  c[static_cast<std::size_t>(g)] = 1;
  return IntPoly(std::move(c));
}

AlgNum ay_conjugating_rotation(const NumberField& field, int g) {
  const AlgNum alpha = ay_alpha_value(field);
  return (AlgNum::from_rational(field, 1) + alpha.pow(static_cast<unsigned>(g))) * Rational(1, 2);
}

bool self_similarity_holds(const Iet& lift, const AlgNum& alpha, const AlgNum& c, long cap) {
  const Iet induced = first_return(lift, alpha, cap);
  const Iet back = rotation(lift.total(), lift.total() - c);
  const Iet conjugated = rotate(compose(lift, back), c);
  return induced == scale(conjugated, alpha);
}

bool ay_self_similarity_check(int g) {
  const Iet lift = ay_lift(g);
  return self_similarity_holds(lift, ay_alpha_value(lift.field()), ay_conjugating_rotation(lift.field(), g));
}

AySystem ay_system(int g) {
  require_genus(g, 3);
  Iet inv = ay_boundary_involution(g);
  const AlgNum half = AlgNum::from_rational(inv.field(), Rational(1, 2));
  Iet lift = rotate(scale(inv, half), half);
  NumberField field = inv.field();
  return {g, std::move(field), std::move(inv), std::move(lift), ay_stretch_minpoly(g)};
}

}  // namespace ietsaf
