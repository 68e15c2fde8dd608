#pragma once

// Test-only generators and independent oracles.

#include "ietsaf/arnoux_yoccoz.hpp"
#include "ietsaf/gf2_poly.hpp"
#include "ietsaf/iet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ietsaf::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_range = 6, int den_max = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline AlgNum random_element(Rng& rng, const NumberField& field) {
  std::vector<Rational> c;
  for (int i = 0; i < field.degree(); ++i) c.push_back(random_rational(rng));
  return AlgNum(field, std::move(c));
}

// Random irreducible monic cubic with small coefficients, irreducibility
// certified mod a small prime, and a random real root.
inline NumberField random_cubic_field(Rng& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  while (true) {
    IntPoly m{Integer(coef(rng)), Integer(coef(rng)), Integer(coef(rng)), Integer(1)};
    if (m[0] == 0) continue;
    bool certified = false;
    for (int p : {2, 3, 5, 7}) certified = certified || irreducible_mod_p(m, p);
    if (!certified) continue;
    const auto q = to_rational(m);
    const Rational b = root_bound(q);
    const auto roots = sturm_isolate(q, -b, b);
    if (roots.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    const auto [lo, hi] = roots[pick(rng)];
    if (q.eval(hi) == 0) continue;
    return NumberField::create(m, lo, hi);
  }
}

// Element with real value in (0, total), found by shifting a random element
// by a rational guided by its floating value.
inline AlgNum random_point_in(Rng& rng, const AlgNum& total) {
  const double t = to_double(total);
  while (true) {
    AlgNum x = random_element(rng, total.field());
    const double v = to_double(x);
    std::uniform_real_distribution<double> target(0.02 * t, 0.98 * t);
    const double shift = std::floor((target(rng) - v) * 1024.0) / 1024.0;
    x += AlgNum::from_rational(total.field(), Rational(shift));
    if (alg_sign(x) > 0 && x < total) return x;
  }
}

inline std::vector<int> random_perm(Rng& rng, std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Iet random_iet(Rng& rng, const AlgNum& total, int min_n = 2, int max_n = 5, bool circle = true) {
  std::uniform_int_distribution<int> count(min_n, max_n);
  const int n = count(rng);
  std::vector<AlgNum> cuts;
  while (static_cast<int>(cuts.size()) < n - 1) {
    AlgNum x = random_point_in(rng, total);
    if (std::none_of(cuts.begin(), cuts.end(), [&](const AlgNum& c) { return c == x; })) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end(), [](const AlgNum& a, const AlgNum& b) { return a < b; });
  std::vector<AlgNum> lengths;
  AlgNum prev = AlgNum::from_rational(total.field(), 0);
  for (const auto& c : cuts) {
    lengths.push_back(c - prev);
    prev = c;
  }
  lengths.push_back(total - prev);
  return Iet::create(total, std::move(lengths), random_perm(rng, static_cast<std::size_t>(n)), circle);
}

// Random pair-involution: random block lengths, each paired with a partner of
// equal length placed at a random position; some blocks self-paired.
inline Iet random_pair_involution(Rng& rng, const NumberField& field) {
  std::uniform_int_distribution<int> pairs(1, 4);
  std::uniform_int_distribution<int> coin(0, 3);
  const AlgNum one = AlgNum::from_rational(field, 1);
  const int k = pairs(rng);
  std::vector<AlgNum> sizes;
  for (int i = 0; i < k; ++i) sizes.push_back(random_point_in(rng, one));
  // Slots: each pair contributes two slots; optionally a self-paired block.
  std::vector<int> owner;
  for (int i = 0; i < k; ++i) {
    owner.push_back(i);
    owner.push_back(i);
  }
  if (coin(rng) == 0) owner.push_back(-1);
  std::shuffle(owner.begin(), owner.end(), rng);
  std::vector<AlgNum> blocks;
  std::vector<int> pairing(owner.size());
  std::vector<int> first(static_cast<std::size_t>(k), -1);
  for (std::size_t s = 0; s < owner.size(); ++s) {
    const int o = owner[s];
    blocks.push_back(o < 0 ? random_point_in(rng, one) : sizes[static_cast<std::size_t>(o)]);
    if (o < 0) {
      pairing[s] = static_cast<int>(s);
    } else if (first[o] < 0) {
      first[o] = static_cast<int>(s);
    } else {
      pairing[s] = first[o];
      pairing[static_cast<std::size_t>(first[o])] = static_cast<int>(s);
    }
  }
  return pair_involution(blocks, pairing);
}

// Image intervals, sorted by image start, tile [0, total) exactly.
inline bool images_tile(const Iet& f) {
  std::vector<std::pair<AlgNum, AlgNum>> images;
  for (std::size_t i = 0; i < f.size(); ++i) {
    images.emplace_back(f.breakpoints()[i] + f.translations()[i], f.lengths()[i]);
  }
  std::sort(images.begin(), images.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  AlgNum cursor = AlgNum::from_rational(f.field(), 0);
  for (const auto& [start, len] : images) {
    if (!(start == cursor)) return false;
    cursor = cursor + len;
  }
  return cursor == f.total();
}

/// Floating-point simulation of an IET, independent of the exact search.
struct FloatIet {
  std::vector<double> breaks;
  std::vector<double> shifts;

  explicit FloatIet(const Iet& f) {
    for (const auto& b : f.breakpoints()) breaks.push_back(to_double(b));
    for (const auto& t : f.translations()) shifts.push_back(to_double(t));
  }
  double operator()(double x) const {
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (x >= breaks[i] && x < breaks[i + 1]) return x + shifts[i];
    }
    return std::nan("");
  }
  double distance_to_break(double x) const {
    double d = INFINITY;
    for (double b : breaks) d = std::min(d, std::abs(x - b));
    return d;
  }
};

// Root of a monic modulus by plain double bisection on [lo, hi].
inline double double_root(const IntPoly& m, double lo, double hi) {
  auto f = [&](double x) {
    double acc = 0;
    for (int k = m.degree(); k >= 0; --k) acc = acc * x + m[k].get_d();
    return acc;
  };
  const bool lo_neg = f(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) < 0) == lo_neg ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// GF(2) product by explicit convolution of integer coefficient vectors.
inline std::vector<int> gf2_convolve(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& c : out) c %= 2;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// No divisor among all polynomials of degree 1 .. deg/2.
inline bool gf2_irreducible_bruteforce(Gf2Poly p) {
  const int d = p.degree();
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint64_t bits = std::uint64_t{1} << k; bits < (std::uint64_t{2} << k); ++bits) {
      if (divrem(p, Gf2Poly(bits)).remainder.is_zero()) return false;
    }
  }
  return true;
}

/// Independent oracle for the nonlift question: does some palindromic p-bar of
/// degree g with p-bar(0) = 1 have mbar as a divisor? (Every such p-bar lifts to
/// an admissible integer p = m q with 0/1 cofactor coefficients.)
inline bool admissible_mod2_exists(Gf2Poly mbar, int g) {
  if (mbar.degree() > g) return false;
  if (g == 0) return mbar == Gf2Poly::one();
  // Palindromic with leading and constant 1: free half of the interior bits.
  const int half = (g - 1) / 2;  // interior indices 1..half determine the rest
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << half); ++h) {
    std::uint64_t bits = 1u | (std::uint64_t{1} << g);
    for (int i = 1; i <= half; ++i) {
      if ((h >> (i - 1)) & 1u) bits |= (std::uint64_t{1} << i) | (std::uint64_t{1} << (g - i));
    }
    for (int mid : {0, 1}) {
      std::uint64_t b = bits;
      if (g % 2 == 0 && g > 0 && mid) {
        b |= std::uint64_t{1} << (g / 2);
      } else if (mid) {
        continue;
      }
      if (divrem(Gf2Poly(b), mbar).remainder.is_zero()) return true;
    }
  }
  return false;
}

}  // namespace ietsaf::testing
