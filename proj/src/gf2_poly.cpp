#include "ietsaf/gf2_poly.hpp"

#include <map>

namespace ietsaf {

Gf2Poly Gf2Poly::reduce(const IntPoly& p) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mpz_odd_p(p[i].get_mpz_t())) {
      if (i > static_cast<std::size_t>(kMaxDegree)) {
        throw InvalidInput("GF(2) polynomial degree exceeds " + std::to_string(kMaxDegree));
      }
      bits |= std::uint64_t{1} << i;
    }
  }
  return Gf2Poly(bits);
}

Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() + b.degree() > Gf2Poly::kMaxDegree) {
    throw InvalidInput("GF(2) product degree exceeds " + std::to_string(Gf2Poly::kMaxDegree));
  }
  std::uint64_t out = 0;
  std::uint64_t x = a.bits();
  for (std::uint64_t y = b.bits(); y != 0; y >>= 1, x <<= 1) {
    if (y & 1u) out ^= x;
  }
  return Gf2Poly(out);
}

Gf2Poly Gf2Poly::pow(unsigned e) const {
  Gf2Poly acc = one();
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

IntPoly Gf2Poly::lift() const {
  std::vector<Integer> c(static_cast<std::size_t>(degree() + 1));
  for (int i = 0; i <= degree(); ++i) c[i] = coeff(i) ? 1 : 0;
  return IntPoly(std::move(c));
}

Gf2DivRem divrem(Gf2Poly a, Gf2Poly b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::uint64_t r = a.bits();
  std::uint64_t q = 0;
  const int db = b.degree();
  for (int k = Gf2Poly(r).degree(); k >= db; k = Gf2Poly(r).degree()) {
    q |= std::uint64_t{1} << (k - db);
    r ^= b.bits() << (k - db);
  }
  return {Gf2Poly(q), Gf2Poly(r)};
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).remainder;
    a = b;
    b = r;
  }
  return a;
}

Gf2Poly reverse(Gf2Poly p) {
  if (p.is_zero()) throw InvalidInput("reverse of the zero polynomial");
  std::uint64_t out = 0;
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    if (p.coeff(i)) out |= std::uint64_t{1} << (d - i);
  }
  return Gf2Poly(out);
}

bool is_palindromic(Gf2Poly p) { return !p.is_zero() && reverse(p) == p; }

bool is_irreducible(Gf2Poly p) {
  const int d = p.degree();
  if (d < 1) return false;
  auto factors = gf2_factor(p);
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

std::vector<Gf2Factor> gf2_factor(Gf2Poly p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  std::map<std::uint64_t, int> found;
  // Candidates are enumerated by increasing degree, so the first divisor found
  // at each stage is irreducible.
  for (int d = 1; 2 * d <= p.degree(); ++d) {
    const std::uint64_t first = std::uint64_t{1} << d;
    for (std::uint64_t bits = first; bits < (first << 1); ++bits) {
      const Gf2Poly cand(bits);
      while (p.degree() >= d) {
        auto [q, r] = divrem(p, cand);
        if (!r.is_zero()) break;
        ++found[bits];
        p = q;
      }
      if (2 * d > p.degree()) break;
    }
  }
  if (p.degree() >= 1) ++found[p.bits()];
  std::vector<Gf2Factor> out;
  for (auto [bits, mult] : found) out.push_back({Gf2Poly(bits), mult});
  return out;
}

std::string format_coeffs(Gf2Poly p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ',';
    out += p.coeff(i) ? '1' : '0';
  }
  return out;
}

std::string pretty(Gf2Poly p) { return pretty(p.lift()); }

}  // namespace ietsaf
