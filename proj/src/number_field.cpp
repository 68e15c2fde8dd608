#include "ietsaf/number_field.hpp"

#include <algorithm>
#include <cstdint>

namespace ietsaf {

ReducibleModulus::ReducibleModulus(RatPoly factor)
    : InvalidInput("reducible modulus: nontrivial factor " + pretty(factor)), factor_(std::move(factor)) {}

// ---------------------------------------------------------------------------
// Polynomials over GF(p), used only for the irreducibility certificate.

namespace {

using FpPoly = std::vector<std::int64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
  const std::int64_t inv = mod_inverse(b.back(), p);
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const std::int64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = ((a[shift + j] - q * b[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return fp_rem(std::move(out), f, p);
}

FpPoly fp_powmod(FpPoly base, std::int64_t e, const FpPoly& f, std::int64_t p) {
  FpPoly result{1};
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool irreducible_mod_p(const IntPoly& poly, int prime) {
  const std::int64_t p = prime;
  if (!poly.is_monic()) throw InvalidInput("irreducibility test requires a monic polynomial");
  const int n = poly.degree();
  if (n <= 1) return n == 1;
  FpPoly f(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Integer r = poly[i] % prime;
    if (r < 0) r += prime;
    f[i] = r.get_si();
  }
  const FpPoly x{0, 1};
  // frob[k] = x^(p^k) mod f
  std::vector<FpPoly> frob{fp_rem(x, f, p)};
  for (int k = 1; k <= n; ++k) frob.push_back(fp_powmod(frob.back(), p, f, p));
  if (!fp_sub(frob[n], x, p).empty()) return false;
  for (int q : prime_factors(n)) {
    auto g = fp_gcd(fp_sub(frob[n / q], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct NumberField::Data {
  IntPoly modulus;
  RatPoly qmodulus;
  SturmSequence sturm;
  Rational lo, hi;
  Rational rlo, rhi;
  int lo_sign = 0;
  std::optional<Rational> exact_root;
  std::optional<int> irreducible_prime;
};

namespace {

constexpr int kInitialRefineBits = 96;

}  // namespace

NumberField NumberField::create(IntPoly modulus, Rational lo, Rational hi) {
  if (modulus.degree() < 1 || !modulus.is_monic()) throw InvalidInput("modulus must be monic of degree >= 1");
  if (!is_squarefree(modulus)) throw InvalidInput("modulus is not squarefree");
  if (!(lo < hi)) throw InvalidInput("root interval requires lo < hi");
  auto qmod = to_rational(modulus);
  SturmSequence sturm(qmod);
  const int count = sturm.count_open(lo, hi);
  if (count != 1) {
    throw InvalidInput("root interval must contain exactly one root of the modulus, found " + std::to_string(count));
  }

  auto data = std::make_shared<Data>(Data{modulus, qmod, sturm, lo, hi, lo, hi, 0, std::nullopt, std::nullopt});

  // Move the endpoints off roots first; (a, b) always holds exactly one root.
  Rational a = lo, b = hi;
  while (qmod.eval(a) == 0 || qmod.eval(b) == 0) {
    Rational mid = (a + b) / 2;
    if (qmod.eval(mid) == 0) {
      data->exact_root = mid;
      break;
    }
    if (sturm.count_open(a, mid) == 1) {
      b = std::move(mid);
    } else {
      a = std::move(mid);
    }
  }
  if (!data->exact_root) {
    int sa = sign(qmod.eval(a));
    const Rational target = Rational(1, 1) / Rational(Integer(1) << kInitialRefineBits);
    while (b - a > target) {
      Rational mid = (a + b) / 2;
      const int sm = sign(qmod.eval(mid));
      if (sm == 0) {
        data->exact_root = mid;
        break;
      }
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
    data->lo_sign = sa;
  }
  if (data->exact_root) {
    data->rlo = data->rhi = *data->exact_root;
  } else {
    data->rlo = a;
    data->rhi = b;
  }

  for (int prime : {2, 3, 5, 7, 11, 13}) {
    if (irreducible_mod_p(modulus, prime)) {
      data->irreducible_prime = prime;
      break;
    }
  }

  return NumberField(std::move(data));
}

const IntPoly& NumberField::modulus() const { return d_->modulus; }
const RatPoly& NumberField::rational_modulus() const { return d_->qmodulus; }
int NumberField::degree() const { return d_->modulus.degree(); }
std::pair<Rational, Rational> NumberField::root_interval() const { return {d_->lo, d_->hi}; }
std::pair<Rational, Rational> NumberField::refined_interval() const { return {d_->rlo, d_->rhi}; }
const std::optional<Rational>& NumberField::rational_root() const { return d_->exact_root; }
bool NumberField::irreducibility_verified() const { return d_->irreducible_prime.has_value(); }
std::optional<int> NumberField::irreducibility_prime() const { return d_->irreducible_prime; }
int NumberField::lower_sign() const { return d_->lo_sign; }

std::vector<Rational> NumberField::reduce(std::vector<Rational> coeffs) const {
  const int d = degree();
  const auto& m = d_->qmodulus;
  // x^k = x^(k-d) * x^d and x^d = -(m_0 + ... + m_{d-1} x^(d-1)).
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= d; --k) {
    if (coeffs[k] == 0) continue;
    const Rational c = coeffs[k];
    for (int i = 0; i < d; ++i) {
      if (m[i] != 0) coeffs[k - d + i] -= c * m[i];
    }
    coeffs[k] = 0;
  }
  coeffs.resize(d);
  return coeffs;
}

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.d_ == b.d_) return true;
  if (!(a.d_->modulus == b.d_->modulus)) return false;
  const auto& ra = a.d_->exact_root;
  const auto& rb = b.d_->exact_root;
  if (ra && rb) return *ra == *rb;
  if (ra) return b.d_->rlo < *ra && *ra < b.d_->rhi;
  if (rb) return a.d_->rlo < *rb && *rb < a.d_->rhi;
  Rational lo = std::max(a.d_->rlo, b.d_->rlo);
  Rational hi = std::min(a.d_->rhi, b.d_->rhi);
  return lo < hi && a.d_->sturm.count_open(lo, hi) == 1;
}

// ---------------------------------------------------------------------------

AlgNum::AlgNum(NumberField field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_.degree()) {
    throw InvalidInput("expected " + std::to_string(field_.degree()) + " coordinates, got " +
                       std::to_string(coords_.size()));
  }
}

AlgNum AlgNum::from_rational(const NumberField& field, const Rational& q) {
  std::vector<Rational> c(field.degree());
  c[0] = q;
  return AlgNum(field, std::move(c));
}

AlgNum AlgNum::generator(const NumberField& field) {
  if (field.degree() == 1) return from_rational(field, *field.rational_root());
  std::vector<Rational> c(field.degree());
  c[1] = 1;
  return AlgNum(field, std::move(c));
}

bool AlgNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> AlgNum::as_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return std::nullopt;
  }
  return coords_[0];
}

void AlgNum::check_same_field(const AlgNum& o) const {
  if (!(field_ == o.field_)) throw InvalidInput("number field mismatch");
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  a.check_same_field(b);
  const std::size_t d = a.coords_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coords_[j] != 0) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  return AlgNum(a.field_, a.field_.reduce(std::move(prod)));
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * alg_inv(b); }

AlgNum AlgNum::pow(unsigned e) const {
  AlgNum acc = from_rational(field_, 1);
  AlgNum base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool operator==(const AlgNum& a, const AlgNum& b) { return a.field_ == b.field_ && a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const AlgNum& a, const AlgNum& b) {
  const int s = alg_sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

namespace {

struct Interval {
  Rational lo, hi;
};

// Range of sum c_k x^k over x in [xlo, xhi], by interval Horner.
Interval eval_interval(std::span<const Rational> c, const Rational& xlo, const Rational& xhi) {
  Interval acc{c.back(), c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    Rational p1 = acc.lo * xlo, p2 = acc.lo * xhi, p3 = acc.hi * xlo, p4 = acc.hi * xhi;
    Rational mn = std::min({p1, p2, p3, p4});
    Rational mx = std::max({p1, p2, p3, p4});
    acc.lo = mn + c[k];
    acc.hi = mx + c[k];
  }
  return acc;
}

Rational eval_at(std::span<const Rational> c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

constexpr long kSignBisectionCap = 1'000'000;

}  // namespace

int alg_sign(const AlgNum& a) {
  if (a.is_zero()) return 0;
  const auto& field = a.field();
  if (field.rational_root()) return sign(eval_at(a.coords(), *field.rational_root()));
  auto [lo, hi] = field.refined_interval();
  const auto& m = field.rational_modulus();
  const int lo_sign = field.lower_sign();
  for (long step = 0; step <= kSignBisectionCap; ++step) {
    const auto range = eval_interval(a.coords(), lo, hi);
    if (range.lo > 0) return 1;
    if (range.hi < 0) return -1;
    Rational mid = (lo + hi) / 2;
    const int sm = sign(m.eval(mid));
    if (sm == 0) return sign(eval_at(a.coords(), mid));
    if (sm == lo_sign) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  throw IterationCapExceeded("sign determination exceeded 10^6 bisections (is the modulus reducible?)");
}

Rational approximate(const AlgNum& a, const Rational& tolerance) {
  const auto& field = a.field();
  if (field.rational_root()) return eval_at(a.coords(), *field.rational_root());
  auto [lo, hi] = field.refined_interval();
  const auto& m = field.rational_modulus();
  const int lo_sign = field.lower_sign();
  for (long step = 0; step <= kSignBisectionCap; ++step) {
    const auto range = eval_interval(a.coords(), lo, hi);
    if (range.hi - range.lo <= tolerance) return (range.lo + range.hi) / 2;
    Rational mid = (lo + hi) / 2;
    const int sm = sign(m.eval(mid));
    if (sm == 0) return eval_at(a.coords(), mid);
    if (sm == lo_sign) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  throw IterationCapExceeded("approximation exceeded 10^6 bisections");
}

double to_double(const AlgNum& a) {
  const auto [lo, hi] = a.field().refined_interval();
  return eval_at(a.coords(), (lo + hi) / 2).get_d();
}

AlgNum alg_inv(const AlgNum& a) {
  if (a.is_zero()) throw InvalidInput("inversion of zero");
  const auto& field = a.field();
  auto eg = extended_gcd(a.representative(), field.rational_modulus());
  if (eg.g.degree() > 0) throw ReducibleModulus(eg.g);
  std::vector<Rational> s(eg.s.coeffs().begin(), eg.s.coeffs().end());
  return AlgNum(field, field.reduce(std::move(s)));
}

RatPoly krylov_min_poly(const AlgNum& a) {
  const std::size_t d = static_cast<std::size_t>(a.field().degree());
  struct Row {
    std::vector<Rational> v;
    std::vector<Rational> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  AlgNum power = AlgNum::from_rational(a.field(), 1);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Rational> v = power.coord_vector();
    std::vector<Rational> combo(d + 1);
    combo[k] = 1;
    for (const auto& row : rows) {
      if (v[row.pivot] == 0) continue;
      const Rational f = v[row.pivot] / row.v[row.pivot];
      for (std::size_t i = 0; i < d; ++i) v[i] -= f * row.v[i];
      for (std::size_t i = 0; i <= d; ++i) combo[i] -= f * row.combo[i];
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (nz == v.end()) {
      combo.resize(k + 1);
      return RatPoly(std::move(combo));
    }
    const auto pivot = static_cast<std::size_t>(nz - v.begin());
    rows.push_back({std::move(v), std::move(combo), pivot});
    power = power * a;
  }
  throw std::logic_error("no linear dependency among d + 1 powers");
}

std::string format_coords(const AlgNum& a) { return join_rationals(a.coord_vector()); }

AlgNum parse_coords(const NumberField& field, std::string_view text) {
  return AlgNum(field, parse_rational_list(text));
}

}  // namespace ietsaf
