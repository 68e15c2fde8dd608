#include "ietsaf/certificates.hpp"

#include "ietsaf/kernels.hpp"
#include "ietsaf/sturm.hpp"

#include <map>

namespace ietsaf {

namespace {

void require_monic_integer(const IntPoly& m) {
  if (m.degree() < 1 || !m.is_monic()) throw InvalidInput("polynomial must be monic of degree >= 1");
}

bool irreducibility_certified(const IntPoly& m) {
  for (int prime : {2, 3, 5, 7, 11, 13}) {
    if (irreducible_mod_p(m, prime)) return true;
  }
  return false;
}

}  // namespace

std::pair<Rational, Rational> largest_root_above_one(const IntPoly& m) {
  const RatPoly q = to_rational(m);
  const auto roots = sturm_isolate(q, Rational(1), root_bound(q));
  if (roots.empty()) throw InvalidInput("no real root > 1");
  auto [lo, hi] = roots.back();
  if (q.eval(hi) != 0) return {lo, hi};
  // The root sits on the right endpoint; widen around it.
  SturmSequence s(q);
  Rational eps = (hi - lo) / 2;
  while (s.count_open(hi - eps, hi + eps) != 1) eps /= 2;
  return {hi - eps, hi + eps};
}

VanishingVerdict vanishing_by_reciprocity(const IntPoly& m) {
  require_monic_integer(m);
  if (m[0] == 0) throw InvalidInput("minimal polynomial must have nonzero constant term");
  if (!is_squarefree(m)) throw InvalidInput("polynomial is not squarefree");
  (void)largest_root_above_one(m);
  VanishingVerdict v;
  v.method = VanishingMethod::Reciprocity;
  const bool reciprocal = is_reciprocal(m);
  v.vanishes = !reciprocal;
  v.details = to_rational(reverse(m));
  v.notes.push_back(reciprocal ? "minimal polynomial is reciprocal: 1/lambda is a Galois conjugate of lambda"
                               : "minimal polynomial is not reciprocal: 1/lambda is not a Galois conjugate of lambda");
  if (m.degree() == 1) v.notes.push_back("degenerate input: rational lambda is never a pseudo-Anosov stretch factor");
  if (!irreducibility_certified(m)) v.notes.push_back("irreducibility of the polynomial is unverified");
  return v;
}

VanishingVerdict vanishing_by_field_degree(const IntPoly& m, const Rational& lo, const Rational& hi) {
  require_monic_integer(m);
  if (m[0] == 0) throw InvalidInput("minimal polynomial must have nonzero constant term");
  const NumberField field = NumberField::create(m, lo, hi);
  const AlgNum lambda = AlgNum::generator(field);
  if (alg_sign(lambda - AlgNum::from_rational(field, 1)) <= 0) throw InvalidInput("isolated root must exceed 1");
  const AlgNum beta = lambda + alg_inv(lambda);
  VanishingVerdict v;
  v.method = VanishingMethod::FieldDegree;
  v.details = krylov_min_poly(beta);
  const int index = field.degree() / v.details.degree();
  v.vanishes = index == 1;
  v.notes.push_back("[Q(lambda) : Q(lambda + 1/lambda)] = " + std::to_string(index) + " (always 1 or 2)");
  if (index > 2) v.notes.push_back("index above 2: the modulus cannot be irreducible");
  if (field.degree() == 1) v.notes.push_back("degenerate input: rational lambda is never a pseudo-Anosov stretch factor");
  if (!field.irreducibility_verified()) v.notes.push_back("irreducibility of the polynomial is unverified");
  return v;
}

bool reciprocal_mod2(const IntPoly& p) {
  if (p.is_zero() || !mpz_odd_p(p[0].get_mpz_t())) {
    throw InvalidInput("reciprocity mod 2 requires an odd constant term");
  }
  return is_palindromic(Gf2Poly::reduce(p));
}

namespace {

struct Completion {
  Gf2Poly poly;
  int degree;
};

Completion minimal_completion(Gf2Poly mbar) {
  if (!mbar.constant_term()) throw InvalidInput("completion requires mbar(0) = 1");
  std::map<std::uint64_t, int> mult;
  for (const auto& f : gf2_factor(mbar)) mult[f.factor.bits()] = f.multiplicity;
  Gf2Poly c = Gf2Poly::one();
  for (const auto& [bits, e] : mult) {
    const Gf2Poly f(bits);
    const Gf2Poly rf = reverse(f);
    if (rf == f) continue;
    const auto it = mult.find(rf.bits());
    const int partner = it == mult.end() ? 0 : it->second;
    if (e > partner) c = c * rf.pow(static_cast<unsigned>(e - partner));
  }
  return {c, c.degree()};
}

}  // namespace

int gf2_minimal_completion_degree(Gf2Poly mbar) { return minimal_completion(mbar).degree; }

std::optional<Gf2Poly> gf2_completion_exists(Gf2Poly mbar, int k) {
  if (k < 0) throw InvalidInput("completion degree must be nonnegative");
  if (k > Gf2Poly::kMaxDegree) throw InvalidInput("completion degree exceeds 63");
  const auto c = minimal_completion(mbar);
  if (c.degree > k) return std::nullopt;
  return c.poly * Gf2Poly::x_plus_one().pow(static_cast<unsigned>(k - c.degree));
}

std::optional<Gf2Poly> gf2_completion_bruteforce(Gf2Poly mbar, int k) {
  if (k > 24) throw InvalidInput("brute-force completion limited to k <= 24");
  auto bits = kernels::omp::completion_search(mbar.bits(), k);
  if (!bits) return std::nullopt;
  return Gf2Poly(*bits);
}

CertVerdict nonlift_certificate(const IntPoly& m, int genus, CompletionOracle oracle) {
  require_monic_integer(m);
  if (genus < 1) throw InvalidInput("genus must be >= 1");
  CertVerdict v;
  if (!irreducibility_certified(m)) v.notes.push_back("irreducibility of the polynomial is unverified");
  // p(0) = m(0) q(0) must be a unit, and q is integral because m is monic.
  if (m[0] != 1 && m[0] != -1) {
    v.outcome = CertOutcome::CertifiedNotLift;
    v.reason = CertReason::ConstantNotUnit;
    return v;
  }
  const int d = m.degree();
  if (d > genus) {
    v.outcome = CertOutcome::CertifiedNotLift;
    v.reason = CertReason::DegreeExceedsGenus;
    return v;
  }
  // Mod 2, p(-x) == p(x); the four transforms collapse to mbar and its reversal.
  const Gf2Poly mbar = Gf2Poly::reduce(m);
  const std::pair<LiftVariant, Gf2Poly> classes[] = {{LiftVariant::Direct, mbar},
                                                     {LiftVariant::Reversed, reverse(mbar)}};
  for (const auto& [variant, target] : classes) {
    const auto q = oracle == CompletionOracle::BruteForce ? gf2_completion_bruteforce(target, genus - d)
                                                          : gf2_completion_exists(target, genus - d);
    if (q) {
      v.outcome = CertOutcome::Inconclusive;
      v.witness = CertWitness{variant, *q};
      v.notes.push_back("necessary conditions hold: degree, unit constant term, and a mod-2 self-reciprocal completion");
      return v;
    }
  }
  v.outcome = CertOutcome::CertifiedNotLift;
  v.reason = CertReason::NoMod2Completion;
  return v;
}

std::string to_string(VanishingMethod m) {
  return m == VanishingMethod::Reciprocity ? "Reciprocity" : "FieldDegree";
}

std::string to_string(CertOutcome o) {
  return o == CertOutcome::CertifiedNotLift ? "CertifiedNotLift" : "Inconclusive";
}

std::string to_string(CertReason r) {
  switch (r) {
    case CertReason::DegreeExceedsGenus:
      return "DegreeExceedsGenus";
    case CertReason::ConstantNotUnit:
      return "ConstantNotUnit";
    case CertReason::NoMod2Completion:
      return "NoMod2Completion";
  }
  return "?";
}

std::string to_string(LiftVariant v) {
  switch (v) {
    case LiftVariant::Direct:
      return "p(x)";
    case LiftVariant::Negated:
      return "p(-x)";
    case LiftVariant::Reversed:
      return "x^g p(1/x)";
    case LiftVariant::NegatedReversed:
      return "x^g p(-1/x)";
  }
  return "?";
}

}  // namespace ietsaf
