#pragma once

// Polynomial-level criteria on a stretch factor lambda with minimal polynomial m:
// whether the SAF invariant vanishes, and whether lambda can be the stretch
// factor of a lift from a nonorientable surface.

#include "ietsaf/gf2_poly.hpp"
#include "ietsaf/number_field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ietsaf {

enum class VanishingMethod { Reciprocity, FieldDegree };

struct VanishingVerdict {
  bool vanishes = false;
  VanishingMethod method = VanishingMethod::Reciprocity;
  // Reciprocity: x^n m(1/x). FieldDegree: minimal polynomial of lambda + 1/lambda.
  RatPoly details;
  std::vector<std::string> notes;
};

/// Vanishing iff m is not reciprocal: 1/lambda is a conjugate of lambda exactly
/// when m is reciprocal, and that forces [Q(lambda) : Q(lambda + 1/lambda)] = 2.
/// Requires m monic, squarefree, m(0) != 0, with a real root > 1.
VanishingVerdict vanishing_by_reciprocity(const IntPoly& m);

/// Vanishing iff lambda + 1/lambda generates Q(lambda), decided by the degree
/// of its Krylov minimal polynomial. The root interval must isolate lambda > 1.
VanishingVerdict vanishing_by_field_degree(const IntPoly& m, const Rational& lo, const Rational& hi);

// Isolating interval (lo, hi) of the largest real root of m, which must exceed 1.
std::pair<Rational, Rational> largest_root_above_one(const IntPoly& m);

/// GF(2) reduction equals its own reversal. Requires p(0) odd.
bool reciprocal_mod2(const IntPoly& p);

/// Monic q of degree k with q(0) = 1 making mbar * q self-reciprocal, built from
/// the factorization: every irreducible factor must be matched by its reversal,
/// the unmatched part fixes a minimal completion, and (x + 1)^j pads the rest.
std::optional<Gf2Poly> gf2_completion_exists(Gf2Poly mbar, int k);
// Degree of the minimal completion from the factorization.
int gf2_minimal_completion_degree(Gf2Poly mbar);

/// Exhaustive search over all monic q of degree k with q(0) = 1; returns the
/// smallest such q (by coefficient bits). Requires k <= 24.
std::optional<Gf2Poly> gf2_completion_bruteforce(Gf2Poly mbar, int k);

enum class CertOutcome { CertifiedNotLift, Inconclusive };
enum class CertReason { DegreeExceedsGenus, ConstantNotUnit, NoMod2Completion };
// Which transform of p is divisible by m: p(x), p(-x), x^g p(1/x), x^g p(-1/x).
enum class LiftVariant { Direct, Negated, Reversed, NegatedReversed };

struct CertWitness {
  LiftVariant variant;
  Gf2Poly completion;
};

struct CertVerdict {
  CertOutcome outcome = CertOutcome::Inconclusive;
  std::optional<CertReason> reason;
  std::optional<CertWitness> witness;
  std::vector<std::string> notes;
};

enum class CompletionOracle { Factorization, BruteForce };

/// Decides whether some monic integer p of degree g with p(0) = +-1, reciprocal
/// mod 2, has lambda (a root of m) as a root of one of its four transforms.
/// CertifiedNotLift means no such p exists, so lambda is not the stretch factor
/// of a nonorientable lift on the genus-g surface.
CertVerdict nonlift_certificate(const IntPoly& m, int genus, CompletionOracle oracle = CompletionOracle::Factorization);

std::string to_string(VanishingMethod m);
std::string to_string(CertOutcome o);
std::string to_string(CertReason r);
std::string to_string(LiftVariant v);

}  // namespace ietsaf
