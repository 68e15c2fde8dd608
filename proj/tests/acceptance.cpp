// Acceptance run: one PASS/FAIL line per criterion, each within its time budget.

#include "support.hpp"

#include "commands.hpp"
#include "ietsaf/certificates.hpp"
#include "ietsaf/iet_io.hpp"
#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace ietsaf;
using ietsaf::testing::Rng;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

AlgNum num(const NumberField& k, const Rational& q) { return AlgNum::from_rational(k, q); }

Outcome ay_vanishing() {
  for (int g = 3; g <= 8; ++g) {
    if (!saf(ay_lift(g)).is_zero()) return {false, "nonzero at g=" + std::to_string(g)};
  }
  return {true, "g=3..8 zero matrix"};
}

Outcome ay_self_similarity() {
  for (int g = 3; g <= 6; ++g) {
    if (!ay_self_similarity_check(g)) return {false, "fails at g=" + std::to_string(g)};
  }
  // negative controls: perturbed block orders
  for (const std::vector<int>& order : {std::vector<int>{2, 1, 3}, std::vector<int>{1, 3, 2, 4}}) {
    const int g = static_cast<int>(order.size());
    auto perturbed = ay_lift_with_order(g, order);
    bool holds = false;
    try {
      holds = self_similarity_holds(perturbed, AlgNum::generator(perturbed.field()),
                                    ay_conjugating_rotation(perturbed.field(), g));
    } catch (const IterationCapExceeded&) {
      holds = false;
    }
    if (holds) return {false, "negative control passed"};
  }
  int literal = 0;
  for (int g = 3; g <= 6; ++g) {
    auto lift = ay_lift(g);
    const AlgNum a = AlgNum::generator(lift.field());
    literal += first_return(lift, a) == scale(lift, a);
  }
  return {true, "g=3..6 conjugate after rotation by (1+a^g)/2; control fails; base-point-aligned form holds for " +
                    std::to_string(literal) + "/4"};
}

Outcome cancellation() {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto k = testing::random_cubic_field(rng);
    auto inv = testing::random_pair_involution(rng, k);
    if (!saf(inv).is_zero()) return {false, "involution nonzero"};
    const Rational q(static_cast<long>(rng() % 11) + 1, 12);
    if (!saf(rotation(inv.total(), inv.total() * q)).is_zero()) return {false, "rational rotation nonzero"};
    if (!saf(rotate(inv, inv.total() * Rational(1, 2))).is_zero()) return {false, "lift nonzero"};
  }
  return {true, "100 random pair-involutions"};
}

Outcome homomorphism() {
  Rng rng(2025);
  for (int t = 0; t < 100; ++t) {
    auto k = testing::random_cubic_field(rng);
    const AlgNum one = num(k, 1);
    auto f = testing::random_iet(rng, one, 2, 6);
    auto g = testing::random_iet(rng, one, 2, 6);
    if (!(saf(compose(f, g)) == saf(f) + saf(g))) return {false, "saf(f o g) mismatch"};
    if (!(saf(inverse(f)) == -saf(f))) return {false, "saf(f^-1) mismatch"};
  }
  return {true, "100 random pairs"};
}

Outcome nonzero_control() {
  auto k = ay_alpha(3);
  auto w = saf(rotation(num(k, 1), AlgNum::generator(k)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Rational expect = (i == 0 && j == 1) ? 2 : (i == 1 && j == 0) ? -2 : 0;
      if (w(i, j) != expect) return {false, "unexpected entry"};
    }
  }
  return {true, "M[1,2]=2, M[2,1]=-2, rest 0"};
}

Outcome criterion_agreement() {
  std::vector<IntPoly> corpus;
  for (int g = 3; g <= 8; ++g) corpus.push_back(ay_stretch_minpoly(g));
  const IntPoly golden = parse_int_poly("1,-3,1");
  const IntPoly fib = parse_int_poly("-1,-1,1");
  if (vanishing_by_reciprocity(golden).vanishes) return {false, "x^2-3x+1 vanishes"};
  if (!vanishing_by_reciprocity(fib).vanishes) return {false, "x^2-x-1 does not vanish"};
  corpus.push_back(golden);
  corpus.push_back(fib);
  Rng rng(2026);
  std::uniform_int_distribution<int> coef(-4, 4);
  int randoms = 0;
  while (randoms < 20) {
    const int d = 3 + randoms % 2;
    std::vector<Integer> c;
    for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    const IntPoly m(c);
    if (m[0] == 0) continue;
    bool certified = false;
    for (int p : {2, 3, 5, 7}) certified = certified || irreducible_mod_p(m, p);
    if (!certified || sturm_isolate(to_rational(m), 1, root_bound(to_rational(m)) + 1).empty()) continue;
    corpus.push_back(m);
    ++randoms;
  }
  for (const auto& m : corpus) {
    const auto [lo, hi] = largest_root_above_one(m);
    if (vanishing_by_reciprocity(m).vanishes != vanishing_by_field_degree(m, lo, hi).vanishes) {
      return {false, "disagree on " + pretty(m)};
    }
  }
  return {true, std::to_string(corpus.size()) + " polynomials"};
}

Outcome cross_path() {
  for (int g = 3; g <= 8; ++g) {
    if (saf(ay_lift(g)).is_zero() != vanishing_by_reciprocity(ay_stretch_minpoly(g)).vanishes) {
      return {false, "mismatch at g=" + std::to_string(g)};
    }
  }
  return {true, "g=3..8"};
}

Outcome certificate_oracle() {
  int cases = 0;
  for (std::uint64_t bits = 3; bits < (1u << 7); bits += 2) {
    const Gf2Poly mbar(bits);
    const IntPoly m = mbar.lift();
    for (int g = 1; g <= 12; ++g) {
      const auto a = nonlift_certificate(m, g, CompletionOracle::Factorization);
      const auto b = nonlift_certificate(m, g, CompletionOracle::BruteForce);
      const bool exists = testing::admissible_mod2_exists(mbar, g);
      if (a.outcome != b.outcome || a.reason != b.reason || (a.outcome == CertOutcome::Inconclusive) != exists) {
        return {false, "disagree on " + pretty(mbar) + " g=" + std::to_string(g)};
      }
      ++cases;
    }
  }
  const IntPoly cubic = parse_int_poly("-1,-1,0,1");
  if (nonlift_certificate(cubic, 3).outcome != CertOutcome::CertifiedNotLift) return {false, "x^3-x-1 g=3"};
  if (nonlift_certificate(cubic, 6).outcome != CertOutcome::Inconclusive) return {false, "x^3-x-1 g=6"};
  if (nonlift_certificate(parse_int_poly("-1,-1,-1,1"), 3).outcome != CertOutcome::Inconclusive) {
    return {false, "x^3-x^2-x-1 g=3"};
  }
  for (int g = 1; g <= 12; ++g) {
    if (nonlift_certificate(parse_int_poly("2,0,1,1"), g).reason != CertReason::ConstantNotUnit) {
      return {false, "constant 2 not rejected"};
    }
  }
  return {true, std::to_string(cases) + " (mbar, g) pairs exhaustive, spot values match"};
}

Outcome soundness() {
  for (int g = 3; g <= 8; ++g) {
    if (nonlift_certificate(ay_stretch_minpoly(g), g).outcome != CertOutcome::Inconclusive) {
      return {false, "rejected g=" + std::to_string(g)};
    }
  }
  return {true, "g=3..8 inconclusive"};
}

Outcome numerics_and_cli() {
  Rng rng(2027);
  std::vector<Iet> corpus{ay_lift(3), ay_lift(5), ay_lift(8), ay_boundary_involution(4)};
  for (int t = 0; t < 4; ++t) {
    auto k = testing::random_cubic_field(rng);
    corpus.push_back(testing::random_iet(rng, num(k, 1), 3, 7));
  }
  int points = 0;
  double worst = 0;
  while (points < 1000) {
    const Iet& f = corpus[static_cast<std::size_t>(points) % corpus.size()];
    const testing::FloatIet sim(f);
    const AlgNum x = testing::random_point_in(rng, f.total());
    const double xd = to_double(x);
    if (sim.distance_to_break(xd) < 1e-9) continue;
    const double exact = to_double(f(x));
    worst = std::max(worst, std::abs(exact - sim(xd)) / std::max(std::abs(exact), to_double(f.total())));
    ++points;
  }
  if (worst > 1e-9) return {false, "float deviation " + std::to_string(worst)};

  for (const auto& f : corpus) {
    if (!(parse_iet(emit_iet(f)) == f) || emit_iet(parse_iet(emit_iet(f))) != emit_iet(f)) {
      return {false, "IET round trip"};
    }
  }
  const auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const std::vector<std::vector<std::string>> cmds{
      {"--json", "vanishing", "--minpoly", "-1,-1,-1,1"},
      {"--json", "nonlift", "--minpoly", "-1,-1,0,1", "--genus", "6", "--oracle"},
      {"--json", "ay", "--genus", "4", "--check"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    if (a.first != 0 || a.second != b.second) return {false, "rerun differs: " + c[1]};
    if (cli::Report::parse(a.second).to_json() != a.second) return {false, "report round trip: " + c[1]};
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", worst);
  return {true, "1000 points, worst relative error " + std::string(buf) + "; CLI round trip and reruns identical"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "AY lift SAF vanishes", 10, ay_vanishing},
      {2, "AY self-similarity", 30, ay_self_similarity},
      {3, "pair-involution cancellation", 30, cancellation},
      {4, "SAF homomorphism", 30, homomorphism},
      {5, "irrational rotation nonzero control", 1, nonzero_control},
      {6, "vanishing criteria agree", 10, criterion_agreement},
      {7, "SAF vs reciprocity on AY", 10, cross_path},
      {8, "nonlift certificate vs oracle", 60, certificate_oracle},
      {9, "AY soundness anchor", 5, soundness},
      {10, "numerics, round trip, determinism", 30, numerics_and_cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = dt <= c.budget_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s  [%2d] %-36s %7.3f s / %4.0f s  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, dt, c.budget_s,
                o.detail.c_str(), in_time ? "" : " (over budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
