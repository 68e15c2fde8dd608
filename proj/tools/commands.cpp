#include "commands.hpp"

#include "report.hpp"

#include "ietsaf/arnoux_yoccoz.hpp"
#include "ietsaf/certificates.hpp"
#include "ietsaf/iet_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>

namespace ietsaf::cli {

namespace {

struct Options {
  bool json = false;
  bool show_float = false;
  bool timing = false;
  std::string iet;
  std::string iet2;
  std::string out;
  std::string sub;
  std::string minpoly;
  std::string interval;
  int genus = 0;
  bool check = false;
  bool oracle = false;
  long cap = kDefaultReturnCap;
};

void print(const Report& r, const Options& opt, std::ostream& out) { out << (opt.json ? r.to_json() : r.to_text()); }

OrderedJson matrix_json(const WedgeClass& w, bool as_float) {
  auto rows = OrderedJson::array();
  for (int i = 0; i < w.dimension(); ++i) {
    auto row = OrderedJson::array();
    for (int j = 0; j < w.dimension(); ++j) row.push_back(as_float ? float_text(w(i, j)) : to_string(w(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson notes_json(const std::vector<std::string>& notes) {
  auto arr = OrderedJson::array();
  for (const auto& n : notes) arr.push_back(n);
  return arr;
}

// Writes an IET either to --out (and a short report to stdout) or straight to stdout.
void emit_result(const std::string& command, const Iet& f, const Options& opt, std::ostream& out) {
  if (opt.out.empty()) {
    out << emit_iet(f);
    return;
  }
  write_iet_file(opt.out, f);
  Report r(command);
  r.inputs()["iet"] = opt.iet;
  if (!opt.iet2.empty()) r.inputs()["iet2"] = opt.iet2;
  r.values()["written"] = opt.out;
  r.values()["intervals"] = f.size();
  print(r, opt, out);
}

int cmd_saf(const Options& opt, std::ostream& out) {
  const Iet f = read_iet_file(opt.iet);
  const WedgeClass w = saf(f);
  Report r("saf");
  r.inputs()["iet"] = opt.iet;
  r.verdicts()["saf"] = w.is_zero() ? "VANISHES" : "NONZERO";
  r.values()["basis"] = "1, alpha, ..., alpha^" + std::to_string(w.dimension() - 1);
  r.values()["matrix"] = matrix_json(w, false);
  if (opt.show_float) r.values()["matrix_float"] = matrix_json(w, true);
  print(r, opt, out);
  return kExitOk;
}

int cmd_vanishing(const Options& opt, std::ostream& out) {
  const IntPoly m = parse_int_poly(opt.minpoly);
  if (m.degree() < 1 || !m.is_monic()) throw InvalidInput("polynomial must be monic of degree >= 1");
  if (!is_squarefree(m)) throw InvalidInput("polynomial is not squarefree");
  const auto [lo, hi] = opt.interval.empty() ? largest_root_above_one(m) : parse_interval(opt.interval);
  const auto by_reciprocity = vanishing_by_reciprocity(m);
  const auto by_degree = vanishing_by_field_degree(m, lo, hi);
  Report r("vanishing");
  r.inputs()["minpoly"] = format_coeffs(m);
  r.inputs()["interval"] = to_string(lo) + "," + to_string(hi);
  r.verdicts()["reciprocity"] = by_reciprocity.vanishes ? "VANISHES" : "NONZERO";
  r.verdicts()["field_degree"] = by_degree.vanishes ? "VANISHES" : "NONZERO";
  r.verdicts()["agree"] = by_reciprocity.vanishes == by_degree.vanishes;
  r.values()["polynomial"] = pretty(m);
  r.values()["reversal"] = format_coeffs(by_reciprocity.details);
  r.values()["minpoly_lambda_plus_inverse"] = format_coeffs(by_degree.details);
  auto notes = by_reciprocity.notes;
  notes.insert(notes.end(), by_degree.notes.begin(), by_degree.notes.end());
  r.values()["notes"] = notes_json(notes);
  if (opt.show_float) {
    const NumberField field = NumberField::create(m, lo, hi);
    r.values()["lambda_float"] = float_text(AlgNum::generator(field));
  }
  print(r, opt, out);
  return kExitOk;
}

void put_cert(OrderedJson& verdicts, OrderedJson& values, const CertVerdict& v) {
  verdicts["outcome"] = to_string(v.outcome);
  if (v.reason) verdicts["reason"] = to_string(*v.reason);
  if (v.witness) {
    values["witness_variant"] = to_string(v.witness->variant);
    values["witness_completion_mod2"] = format_coeffs(v.witness->completion);
    values["witness_completion"] = pretty(v.witness->completion);
  }
  values["notes"] = notes_json(v.notes);
}

int cmd_nonlift(const Options& opt, std::ostream& out) {
  const IntPoly m = parse_int_poly(opt.minpoly);
  const CertVerdict v = nonlift_certificate(m, opt.genus);
  Report r("nonlift");
  r.inputs()["minpoly"] = format_coeffs(m);
  r.inputs()["genus"] = opt.genus;
  put_cert(r.verdicts(), r.values(), v);
  if (opt.oracle) {
    const int k = opt.genus - m.degree();
    if (k >= 0 && k <= 24) {
      const CertVerdict brute = nonlift_certificate(m, opt.genus, CompletionOracle::BruteForce);
      r.verdicts()["oracle_outcome"] = to_string(brute.outcome);
      r.verdicts()["oracle_agrees"] = brute.outcome == v.outcome && brute.reason == v.reason;
    } else {
      r.verdicts()["oracle_outcome"] = "skipped";
    }
  }
  print(r, opt, out);
  return kExitOk;
}

int cmd_ay(const Options& opt, std::ostream& out) {
  const AySystem sys = ay_system(opt.genus);
  if (!opt.out.empty()) write_iet_file(opt.out, sys.lift);
  if (!opt.check && opt.out.empty()) {
    out << emit_iet(sys.lift);
    return kExitOk;
  }
  Report r("ay");
  r.inputs()["genus"] = opt.genus;
  const auto [lo, hi] = sys.field.root_interval();
  r.values()["alpha_modulus"] = format_coeffs(sys.field.modulus());
  r.values()["alpha_interval"] = to_string(lo) + "," + to_string(hi);
  if (opt.show_float) r.values()["alpha_float"] = float_text(AlgNum::generator(sys.field));
  r.values()["stretch_minpoly"] = format_coeffs(sys.stretch_minpoly);
  r.values()["lift_intervals"] = sys.lift.size();
  if (!opt.out.empty()) r.values()["written"] = opt.out;
  if (opt.check) {
    const bool saf_zero = saf(sys.lift).is_zero();
    const Iet& b = sys.boundary_involution;
    const bool involution = compose(b, b) == identity(b.total(), true);
    const bool similar = self_similarity_holds(sys.lift, AlgNum::generator(sys.field),
                                               ay_conjugating_rotation(sys.field, opt.genus), opt.cap);
    const bool reciprocity_vanishes = vanishing_by_reciprocity(sys.stretch_minpoly).vanishes;
    const auto cert = nonlift_certificate(sys.stretch_minpoly, opt.genus);
    const bool inconclusive = cert.outcome == CertOutcome::Inconclusive;
    r.verdicts()["saf_vanishes"] = saf_zero;
    r.verdicts()["boundary_is_involution"] = involution;
    r.verdicts()["self_similarity"] = similar;
    r.verdicts()["reciprocity_matches_saf"] = reciprocity_vanishes == saf_zero;
    r.verdicts()["nonlift_inconclusive"] = inconclusive;
    r.verdicts()["all_pass"] = saf_zero && involution && similar && reciprocity_vanishes == saf_zero && inconclusive;
  }
  print(r, opt, out);
  return kExitOk;
}

int cmd_induce(const Options& opt, std::ostream& out) {
  const Iet f = read_iet_file(opt.iet);
  const AlgNum b = parse_coords(f.field(), opt.sub);
  emit_result("induce", first_return(f, b, opt.cap), opt, out);
  return kExitOk;
}

int cmd_lift(const Options& opt, std::ostream& out) {
  const Iet f = read_iet_file(opt.iet);
  emit_result("lift", rotate(f, f.total() * Rational(1, 2)), opt, out);
  return kExitOk;
}

int cmd_compose(const Options& opt, std::ostream& out) {
  const Iet f = read_iet_file(opt.iet);
  const Iet g = read_iet_file(opt.iet2);
  emit_result("compose", compose(f, g), opt, out);
  return kExitOk;
}

int cmd_inverse(const Options& opt, std::ostream& out) {
  emit_result("inverse", inverse(read_iet_file(opt.iet)), opt, out);
  return kExitOk;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const Iet f = read_iet_file(opt.iet);
  const Iet g = read_iet_file(opt.iet2);
  Report r("compare");
  r.inputs()["iet"] = opt.iet;
  r.inputs()["iet2"] = opt.iet2;
  r.verdicts()["result"] = f == g ? "EQUAL" : "DIFFERENT";
  print(r, opt, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SAF invariants of interval exchanges, vanishing criteria and nonorientable-lift certificates",
               "ietsaf"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_flag("--float", opt.show_float, "Also display 20-digit decimal approximations");
  app.add_flag("--timing", opt.timing, "Print elapsed time to stderr");

  std::function<int(const Options&, std::ostream&)> action;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* saf_cmd = app.add_subcommand("saf", "SAF invariant of an IET file");
  saf_cmd->add_option("iet,--iet", opt.iet, "IET file")->required();
  bind(saf_cmd, cmd_saf);

  auto* van = app.add_subcommand("vanishing", "SAF vanishing verdict from the stretch factor's minimal polynomial");
  van->add_option("--minpoly", opt.minpoly, "Monic integer polynomial, constant-first")->required();
  van->add_option("--interval", opt.interval, "Isolating interval 'lo,hi' of the stretch factor");
  bind(van, cmd_vanishing);

  auto* nl = app.add_subcommand("nonlift", "Certificate that a stretch factor is not a nonorientable lift");
  nl->add_option("--minpoly", opt.minpoly, "Monic integer polynomial, constant-first")->required();
  nl->add_option("--genus", opt.genus, "Genus of the orientable surface")->required();
  nl->add_flag("--oracle", opt.oracle, "Cross-check against the brute-force completion search");
  bind(nl, cmd_nonlift);

  auto* ay = app.add_subcommand("ay", "Arnoux-Yoccoz lift for a genus");
  ay->add_option("--genus", opt.genus, "Genus g >= 3")->required();
  ay->add_flag("--check", opt.check, "Run SAF, self-similarity, involution and certificate checks");
  ay->add_option("--out", opt.out, "Write the lift IET here");
  ay->add_option("--cap", opt.cap, "Iteration cap for first-return induction");
  bind(ay, cmd_ay);

  auto* ind = app.add_subcommand("induce", "First-return map on [0, sub)");
  ind->add_option("--iet", opt.iet, "IET file")->required();
  ind->add_option("--sub", opt.sub, "Window length as power-basis coordinates")->required();
  ind->add_option("--out", opt.out, "Output file");
  ind->add_option("--cap", opt.cap, "Iteration cap");
  bind(ind, cmd_induce);

  auto* lift = app.add_subcommand("lift", "x -> f(x) + total/2 (mod total) for a circle IET");
  lift->add_option("--iet", opt.iet, "IET file")->required();
  lift->add_option("--out", opt.out, "Output file");
  bind(lift, cmd_lift);

  auto* comp = app.add_subcommand("compose", "x -> f(g(x)) with f from --iet and g from --iet2");
  comp->add_option("--iet", opt.iet, "IET file f")->required();
  comp->add_option("--iet2", opt.iet2, "IET file g")->required();
  comp->add_option("--out", opt.out, "Output file");
  bind(comp, cmd_compose);

  auto* inv = app.add_subcommand("inverse", "Inverse IET");
  inv->add_option("--iet", opt.iet, "IET file")->required();
  inv->add_option("--out", opt.out, "Output file");
  bind(inv, cmd_inverse);

  auto* cmp = app.add_subcommand("compare", "Equality after canonicalization");
  cmp->add_option("--iet", opt.iet, "First IET file")->required();
  cmp->add_option("--iet2", opt.iet2, "Second IET file")->required();
  bind(cmp, cmd_compare);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = action(opt, out);
  } catch (const IterationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (opt.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    err << "elapsed: " << dt.count() << " s\n";
  }
  return code;
}

}  // namespace ietsaf::cli
