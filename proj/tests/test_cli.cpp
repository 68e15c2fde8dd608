#include <doctest.h>

#include "support.hpp"

#include "commands.hpp"
#include "ietsaf/iet_io.hpp"
#include "report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace ietsaf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("ietsaf_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string put(const std::string& name, const Iet& f) const {
    const auto p = (dir_ / name).string();
    write_iet_file(p, f);
    return p;
  }
  std::string put_text(const std::string& name, const std::string& text) const {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

OrderedJson json_of(const Run& r) { return OrderedJson::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("saf command") {
  Scratch s;
  auto r = run({"--json", "saf", s.put("lift.json", ay_lift(3))});
  CHECK(r.code == 0);
  CHECK(json_of(r)["verdicts"]["saf"] == "VANISHES");

  auto k = ay_alpha(3);
  auto rot = rotation(AlgNum::from_rational(k, 1), AlgNum::generator(k));
  r = run({"--json", "saf", "--iet", s.put("rot.json", rot)});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["verdicts"]["saf"] == "NONZERO");
  CHECK(j["values"]["matrix"][0][1] == "2");
  CHECK(j["values"]["matrix"][1][0] == "-2");

  auto bad = OrderedJson::parse(emit_iet(rot));
  bad["perm"] = {1, 1};
  r = run({"saf", s.put_text("bad.json", bad.dump())});
  CHECK(r.code == 2);
  CHECK(r.err.find("perm not a bijection") != std::string::npos);

  r = run({"saf", s.put_text("broken.json", "{\n\"modulus\": [\n")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);

  r = run({"saf", s.path("missing.json")});
  CHECK(r.code == 2);
}

TEST_CASE("vanishing command") {
  auto r = run({"--json", "vanishing", "--minpoly", "-1,-1,-1,1"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["verdicts"]["reciprocity"] == "VANISHES");
  CHECK(j["verdicts"]["field_degree"] == "VANISHES");
  CHECK(j["verdicts"]["agree"] == true);

  r = run({"--json", "vanishing", "--minpoly", "1,-3,1", "--interval", "2,3"});
  j = json_of(r);
  CHECK(j["verdicts"]["reciprocity"] == "NONZERO");
  CHECK(j["verdicts"]["field_degree"] == "NONZERO");
  CHECK(j["values"]["minpoly_lambda_plus_inverse"] == "-3,1");

  r = run({"vanishing", "--minpoly", "1,0,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no real root > 1") != std::string::npos);
  CHECK(run({"vanishing", "--minpoly", "1,-2,1"}).code == 2);
  CHECK(run({"vanishing", "--minpoly", "1,-3,2"}).code == 2);
}

TEST_CASE("nonlift command") {
  auto j = json_of(run({"--json", "nonlift", "--minpoly", "-1,-1,0,1", "--genus", "3"}));
  CHECK(j["verdicts"]["outcome"] == "CertifiedNotLift");
  CHECK(j["verdicts"]["reason"] == "NoMod2Completion");

  j = json_of(run({"--json", "nonlift", "--minpoly", "-1,-1,0,1", "--genus", "6", "--oracle"}));
  CHECK(j["verdicts"]["outcome"] == "Inconclusive");
  CHECK(j["verdicts"]["oracle_agrees"] == true);
  CHECK(j["values"]["witness_completion_mod2"] == "1,0,1,1");

  j = json_of(run({"--json", "nonlift", "--minpoly", "-1,-1,-1,1", "--genus", "3"}));
  CHECK(j["verdicts"]["outcome"] == "Inconclusive");
}

TEST_CASE("ay command") {
  for (int g : {3, 8}) {
    auto r = run({"--json", "ay", "--genus", std::to_string(g), "--check"});
    CHECK(r.code == 0);
    CHECK(json_of(r)["verdicts"]["all_pass"] == true);
  }
  auto r = run({"ay", "--genus", "4"});
  CHECK(r.code == 0);
  CHECK(parse_iet(r.out) == ay_lift(4));
  r = run({"ay", "--genus", "2"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"ay", "--genus", "5", "--check", "--cap", "2"}).code == 3);
}

TEST_CASE("induce, lift, compose, inverse") {
  Scratch s;
  const auto lift = ay_lift(3);
  const auto lift_file = s.put("lift.json", lift);
  const AlgNum a = AlgNum::generator(lift.field());

  // induce at alpha; compare against the scaled lift, conjugated by the
  // rotation that aligns base points
  auto r = run({"induce", "--iet", lift_file, "--sub", format_coords(a), "--out", s.path("induced.json")});
  CHECK(r.code == 0);
  const AlgNum c = ay_conjugating_rotation(lift.field(), 3);
  const AlgNum one = lift.total();
  const Iet expected = scale(rotate(compose(lift, rotation(one, one - c)), c), a);
  r = run({"--json", "compare", "--iet", s.path("induced.json"), "--iet2", s.put("expected.json", expected)});
  CHECK(json_of(r)["verdicts"]["result"] == "EQUAL");
  r = run({"--json", "compare", "--iet", s.path("induced.json"), "--iet2", s.put("naive.json", scale(lift, a))});
  CHECK(json_of(r)["verdicts"]["result"] == "DIFFERENT");

  CHECK(run({"induce", "--iet", lift_file, "--sub", format_coords(a * Rational(1, 1000)), "--cap", "5"}).code == 3);
  CHECK(run({"induce", "--iet", lift_file, "--sub", "2,0,0"}).code == 2);

  // lift of a pair-involution has vanishing SAF
  testing::Rng rng(97);
  auto k = testing::random_cubic_field(rng);
  r = run({"lift", "--iet", s.put("invol.json", testing::random_pair_involution(rng, k))});
  CHECK(r.code == 0);
  r = run({"--json", "saf", s.put_text("lifted.json", r.out)});
  CHECK(json_of(r)["verdicts"]["saf"] == "VANISHES");

  CHECK(run({"inverse", "--iet", lift_file, "--out", s.path("inv.json")}).code == 0);
  r = run({"compose", "--iet", lift_file, "--iet2", s.path("inv.json")});
  CHECK(r.code == 0);
  CHECK(parse_iet(r.out) == identity(one, true));
  CHECK(parse_iet(r.out).size() == 1);
}

TEST_CASE("reports round-trip and reruns are byte-identical") {
  Scratch s;
  const auto lift_file = s.put("lift.json", ay_lift(4));
  const std::vector<std::vector<std::string>> commands{
      {"saf", lift_file},
      {"--float", "saf", lift_file},
      {"vanishing", "--minpoly", "-1,-1,-1,-1,1"},
      {"--float", "vanishing", "--minpoly", "1,-3,1"},
      {"nonlift", "--minpoly", "-1,-1,0,1", "--genus", "7", "--oracle"},
      {"ay", "--genus", "5", "--check"},
      {"ay", "--genus", "4"},
      {"induce", "--iet", lift_file, "--sub", "0,1,0,0"},
      {"lift", "--iet", lift_file},
      {"inverse", "--iet", lift_file},
      {"compare", "--iet", lift_file, "--iet2", lift_file},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto json_args = args;
    json_args.insert(json_args.begin(), "--json");
    const Run j = run(json_args);
    CHECK(j.out == run(json_args).out);
    const bool emits_iet = args[0] == "lift" || args[0] == "inverse" || args[0] == "induce" ||
                           (args[0] == "ay" && args.size() == 3);
    if (emits_iet) {
      CHECK(emit_iet(parse_iet(j.out)) == j.out);
      continue;
    }
    const auto rep = cli::Report::parse(j.out);
    CHECK(rep.to_json() == j.out);
    CHECK(cli::Report::parse(rep.to_json()) == rep);
  }
}

TEST_CASE("timing stays off stdout") {
  const auto a = run({"--timing", "vanishing", "--minpoly", "-1,-1,1"});
  const auto b = run({"vanishing", "--minpoly", "-1,-1,1"});
  CHECK(a.out == b.out);
  CHECK(a.err.find("elapsed") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"nonlift", "--minpoly", "1,1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
