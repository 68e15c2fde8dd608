#pragma once

// Reports are ordered JSON objects with four sections:
//
//   command   subcommand name
//   inputs    echo of the arguments that affect the result
//   verdicts  decisions (strings / booleans)
//   values    exact data: matrices as rows of reduced fractions, polynomials
//             as constant-first coefficient lists, witnesses
//
// The same object renders as indented "key: value" text (default) or as JSON
// (--json). Both renderings are deterministic; timing never enters a report.

#include "ietsaf/iet_io.hpp"

#include <string>
#include <string_view>

namespace ietsaf::cli {

class Report {
 public:
  explicit Report(std::string command);

  OrderedJson& inputs() { return j_["inputs"]; }
  OrderedJson& verdicts() { return j_["verdicts"]; }
  OrderedJson& values() { return j_["values"]; }
  const OrderedJson& json() const { return j_; }

  std::string to_json() const;
  std::string to_text() const;

  static Report parse(std::string_view json_text);
  friend bool operator==(const Report& a, const Report& b) { return a.j_ == b.j_; }

 private:
  Report() = default;
  OrderedJson j_;
};

// 20 significant digits, for display only.
std::string float_text(const Rational& q);
std::string float_text(const AlgNum& a);

}  // namespace ietsaf::cli
