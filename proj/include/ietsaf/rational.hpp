#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ietsaf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed or out-of-contract inputs. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative procedure exceeds its configured cap (exit code 3).
class IterationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "n" or "p/q" (optional sign, decimal). The result is canonical.
Rational parse_rational(std::string_view text);

// Canonical text: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Splits on commas and parses each field; empty input is an error.
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join_rationals(const std::vector<Rational>& values);

// "lo,hi" with lo < hi.
std::pair<Rational, Rational> parse_interval(std::string_view text);

}  // namespace ietsaf
