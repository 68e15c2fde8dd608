#include "report.hpp"

#include <gmpxx.h>

#include <cstdio>
#include <sstream>

namespace ietsaf::cli {

Report::Report(std::string command) {
  j_["command"] = std::move(command);
  j_["inputs"] = OrderedJson::object();
  j_["verdicts"] = OrderedJson::object();
  j_["values"] = OrderedJson::object();
}

std::string Report::to_json() const { return j_.dump(2) + "\n"; }

namespace {

bool is_scalar_array(const OrderedJson& v) {
  for (const auto& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const OrderedJson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& out, const OrderedJson& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    out << pad << key << ":";
    if (value.is_object()) {
      out << "\n";
      render(out, value, indent + 2);
    } else if (value.is_array() && is_scalar_array(value)) {
      out << " [";
      bool first = true;
      for (const auto& e : value) {
        out << (first ? "" : ", ") << scalar_text(e);
        first = false;
      }
      out << "]\n";
    } else if (value.is_array()) {
      out << "\n";
      for (const auto& e : value) {
        if (e.is_array() && is_scalar_array(e)) {
          out << pad << "  [";
          bool first = true;
          for (const auto& x : e) {
            out << (first ? "" : ", ") << scalar_text(x);
            first = false;
          }
          out << "]\n";
        } else if (e.is_object()) {
          out << pad << "  -\n";
          render(out, e, indent + 4);
        } else {
          out << pad << "  " << scalar_text(e) << "\n";
        }
      }
    } else {
      out << " " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  render(out, j_, 0);
  return out.str();
}

Report Report::parse(std::string_view json_text) {
  Report r;
  try {
    r.j_ = OrderedJson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("report parse error: ") + e.what());
  }
  for (const char* key : {"command", "inputs", "verdicts", "values"}) {
    if (!r.j_.contains(key)) throw InvalidInput(std::string("report lacks \"") + key + "\"");
  }
  return r;
}

std::string float_text(const Rational& q) {
  mpf_class f(q, 128);
  char* buf = nullptr;
  const int n = gmp_asprintf(&buf, "%.19Fe", f.get_mpf_t());
  std::string out = n >= 0 ? std::string(buf) : std::string("?");
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  if (n >= 0) freefunc(buf, static_cast<size_t>(n) + 1);
  return out;
}

std::string float_text(const AlgNum& a) {
  // Tolerance far below the 20th significant digit of anything we print.
  const Rational tol = Rational(1, 1) / Rational(Integer(1) << 100);
  return float_text(approximate(a, tol));
}

}  // namespace ietsaf::cli
