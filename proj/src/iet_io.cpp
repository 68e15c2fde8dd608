#include "ietsaf/iet_io.hpp"

#include <fstream>
#include <sstream>

namespace ietsaf {

OrderedJson iet_to_json(const Iet& f) {
  const auto [lo, hi] = f.field().root_interval();
  OrderedJson j;
  j["modulus"] = format_coeffs(f.field().modulus());
  j["root_interval"] = to_string(lo) + "," + to_string(hi);
  j["total"] = format_coords(f.total());
  auto lengths = OrderedJson::array();
  for (const auto& len : f.lengths()) lengths.push_back(format_coords(len));
  j["lengths"] = std::move(lengths);
  auto perm = OrderedJson::array();
  for (int p : f.perm()) perm.push_back(p + 1);
  j["perm"] = std::move(perm);
  j["circle"] = f.circle();
  return j;
}

namespace {

const OrderedJson& require(const OrderedJson& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string require_string(const OrderedJson& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Iet iet_from_json(const OrderedJson& j) {
  if (!j.is_object()) throw InvalidInput("IET file must hold a JSON object");
  const IntPoly modulus = parse_int_poly(require_string(j, "modulus"));
  const auto [lo, hi] = parse_interval(require_string(j, "root_interval"));
  const NumberField field = NumberField::create(modulus, lo, hi);
  AlgNum total = parse_coords(field, require_string(j, "total"));
  const auto& jl = require(j, "lengths");
  if (!jl.is_array()) throw InvalidInput("field \"lengths\" must be an array");
  std::vector<AlgNum> lengths;
  for (const auto& v : jl) {
    if (!v.is_string()) throw InvalidInput("each length must be a coordinate string");
    lengths.push_back(parse_coords(field, v.get<std::string>()));
  }
  const auto& jp = require(j, "perm");
  if (!jp.is_array()) throw InvalidInput("field \"perm\" must be an array");
  std::vector<int> perm;
  for (const auto& v : jp) {
    if (!v.is_number_integer()) throw InvalidInput("perm entries must be integers");
    perm.push_back(v.get<int>() - 1);
  }
  const auto& jc = require(j, "circle");
  if (!jc.is_boolean()) throw InvalidInput("field \"circle\" must be a boolean");
  return Iet::create(std::move(total), std::move(lengths), std::move(perm), jc.get<bool>());
}

std::string emit_iet(const Iet& f) { return iet_to_json(f).dump(2) + "\n"; }

Iet parse_iet(std::string_view text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("parse error: ") + e.what());
  }
  return iet_from_json(j);
}

Iet read_iet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_iet(buf.str());
}

void write_iet_file(const std::string& path, const Iet& f) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << emit_iet(f);
}

}  // namespace ietsaf
