#include "zc/json_io.hpp"

namespace zc {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  throw InvalidInput("expected rational string or integer, got " + j.dump());
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

Json to_json(const AlgElement& a) {
  Json j;
  j["modulus"] = to_json(a.parent().modulus());
  j["rep"] = to_json(a.rep());
  return j;
}

AlgElement alg_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("rep"))
    throw InvalidInput("algebra element must be {\"modulus\": [...], \"rep\": [...]}");
  return AlgElement(EtaleAlgebra(poly_from_json(j.at("modulus"))), poly_from_json(j.at("rep")));
}

}  // namespace zc
