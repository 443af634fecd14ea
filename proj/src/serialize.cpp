#include "expnev/serialize.hpp"

namespace expnev {

using nlohmann::json;

json zpoly_to_json(const ZPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

ZPoly zpoly_from_json(const json& j) {
  std::vector<GR> cs;
  for (const auto& s : j) cs.push_back(GR::from_string(s.get<std::string>()));
  return ZPoly(std::move(cs));
}

json basis_to_json(const UnitBasis& b) {
  json out = json::array();
  for (const auto& q : b.frequencies()) out.push_back(zpoly_to_json(q));
  return out;
}

UnitBasis basis_from_json(const json& j) {
  std::vector<ZPoly> qs;
  for (const auto& q : j) qs.push_back(zpoly_from_json(q));
  return UnitBasis(std::move(qs));
}

json laurent_to_json(const LaurentPoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms())
    out.push_back({{"exponents", e}, {"num", zpoly_to_json(c.num())}, {"den", zpoly_to_json(c.den())}});
  return out;
}

LaurentPoly laurent_from_json(const json& j, std::size_t arity) {
  LaurentPoly out(arity);
  for (const auto& t : j)
    out.add_term(t.at("exponents").get<Exponent>(),
                 RatFunc(zpoly_from_json(t.at("num")), zpoly_from_json(t.at("den"))));
  return out;
}

json ypoly_to_json(const MonicYPoly& f) {
  json out = json::array();
  for (const auto& c : f.lower()) out.push_back(laurent_to_json(c));
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace expnev
