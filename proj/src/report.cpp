#include "unitwist/report.hpp"

namespace unitwist {

Json CountReport::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["pass"] = pass;
  if (seed) j["seed"] = *seed;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

Json json_number(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json json_number(const mpq_class& value) {
  mpq_class x = value;
  x.canonicalize();
  if (x.get_den() == 1) return json_number(mpz_class(x.get_num()));
  return x.get_str();
}

Json json_poly(const LaurentPoly& a) {
  Json out = Json::array();
  for (const auto& [e, c] : a.terms()) out.push_back(Json::array({e, json_number(c)}));
  return out;
}

}  // namespace unitwist
