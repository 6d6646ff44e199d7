#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "json.hpp"
#include "unitwist/ring.hpp"

namespace unitwist {

using Json = nlohmann::ordered_json;

/// Outcome of one point-count or identity check.
struct CountReport {
  std::string check;
  Json params = Json::object();
  Json lhs;
  Json rhs;
  bool pass = false;
  std::optional<std::uint64_t> seed;
  Json extra = Json::object();  // appended after the fixed fields

  Json to_json() const;
};

/// Integers as JSON numbers when they fit in 64 bits, otherwise strings;
/// non-integral rationals as "num/den".
Json json_number(const mpq_class& x);
Json json_number(const mpz_class& x);
Json json_poly(const LaurentPoly& a);

}  // namespace unitwist
