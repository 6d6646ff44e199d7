#include "support.hpp"
#include "unitwist/closed_form.hpp"

using namespace unitwist;

TEST_CASE("every closed form matches at p = 101") {
  for (ClosedFormCase c : all_closed_form_cases()) {
    const auto r = closed_form_check(c, 101, 1000, 2024);
    CHECK_MESSAGE(r.pass, to_string(c));
    CHECK(r.lhs == 1000);
    CHECK(r.seed == 2024u);
  }
}

TEST_CASE("other primes") {
  for (std::uint32_t p : {7u, 13u, 1009u})
    for (ClosedFormCase c : all_closed_form_cases()) CHECK_MESSAGE(closed_form_check(c, p, 300, p).pass, to_string(c));
}

TEST_CASE("determinism and degenerate samples") {
  const auto a = closed_form_check(ClosedFormCase::SL3W0, 7, 500, 5).to_json();
  const auto b = closed_form_check(ClosedFormCase::SL3W0, 7, 500, 5).to_json();
  CHECK(a == b);
  // at p = 7 many draws hit a zero denominator
  CHECK(a["degenerate"].get<int>() > 0);
}

TEST_CASE("names") {
  CHECK(parse_closed_form_case("sl3-ts") == ClosedFormCase::SL3TS);
  CHECK(parse_closed_form_case("SP4-gen") == ClosedFormCase::SP4Gen);
  CHECK(to_string(ClosedFormCase::SL2W0) == "SL2-w0");
  CHECK(all_closed_form_cases().size() == 8);
  CHECK_ERROR_KIND(parse_closed_form_case("SL5-w0"), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(closed_form_check(ClosedFormCase::SL2Gen, 3, 10, 1), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(closed_form_check(ClosedFormCase::SL2Gen, 100, 10, 1), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(closed_form_check(ClosedFormCase::SL2Gen, 101, 0, 1), ErrorKind::InvalidArgument);
}
