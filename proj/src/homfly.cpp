#include "unitwist/homfly.hpp"

#include "unitwist/error.hpp"
#include "unitwist/hecke.hpp"

namespace unitwist {

ExtremeCoeff extreme_coeff(const BraidWord& beta, TraceSign sign) {
  const CoxeterSystem& sys = beta.system();
  if (sys.family() != Family::A) throw Error(ErrorKind::InvalidArgument, "HOMFLYPT coefficients need a type A braid");
  const int n = sys.rank() + 1;
  LaurentPoly tau = sign == TraceSign::Minus ? tau_minus_braid(beta) : tau_plus(eval_braid(beta));
  if (beta.size() % 2 != 0) tau = -tau;
  const LaurentPoly base = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  const int offset = sign == TraceSign::Minus ? -(n - 1) : (n - 1);
  return {std::move(tau), base.pow(static_cast<unsigned>(n - 1)), beta.size() + offset, n};
}

bool coeff_equal(const ExtremeCoeff& x, const ExtremeCoeff& y) {
  return x.numerator * y.denominator == y.numerator * x.denominator;
}

std::optional<LaurentPoly> exact_value(const ExtremeCoeff& x) { return x.numerator.div_exact(x.denominator); }

KalmanResult kalman_check(const BraidWord& beta) {
  const BraidWord twisted = braid_concat(beta, full_twist(beta.system()));
  KalmanResult r;
  r.lowest = extreme_coeff(beta, TraceSign::Minus);
  r.highest_twist = extreme_coeff(twisted, TraceSign::Plus);
  const int n = r.lowest.strands;
  r.values_equal = coeff_equal(r.lowest, r.highest_twist);
  r.degrees_aligned = r.highest_twist.a_degree - r.lowest.a_degree == n * (n - 1) + 2 * (n - 1);
  r.pass = r.values_equal && r.degrees_aligned;
  return r;
}

}  // namespace unitwist
