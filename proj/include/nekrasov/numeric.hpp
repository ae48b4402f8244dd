#pragma once
#include <boost/multiprecision/mpfr.hpp>

#include "nekrasov/rational.hpp"

namespace nekrasov {

// 50 significant decimal digits; expression templates off for simpler generic code.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

}  // namespace nekrasov

// Mixed Real/Rational products, found by argument-dependent lookup on mpq_class (global namespace).
inline nekrasov::Real operator*(const nekrasov::Real& a, const mpq_class& q) { return a * nekrasov::to_real(q); }
inline nekrasov::Real operator*(const mpq_class& q, const nekrasov::Real& a) { return a * nekrasov::to_real(q); }
