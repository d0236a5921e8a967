#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <mpfr.h>

namespace fpa::detail {

template <unsigned Digits>
using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                             boost::multiprecision::et_off>;

inline constexpr unsigned kTierDigits[] = {50, 100, 200, 400, 800};

inline long double log_gamma(long double x) {
  int sign = 0;
  return lgammal_r(x, &sign);
}

template <unsigned Digits>
MpReal<Digits> log_gamma(const MpReal<Digits>& x) {
  MpReal<Digits> out;
  int sign = 0;
  mpfr_lgamma(out.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  return out;
}

/// Calls f.template operator()<Digits>() for the tier with index `tier`.
template <class F>
decltype(auto) with_tier(unsigned tier, F&& f) {
  switch (tier) {
    case 0: return f.template operator()<50>();
    case 1: return f.template operator()<100>();
    case 2: return f.template operator()<200>();
    case 3: return f.template operator()<400>();
    default: return f.template operator()<800>();
  }
}

inline constexpr unsigned kTierCount = 5;

}  // namespace fpa::detail
