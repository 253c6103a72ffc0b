/*! @file rational.hpp
 * @brief Arbitrary precision rationals (GMP) and their Eigen scalar traits.
 */
#ifndef THINSEC_RATIONAL_HPP
#define THINSEC_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <string>
#include <utility>

#include "thinsec/error.hpp"

namespace thinsec
{
  using Rational = mpq_class;
  using Integer = mpz_class;

  //! closed rational interval [lo, hi]
  struct RatInterval
  {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  };

  //! "p/q" (or "p" when q = 1), the serialized form used everywhere
  std::string to_string(const Rational& q);

  //! parse "p/q", "p" or a finite decimal such as "0.254"
  Rational parse_rational(const std::string& s);

  //! 1/10^k
  Rational pow10_inv(unsigned k);

  //! nearest double
  inline double to_double(const Rational& q) { return q.get_d(); }

  //! exact rational with the value of a finite double
  Rational from_double(double x);

  // interval arithmetic on rational intervals
  RatInterval operator+(const RatInterval& a, const RatInterval& b);
  RatInterval operator-(const RatInterval& a, const RatInterval& b);
  RatInterval operator*(const RatInterval& a, const RatInterval& b);
  RatInterval operator*(const RatInterval& a, const Rational& c);
}

namespace Eigen
{
  template<> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class>
  {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    enum
    {
      IsComplex = 0,
      IsInteger = 0,
      IsSigned = 1,
      RequireInitialization = 1,
      ReadCost = 6,
      AddCost = 30,
      MulCost = 60
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
  };
}

#endif // THINSEC_RATIONAL_HPP
