/*! @file poly.hpp
 * @brief Univariate polynomials with rational coefficients.
 */
#ifndef THINSEC_POLY_HPP
#define THINSEC_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "thinsec/rational.hpp"

namespace thinsec
{
  //! dense polynomial, coefficients stored lowest degree first, always trimmed
  class IntPoly
  {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Rational> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(const Rational& c);
    static IntPoly monomial(const Rational& c, int degree);

    //! -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Rational& s);

    Rational eval(const Rational& x) const;
    RatInterval eval(const RatInterval& x) const;
    double eval(double x) const;

    IntPoly derivative() const;
    IntPoly monic() const;

    //! "x^3 - 4*x + 1" style text
    std::string to_string(const std::string& var = "x") const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

  private:
    void trim();
    std::vector<Rational> c_;
  };

  IntPoly operator+(IntPoly a, const IntPoly& b);
  IntPoly operator-(IntPoly a, const IntPoly& b);
  IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator*(IntPoly a, const Rational& s);

  //! quotient and remainder, b nonzero
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);
  IntPoly operator%(const IntPoly& a, const IntPoly& b);
  IntPoly operator/(const IntPoly& a, const IntPoly& b);

  //! monic gcd (zero if both are zero)
  IntPoly gcd(const IntPoly& a, const IntPoly& b);

  //! s, t with s*a + t*b = gcd(a, b)
  struct ExtGcd { IntPoly g, s, t; };
  ExtGcd ext_gcd(const IntPoly& a, const IntPoly& b);

  //! p / gcd(p, p')
  IntPoly squarefree_part(const IntPoly& p);

  //! rational roots via the rational root test (p nonzero)
  std::vector<Rational> rational_roots(const IntPoly& p);
}

#endif // THINSEC_POLY_HPP
