/*! @file numberfield.hpp
 * @brief Exact arithmetic in Q(lambda) for a real algebraic lambda.
 *
 * A field is a squarefree modulus with a rational interval isolating one of
 * its real roots.  Rational linear factors are split off at construction, so
 * the stored modulus has no rational roots; for the cubic and quadratic
 * fields used here that makes it irreducible and residues are canonical.
 *
 * Elements are residues modulo the modulus.  Zero testing is structural
 * (residue identically zero); signs are decided by exact rational interval
 * evaluation on a shrinking enclosure of lambda.
 */
#ifndef THINSEC_NUMBERFIELD_HPP
#define THINSEC_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "thinsec/poly.hpp"
#include "thinsec/roots.hpp"

namespace thinsec
{
  class NumberField
  {
  public:
    NumberField(IntPoly original, IntPoly modulus, RatInterval root, std::vector<Rational> stripped);

    const IntPoly& modulus() const { return modulus_; }
    //! the polynomial the caller supplied, before rational factors were split off
    const IntPoly& original_modulus() const { return original_; }
    //! rational roots removed from the original modulus
    const std::vector<Rational>& stripped_roots() const { return stripped_; }
    const RatInterval& root_interval() const { return root_; }
    //! dyadic enclosure of width below 2^-256, computed once
    const RatInterval& tight_interval() const { return tight_; }
    int degree() const { return modulus_.degree(); }

    bool same_as(const NumberField& o) const;

  private:
    IntPoly original_, modulus_;
    RatInterval root_, tight_;
    std::vector<Rational> stripped_;
  };

  using FieldPtr = std::shared_ptr<const NumberField>;

  //! field generated by the unique root of modulus in hint (closed interval)
  FieldPtr field_new(const IntPoly& modulus, const RatInterval& hint);

  //! Q itself, presented as Q(0)
  FieldPtr rational_field();

  class FieldElement
  {
  public:
    //! zero, not yet bound to a field
    FieldElement() = default;
    FieldElement(const Rational& q);
    FieldElement(long v) : FieldElement(Rational(v)) {}
    FieldElement(int v) : FieldElement(Rational(v)) {}
    FieldElement(FieldPtr field, IntPoly poly);
    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const IntPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_rational() const { return poly_.degree() <= 0; }
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

  private:
    static FieldPtr join(const FieldPtr& a, const FieldPtr& b);
    FieldPtr field_;
    IntPoly poly_;
  };

  FieldElement operator+(FieldElement a, const FieldElement& b);
  FieldElement operator-(FieldElement a, const FieldElement& b);
  FieldElement operator*(FieldElement a, const FieldElement& b);
  FieldElement operator/(FieldElement a, const FieldElement& b);
  FieldElement inverse(const FieldElement& x);
  FieldElement pow(const FieldElement& x, unsigned k);

  enum class ArithOp { Add, Sub, Mul, Div };
  FieldElement arith(const FieldElement& x, const FieldElement& y, ArithOp op);

  //! -1, 0 or +1; always terminates
  int sign_of(const FieldElement& x);

  //! certified enclosure of the value, of width below w
  RatInterval enclose(const FieldElement& x, const Rational& w);

  //! rational r with |r - x| < eps
  Rational approximate(const FieldElement& x, const Rational& eps);

  double to_double(const FieldElement& x);

  //! polynomial text in the generator, e.g. "-l^2 + 2*l"
  std::string to_string(const FieldElement& x, const std::string& var = "l");

  bool operator==(const FieldElement& a, const FieldElement& b);
  inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  inline bool operator<(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) < 0; }
  inline bool operator>(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) > 0; }
  inline bool operator<=(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) <= 0; }
  inline bool operator>=(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) >= 0; }

  inline const FieldElement& min(const FieldElement& a, const FieldElement& b) { return b < a ? b : a; }
  inline const FieldElement& max(const FieldElement& a, const FieldElement& b) { return a < b ? b : a; }

  //! structural order on residues (not the numeric order); usable as a map key
  //! because residues are canonical
  struct ResidueLess
  {
    bool operator()(const FieldElement& a, const FieldElement& b) const;
  };
}

namespace Eigen
{
  template<> struct NumTraits<thinsec::FieldElement> : GenericNumTraits<thinsec::FieldElement>
  {
    typedef thinsec::FieldElement Real;
    typedef thinsec::FieldElement NonInteger;
    typedef thinsec::FieldElement Nested;
    enum
    {
      IsComplex = 0,
      IsInteger = 0,
      IsSigned = 1,
      RequireInitialization = 1,
      ReadCost = 10,
      AddCost = 50,
      MulCost = 200
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
  };
}

#endif // THINSEC_NUMBERFIELD_HPP
