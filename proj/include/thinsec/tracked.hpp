/*! @file tracked.hpp
 * @brief A field value carrying a rational linear form in named parameters.
 *
 * Running the Rips machine on Tracked coordinates records how every new
 * width depends on the widths of the starting complex.  Decisions are taken
 * on the value alone, so the run is identical to the plain FieldElement run.
 */
#ifndef THINSEC_TRACKED_HPP
#define THINSEC_TRACKED_HPP

#include <map>

#include "thinsec/numberfield.hpp"

namespace thinsec
{
  class Tracked
  {
  public:
    //! keys >= 0 are parameters; key -1-k is the position of arc k's left end
    using Form = std::map<int, Rational>;

    Tracked() = default;
    Tracked(FieldElement v, Form f = {}) : value_(std::move(v)), form_(std::move(f)) {}

    const FieldElement& value() const { return value_; }
    const Form& form() const { return form_; }
    Rational coeff(int key) const;
    bool has_offsets() const;

    Tracked operator-() const;
    Tracked& operator+=(const Tracked& o);
    Tracked& operator-=(const Tracked& o);

  private:
    FieldElement value_;
    Form form_;
  };

  inline Tracked operator+(Tracked a, const Tracked& b) { a += b; return a; }
  inline Tracked operator-(Tracked a, const Tracked& b) { a -= b; return a; }

  inline bool operator==(const Tracked& a, const Tracked& b) { return a.value() == b.value(); }
  inline bool operator!=(const Tracked& a, const Tracked& b) { return a.value() != b.value(); }
  inline bool operator<(const Tracked& a, const Tracked& b) { return a.value() < b.value(); }
  inline bool operator>(const Tracked& a, const Tracked& b) { return a.value() > b.value(); }
  inline bool operator<=(const Tracked& a, const Tracked& b) { return a.value() <= b.value(); }
  inline bool operator>=(const Tracked& a, const Tracked& b) { return a.value() >= b.value(); }

  inline const FieldElement& value_of(const FieldElement& x) { return x; }
  inline const FieldElement& value_of(const Tracked& x) { return x.value(); }
}

#endif // THINSEC_TRACKED_HPP
