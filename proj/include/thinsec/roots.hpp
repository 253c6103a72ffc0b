/*! @file roots.hpp
 * @brief Real root isolation by Sturm sequences and bisection refinement.
 */
#ifndef THINSEC_ROOTS_HPP
#define THINSEC_ROOTS_HPP

#include <vector>

#include "thinsec/poly.hpp"

namespace thinsec
{
  //! Sturm chain of a squarefree polynomial
  class SturmChain
  {
  public:
    explicit SturmChain(const IntPoly& p);
    //! number of distinct real roots in the half-open interval (a, b]
    int count(const Rational& a, const Rational& b) const;
    int variations(const Rational& x) const;

  private:
    std::vector<IntPoly> chain_;
  };

  //! one interval per distinct real root of p, ascending, pairwise disjoint,
  //! with endpoints where p does not vanish
  std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

  //! shrink an isolating interval of a squarefree p below the given width;
  //! collapses to [r, r] if bisection lands on a rational root
  RatInterval refine_root(const IntPoly& p, RatInterval iv, const Rational& width);

  //! |root| < bound for every complex root (Cauchy)
  Rational root_bound(const IntPoly& p);
}

#endif // THINSEC_ROOTS_HPP
