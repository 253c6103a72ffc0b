/*! @file systems.hpp
 * @brief The two thin examples: transition matrices, fields, parameters and
 * the published reference data they are checked against.
 */
#ifndef THINSEC_SYSTEMS_HPP
#define THINSEC_SYSTEMS_HPP

#include <string>
#include <vector>

#include "thinsec/linalg.hpp"

namespace thinsec
{
  RatMatrix matrix_N1();
  RatMatrix matrix_N2();

  //! x^4 - x^3 - 4x^2 + 5x - 1
  IntPoly lambda1_quartic();
  //! x^3 + 8x^2 + 12x - 1
  IntPoly lambda2_cubic();

  FieldPtr lambda1_field();
  FieldPtr lambda2_field();

  //! element of a field from rational coefficients, lowest degree first
  FieldElement poly_in(const FieldPtr& f, std::initializer_list<Rational> coeffs);

  struct NamedValue
  {
    std::string name;
    FieldElement value;
  };

  //! (a, b, c, u) as polynomials in lambda_1
  std::vector<NamedValue> s1_parameters();
  //! (a, b, c, d, e) as polynomials in lambda_2
  std::vector<NamedValue> s2_parameters();

  //! published decimal approximations of the normalized eigenvectors
  std::vector<Rational> s1_printed_eigenvector();
  std::vector<Rational> s2_printed_eigenvector();

  // published data for the Rips cycles
  RatMatrix printed_transition_4x4();
  RatMatrix printed_transition_5x4();
  RatMatrix printed_transition_5x5();
  RatMatrix printed_R1();
  RatMatrix printed_L1();
  RatMatrix printed_R2();
  RatMatrix printed_L2();
  //! widths (r1, r2, h, g, n) of the two-arc complex
  std::vector<NamedValue> printed_Y_widths();
  //! the same widths after one cycle
  std::vector<NamedValue> printed_Y_widths_after();
  //! (a', b', c', d', e') of the one-arc complex of the second example
  std::vector<NamedValue> printed_Z_widths();
  std::vector<NamedValue> printed_Z_widths_after();
  std::vector<Rational> printed_Y_lengths();
  std::vector<Rational> printed_Z_lengths();
}

#endif // THINSEC_SYSTEMS_HPP
