/*! @file svg.hpp
 * @brief Schematic pictures: interval systems, band complexes and sections.
 */
#ifndef THINSEC_SVG_HPP
#define THINSEC_SVG_HPP

#include <string>
#include <vector>

#include "thinsec/band_complex.hpp"
#include "thinsec/iis.hpp"
#include "thinsec/section.hpp"

namespace thinsec::svg
{
  //! support on top, one row per pair with both members drawn and joined
  std::string iis(const IIS& s, const std::string& title = "");

  //! the support drawn twice, bottoms on the lower copy and tops on the
  //! upper one; each band is a shaded quadrilateral between its two bases
  std::string band_complex(const BandComplex& X, const std::string& title = "");

  //! bold section polylines on a light unit grid over [-R, R]^2
  std::string section(const std::vector<SectionComponent>& comps, double R, const std::string& title = "");
}

#endif // THINSEC_SVG_HPP
