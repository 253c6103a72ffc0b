/*! @file section.hpp
 * @brief Plane sections x2 = level of the periodic surface inside a square
 * window of the (x1, x3) plane.
 *
 * This is the floating point side of the surface module.  Lattice translates
 * of the fundamental piece are enumerated cell by cell; each contributes
 * horizontal segments (plates minus holes) and vertical segments (walls).
 * Segments sharing an endpoint are joined with a union-find.
 */
#ifndef THINSEC_SECTION_HPP
#define THINSEC_SECTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "thinsec/surface.hpp"

namespace thinsec
{
  struct Point2
  {
    double x1 = 0, x3 = 0;
  };

  struct Segment2
  {
    Point2 a, b;
  };

  enum class WindowClass { Spanning, Clipped, Closed };
  const char* window_class_name(WindowClass c);

  struct SectionComponent
  {
    std::vector<std::vector<Point2>> polylines;
    WindowClass window_class = WindowClass::Clipped;
    //! touches the window edges x1 = -R, x1 = R, x3 = -R, x3 = R
    std::array<bool, 4> touches{};
    double diameter = 0;
    std::size_t segments = 0;
  };

  //! 1e-9 unless THINSECTIONS_PRECISION holds a positive number
  double default_eps();

  //! raw clipped segments of the section (no joining)
  std::vector<Segment2> section_segments(const PLSurface& S, double level, double R, double eps);

  //! throws NearSaddle if the level is within eps of a saddle level modulo the
  //! pure x2 period, EmptyWindow if R is not positive
  std::vector<SectionComponent> trace_section(const PLSurface& S, double level, double R, double eps);

  struct Census
  {
    int spanning = 0;
    int clipped = 0;
    int closed = 0;
    //! components with diameter at least R (reported, not used for spanning)
    int long_components = 0;
  };

  Census component_census(const std::vector<SectionComponent>& components, double R);

  //! n levels uniform in [0, P) that keep eps away from every saddle level
  std::vector<double> random_levels(const PLSurface& S, int n, std::uint64_t seed, double eps);
}

#endif // THINSEC_SECTION_HPP
