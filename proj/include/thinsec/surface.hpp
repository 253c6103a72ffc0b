/*! @file surface.hpp
 * @brief The triply periodic piecewise linear surface built from a thin
 * system, and its exact combinatorial checks.
 *
 * Coordinates are (x1, x2, x3).  A fundamental piece lives over the rectangle
 * T1 = [0,1] x [0,P]: horizontal plates at fixed x3 with rectangular holes,
 * and vertical walls over the boundaries of the holes.  The lattice has
 * e1, e2 horizontal with unit x1 component on e2, and e3 = (0, sigma, 1).
 */
#ifndef THINSEC_SURFACE_HPP
#define THINSEC_SURFACE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "thinsec/numberfield.hpp"
#include "thinsec/systems.hpp"

namespace thinsec
{
  struct Rect
  {
    FieldElement x_lo, x_hi;  //!< x1 range
    FieldElement y_lo, y_hi;  //!< x2 range
  };

  struct HorizontalPiece
  {
    Rational z;
    std::vector<int> holes;  //!< indices into PLSurface::rects; the plate is T1 minus these
  };

  struct WallPiece
  {
    int rect = 0;
    Rational z_lo, z_hi;
  };

  using Vec3 = std::array<FieldElement, 3>;

  struct PLSurface
  {
    int example = 1;
    std::vector<NamedValue> parameters;
    std::vector<Rect> rects;  //!< rects[0] is T1, the others are holes
    std::vector<std::string> rect_names;
    std::vector<HorizontalPiece> horizontals;
    std::vector<WallPiece> walls;
    std::array<Vec3, 3> lattice;
    //! x2 extent of T1 (e2 - e1)
    FieldElement period;
  };

  //! example 1 uses (a, b, c, u) of the first system; example 2 is the same
  //! template fed with (a, b, c, d, e) of the second
  PLSurface build_surface(int example);

  //! T2..T4 inside the closed unit square
  bool holes_in_unit_square(const PLSurface& S);

  struct SaddleLevels
  {
    std::vector<FieldElement> values;
    std::vector<std::string> labels;
    //! saddle id per value: edges on one flat face of a tube share it
    std::vector<int> saddle;
    int count = 0;  //!< number of distinct saddles
    bool distinct = true;
    //! index pairs whose levels differ by a lattice x2-translation
    std::vector<std::pair<int, int>> collisions;
  };

  //! x2 values of the horizontal edges of the holes, compared pairwise modulo
  //! the pure x2 translations of the lattice.  The group spanned by all x2
  //! components would be dense and useless here.
  SaddleLevels saddle_levels(const PLSurface& S);

  //! positive generator of the lattice vectors of the form (0, t, 0)
  FieldElement pure_x2_translation(const PLSurface& S);

  //! exact membership of x in Z g_1 + ... + Z g_k inside the field
  bool in_lattice(const std::vector<FieldElement>& generators, const FieldElement& x);

  //! the centre given for example 1, (3/10, (2a+c+b-u)/2, 1/4)
  Vec3 printed_symmetry_centre(const PLSurface& S);

  //! true iff x -> 2p - x maps the piece set onto itself modulo the lattice
  bool check_central_symmetry(const PLSurface& S, const Vec3& p);
  inline bool check_central_symmetry(const PLSurface& S)
  {
    return check_central_symmetry(S, printed_symmetry_centre(S));
  }

  struct EulerReport
  {
    bool closed = false;  //!< every wall end and every hole edge is attached
    long vertices = 0, edges = 0, faces = 0;
    long euler = 0;
    int genus = -1;  //!< (2 - euler) / 2 when closed
    std::string note;
  };

  //! Euler characteristic of the quotient surface from an explicit cell structure
  EulerReport euler_characteristic(const PLSurface& S);

  //! floor(y / P) for P > 0, exact
  long floor_div(const FieldElement& y, const FieldElement& P);
}

#endif // THINSEC_SURFACE_HPP
