/*! @file json_io.hpp
 * @brief JSON forms of the exact and floating point objects.
 *
 * Rationals are "p/q" strings, polynomials arrays of them (lowest degree
 * first), matrices arrays of rows.  A field element carries its field:
 * {"modulus": [...], "root_interval": [lo, hi], "poly": [...]}.  Inside a
 * system or a band complex the field is written once and the coordinates
 * are bare polynomials (a plain "p/q" string is accepted as a constant).
 */
#ifndef THINSEC_JSON_IO_HPP
#define THINSEC_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "thinsec/cycle.hpp"
#include "thinsec/iis.hpp"
#include "thinsec/pruning.hpp"
#include "thinsec/section.hpp"
#include "thinsec/verify.hpp"

namespace thinsec::json
{
  using Json = nlohmann::json;

  Json rational(const Rational& q);
  Rational rational_from(const Json& j);

  Json poly(const IntPoly& p);
  IntPoly poly_from(const Json& j);

  Json matrix(const RatMatrix& m);
  RatMatrix matrix_from(const Json& j);

  //! {"modulus", "root_interval"}; the rational field is modulus x around 0
  Json field(const FieldPtr& f);
  //! nullptr for a degree one modulus, so loaded rationals mix with any field
  FieldPtr field_from(const Json& j);

  Json element(const FieldElement& x);
  FieldElement element_from(const Json& j);

  //! coordinate inside a known field: polynomial array or "p/q"
  Json coordinate(const FieldElement& x);
  FieldElement coordinate_from(const Json& j, const FieldPtr& f);

  Json iis(const IIS& s);
  //! validated through make_iis
  IIS iis_from(const Json& j);

  Json moves(const std::vector<Move>& log);
  Json similarity(const SimilarityReport& r);

  Json band_complex(const BandComplex& X);
  BandComplex band_complex_from(const Json& j);

  Json rips_moves(const std::vector<RipsMove>& log);
  Json cycle(const CycleReport& r);

  Json components(const std::vector<SectionComponent>& comps);
  Json census(const Census& c);

  Json pruning(const PruningResult& r);

  Json rows(const std::vector<VerificationRow>& rows);

  Json read_file(const std::string& path);
  void write_file(const std::string& path, const Json& j);
}

#endif // THINSEC_JSON_IO_HPP
