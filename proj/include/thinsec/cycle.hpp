/*! @file cycle.hpp
 * @brief Self-similarity of the Rips machine: transition matrices of a cycle
 * and the one-end criterion.
 */
#ifndef THINSEC_CYCLE_HPP
#define THINSEC_CYCLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "thinsec/band_complex.hpp"
#include "thinsec/linalg.hpp"

namespace thinsec
{
  struct CycleReport
  {
    int prefix_steps = 0;
    int period_steps = 0;
    RipsPolicy policy = RipsPolicy::Sweep;

    //! new parameters = width_matrix * old parameters (exact)
    RatMatrix width_matrix;
    //! new lengths = length_matrix * old lengths, bands in canonical label order
    RatMatrix length_matrix;
    FieldElement contraction;

    //! complexes at the start and the end of the period
    BandComplex start, end;
    //! the start complex with every coordinate as a linear form in the parameters
    TrackedComplex tracked_start;
    Canonical<FieldElement> start_canonical, end_canonical;

    //! parameters: band widths (by label) first, then elementary segments as needed
    std::vector<std::string> parameter_names;
    std::vector<FieldElement> parameters;
    //! rows: elementary segments of the start in canonical order; columns: parameters
    RatMatrix segment_basis;

    //! widths and lengths of the start complex in canonical label order
    std::vector<FieldElement> widths;
    std::vector<Rational> lengths;
  };

  //! runs the machine from X, finds the first repetition of the canonical form
  //! with proportional segment lengths, and extracts the period's matrices
  std::optional<CycleReport> detect_rips_cycle(const BandComplex& X, int max_steps,
                                               RipsPolicy policy = RipsPolicy::Sweep);

  //! elementary segments of the start complex, in the row order of segment_basis
  std::vector<Segment<FieldElement>> cycle_segments(const CycleReport& r);

  //! indicator, on elementary segments of the start, of the segments inside [lo, hi]
  std::vector<Rational> interval_functional(const CycleReport& r, const FieldElement& lo, const FieldElement& hi);

  //! linear form (over the parameters) of a functional given on elementary
  //! segments of the start complex
  std::vector<Rational> parameter_row(const CycleReport& r, const std::vector<Rational>& on_segments);

  struct EndCriterion
  {
    bool holds = false;
    RatInterval contraction;
    RatInterval mu;
    RatInterval product;
  };

  //! certifies contraction * perron_root(length_matrix) < 1
  EndCriterion one_end_criterion(const FieldElement& contraction, const RatMatrix& length_matrix);
  inline EndCriterion one_end_criterion(const CycleReport& r)
  {
    return one_end_criterion(r.contraction, r.length_matrix);
  }
}

#endif // THINSEC_CYCLE_HPP
