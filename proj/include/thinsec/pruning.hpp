/*! @file pruning.hpp
 * @brief Monte Carlo estimate of iterated leaf removal on orbit graphs.
 *
 * Round r deletes every vertex of valence one left after round r-1.  On a tree
 * a vertex x disappears in round 1 + (second largest branch height at x), so
 * the round of x is found by a depth first search of capped height; no graph
 * is ever stored.  This is the only floating point code next to the section
 * tracer: orbit points are doubles, and samples whose orbit passes within
 * `guard` of a critical point are discarded as undecidable.
 */
#ifndef THINSEC_PRUNING_HPP
#define THINSEC_PRUNING_HPP

#include <cstdint>
#include <vector>

#include "thinsec/iis.hpp"

namespace thinsec
{
  struct PruningOptions
  {
    int rounds = 1;
    int samples = 1;
    std::uint64_t seed = 20240611;
    //! branch visits allowed per sample before it counts as DepthExhausted
    long visit_budget = 20000000;
    double guard = 1e-11;
  };

  struct PruningResult
  {
    //! surviving[r-1]: estimated fraction of the support alive after r rounds
    std::vector<double> surviving;
    int decided = 0;
    //! samples abandoned because the visit budget ran out (DepthExhausted)
    int exhausted = 0;
    //! samples abandoned because the orbit came too close to a critical point
    int near_critical = 0;
    //! removal round per decided sample; rounds + 1 means still alive
    std::vector<int> removal_round;
  };

  PruningResult pruning_decay(const IIS& s, const PruningOptions& opt);

  //! removal round of one point, capped at cap + 1; -1 budget exhausted, -2 near a critical point
  int removal_round(const IIS& s, double x, int cap, long visit_budget, double guard = 1e-11);
}

#endif // THINSEC_PRUNING_HPP
