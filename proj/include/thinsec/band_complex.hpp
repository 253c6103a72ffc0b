/*! @file band_complex.hpp
 * @brief Band complexes over a line and the Rips machine move M5.
 *
 * Support arcs are pairwise disjoint closed intervals of one real line, so a
 * base is located by its position alone.  A band is two bases of equal width
 * (bottom and top, identified by translation) and a vertical length.
 *
 * The algorithms are templates over the coordinate scalar and are explicitly
 * instantiated for FieldElement and Tracked.
 */
#ifndef THINSEC_BAND_COMPLEX_HPP
#define THINSEC_BAND_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "thinsec/iis.hpp"
#include "thinsec/tracked.hpp"

namespace thinsec
{
  template<class S>
  struct SupportArcT
  {
    int id = 0;
    S lo, hi;
  };

  template<class S>
  struct BandT
  {
    int id = 0;
    S bottom, top, width;
    Rational length = 1;
    //! length as a combination of reference lengths (empty when not tracked)
    std::vector<Rational> length_form;
    std::string name;

    const S& base(int side) const { return side == 0 ? bottom : top; }
  };

  template<class S>
  struct BandComplexT
  {
    std::vector<SupportArcT<S>> arcs;
    std::vector<BandT<S>> bands;
    int next_arc_id = 0;
    int next_band_id = 0;
  };

  using SupportArc = SupportArcT<FieldElement>;
  using Band = BandT<FieldElement>;
  using BandComplex = BandComplexT<FieldElement>;
  using TrackedComplex = BandComplexT<Tracked>;

  template<class S>
  struct BaseRef
  {
    int band;  //!< index into bands
    int side;  //!< 0 bottom, 1 top
    S lo, hi;
  };

  //! elementary piece of an arc between consecutive critical points
  template<class S>
  struct Segment
  {
    int arc;  //!< index into arcs
    S lo, hi;
    std::vector<std::pair<int, int>> cover;  //!< (band index, side) of bases containing it
  };

  template<class S>
  struct FreeSubarc
  {
    int arc;
    S lo, hi;
    int band = -1;  //!< covering band, -1 when dead
    int side = 0;
    bool dead = false;
  };

  //! one support arc, one band per pair (bottom = left member), length 1
  BandComplex complex_from_iis(const IIS& s);

  template<class S> std::vector<BaseRef<S>> bases(const BandComplexT<S>& X);
  //! index of the arc containing x, -1 if none
  template<class S> int arc_containing(const BandComplexT<S>& X, const S& x);
  template<class S> std::vector<Segment<S>> segments(const BandComplexT<S>& X);
  //! maximal subarcs met by at most one base, ordered by arc then position
  template<class S> std::vector<FreeSubarc<S>> find_free_subarcs(const BandComplexT<S>& X);
  template<class S> BandComplexT<S> collapse_free_subarc(const BandComplexT<S>& X, const FreeSubarc<S>& J);
  template<class S> BandComplexT<S> delete_dead(const BandComplexT<S>& X);
  template<class S> BandComplexT<S> merge_long_bands(const BandComplexT<S>& X);

  enum class RipsPolicy { Sweep, Single };
  const char* policy_name(RipsPolicy p);

  struct RipsMove
  {
    std::string kind;  //!< "collapse", "delete" or "merge"
    int arc = -1;      //!< arc id
    int band = -1;     //!< band id (the new band for merges)
    int side = 0;
    std::string note;
  };

  template<class S>
  struct RipsResult
  {
    BandComplexT<S> complex;
    std::vector<RipsMove> moves;
  };

  //! Sweep collapses every free subarc present at the start of the iteration,
  //! Single only the leftmost one; both then delete dead arcs and merge long bands
  template<class S> RipsResult<S> rips_step(const BandComplexT<S>& X, RipsPolicy policy = RipsPolicy::Sweep);

  //! combinatorial fingerprint, invariant under translation and scaling
  template<class S>
  struct Canonical
  {
    std::vector<long> signature;
    std::vector<S> segment_lengths;
    std::vector<int> arc_order;      //!< canonical position -> arc index
    std::vector<int> band_of_label;  //!< label -> band index
    std::vector<int> label_of_band;  //!< band index -> label
  };
  template<class S> Canonical<S> canonical_form(const BandComplexT<S>& X);

  //! total measure of the support
  template<class S> S support_measure(const BandComplexT<S>& X);

  //! drop the tracking data
  BandComplex untrack(const TrackedComplex& X);
}

#endif // THINSEC_BAND_COMPLEX_HPP
