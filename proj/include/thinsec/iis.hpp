/*! @file iis.hpp
 * @brief Interval identification systems, orbit graphs and the Rauzy induction.
 *
 * Intervals are closed.  A pair identifies its left interval with its right
 * interval by the orientation preserving translation; "left" and "right" are
 * only names for the two members, the left one need not lie to the left.
 */
#ifndef THINSEC_IIS_HPP
#define THINSEC_IIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "thinsec/numberfield.hpp"

namespace thinsec
{
  struct Interval
  {
    FieldElement lo, hi;
    FieldElement width() const { return hi - lo; }
    bool contains(const FieldElement& x) const { return lo <= x && x <= hi; }
  };

  //! which member of a pair
  enum class Member { Left, Right };
  inline Member other(Member m) { return m == Member::Left ? Member::Right : Member::Left; }

  struct IntervalPair
  {
    Interval left, right;
    const Interval& get(Member m) const { return m == Member::Left ? left : right; }
    Interval& get(Member m) { return m == Member::Left ? left : right; }
    FieldElement width() const { return left.width(); }
  };

  struct IIS
  {
    FieldPtr field;
    FieldElement A, B;
    std::vector<IntervalPair> pairs;
    int order() const { return static_cast<int>(pairs.size()); }
  };

  //! checks the invariants, throws InvalidSystem
  IIS make_iis(FieldPtr field, FieldElement A, FieldElement B, std::vector<IntervalPair> pairs);

  enum class SystemId { S1, S2 };
  //! S1 from lambda_1 and S2 from lambda_2, parameters as exact polynomials in the generator
  IIS build_system(SystemId id);

  struct Validation
  {
    bool balanced = false;
    bool symmetric = false;
  };
  Validation validate(const IIS& s);

  enum class Side { Left, Right };
  const char* side_name(Side s);

  struct TransmitResult
  {
    IIS system;
    bool admissible_left = false;
    bool admissible_right = false;
  };

  //! move member ei of pair i along pair j: its image under the translation
  //! taking member ej of pair j onto the other member of pair j
  TransmitResult transmit(const IIS& s, int i, Member ei, int j, Member ej);

  //! cut the singly covered end of the support on the given side
  IIS reduce(const IIS& s, Side side);

  struct Move
  {
    enum Kind { Transmit, Reduce } kind;
    Side side;
    int pair;
  };

  struct RauzyStep
  {
    IIS system;
    std::vector<Move> moves;
    //! false when the reduction precondition failed after the transmission
    bool reduced = false;
  };

  //! admissible transmission of the narrower interval at the support end,
  //! followed by a reduction on the same side when its precondition holds
  RauzyStep rauzy_step(const IIS& s, Side side);

  enum class Policy { Right, Left, Alternating, Exhaustive };

  struct SimilarityReport
  {
    int period = 0;
    FieldElement contraction;
    FieldElement translation;
    std::vector<Side> schedule;
    std::vector<Move> move_log;
  };

  //! result equals contraction * s + translation after normalization and pair sorting
  bool similar(const IIS& s, const IIS& t, FieldElement* contraction = nullptr, FieldElement* translation = nullptr);

  //! shortest side schedule (under the policy) of at most max_steps Rauzy steps
  //! whose result is an affine image of s; nullopt if none
  std::optional<SimilarityReport> detect_self_similarity(const IIS& s, int max_steps, Policy policy);

  //! replay a schedule; throws if a step is impossible
  IIS apply_schedule(const IIS& s, const std::vector<Side>& schedule, std::vector<Move>* log = nullptr);

  struct OrbitEdge
  {
    FieldElement x, y;
    int pair;
  };

  struct OrbitGraphSlice
  {
    FieldElement root;
    std::vector<FieldElement> vertices;
    std::vector<OrbitEdge> edges;
    std::vector<FieldElement> frontier;
  };

  //! images of x under every pair whose member contains x (self images dropped)
  std::vector<OrbitEdge> orbit_neighbors(const IIS& s, const FieldElement& x);

  OrbitGraphSlice orbit_bfs(const IIS& s, const FieldElement& x, int depth);
  int point_valence(const IIS& s, const FieldElement& x);
}

#endif // THINSEC_IIS_HPP
