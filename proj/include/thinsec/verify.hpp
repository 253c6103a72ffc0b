/*! @file verify.hpp
 * @brief Regression table of every published number against the exact
 * computation, plus the cycle matching used by the acceptance runner.
 */
#ifndef THINSEC_VERIFY_HPP
#define THINSEC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "thinsec/cycle.hpp"
#include "thinsec/iis.hpp"
#include "thinsec/linalg.hpp"

namespace thinsec
{
  enum class RowStatus { ExactPass, ApproxPass, Fail };
  const char* row_status_name(RowStatus s);

  struct VerificationRow
  {
    std::string id;
    std::string claim;
    std::string printed;   //!< the published value, as text
    std::string computed;  //!< what we get, as text (certified intervals where relevant)
    std::string tolerance;
    RowStatus status = RowStatus::Fail;
  };

  struct VerifyOptions
  {
    //! transition matrices; replaced by a corrupted copy in the negative control
    std::optional<RatMatrix> N1, N2;
  };

  //! scope is "all", "s1", "s2" or "surface"; rows come out ordered by id
  std::vector<VerificationRow> run_verification(const std::string& scope, const VerifyOptions& opt = {});

  bool all_passed(const std::vector<VerificationRow>& rows);
  std::string format_rows(const std::vector<VerificationRow>& rows);

  //! how a detected cycle lines up with the published one
  struct CycleMatch
  {
    CycleReport report;
    //! published band/parameter names and, for bands, our label
    std::vector<std::string> names;
    std::vector<int> label;  //!< label of each published band, -1 if no band has its width
    bool widths_start = false;  //!< every published start width reproduced exactly
    bool widths_end = false;    //!< every published end width reproduced exactly
    std::vector<FieldElement> start_values, end_values;
    //! rows: published parameters as linear forms in our parameters
    RatMatrix P;
    //! P R - R_printed P
    RatMatrix D;
    //! the structural relation the defect must be a multiple of
    std::vector<Rational> relation;
    std::string relation_name;
    bool relation_vanishes = false;
    bool conjugate = false;       //!< every row of D is a multiple of the relation
    bool lengths_equal = false;   //!< start lengths equal under the width labeling
    bool lengths_multiset = false;
    bool L_equal = false;         //!< length matrix equal under the width labeling
    RatMatrix L_relabelled;
  };

  CycleMatch match_cycle(SystemId id);
}

#endif // THINSEC_VERIFY_HPP
