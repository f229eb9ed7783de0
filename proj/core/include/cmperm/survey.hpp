#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cmperm/permutation.hpp"

namespace cmperm {

/// One permutation graph G(Id, pi) checked every way the library can.
struct SurveyRow {
  int n = 0;
  Permutation pi;
  bool well_covered = false;
  std::size_t r = 0;
  bool cm_thm = false;        ///< clique-partition characterization
  bool cm_oracle_f2 = false;  ///< Reisner criterion over F2
  bool cm_oracle_q = false;   ///< Reisner criterion over Q
  bool connected = false;
  bool complement_upo = false;
};

/// The characterization disagreed with the homology oracle.
class SurveyMismatch : public std::runtime_error {
 public:
  explicit SurveyMismatch(const SurveyRow& row);
  const SurveyRow& row() const { return row_; }

 private:
  SurveyRow row_;
};

SurveyRow survey_row(const Permutation& pi);

/// All of S_n in lexicographic order, 1 <= n <= 7. Throws SurveyMismatch
/// on the first row where cm_thm differs from either oracle field.
std::vector<SurveyRow> run_survey(int n);

inline constexpr const char* kSurveyCsvHeader =
    "n,pi,well_covered,r,cm_thm,cm_oracle_f2,cm_oracle_q,connected,complement_upo";

/// Header line plus one line per row; pi is written space-separated.
void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows);

struct SurveySummary {
  std::size_t rows = 0;
  std::size_t well_covered = 0;
  std::size_t cm = 0;
  std::size_t connected_cm = 0;
  std::size_t complement_upo = 0;
};

SurveySummary summarize(const std::vector<SurveyRow>& rows);

}  // namespace cmperm
