#include "cmperm/survey.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "cmperm/cm.hpp"
#include "cmperm/reisner.hpp"
#include "cmperm/upo.hpp"

namespace cmperm {

namespace {

std::string join(const Permutation& pi, char sep) {
  std::string out;
  for (std::size_t i = 0; i < pi.seq().size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(pi.seq()[i]);
  }
  return out;
}

}  // namespace

SurveyMismatch::SurveyMismatch(const SurveyRow& row)
    : std::runtime_error("survey mismatch at pi = [" + join(row.pi, ',') +
                         "]: cm_thm=" + (row.cm_thm ? "true" : "false") +
                         " cm_oracle_f2=" + (row.cm_oracle_f2 ? "true" : "false") +
                         " cm_oracle_q=" + (row.cm_oracle_q ? "true" : "false")),
      row_(row) {}

SurveyRow survey_row(const Permutation& pi) {
  const Graph g = perm_graph_id(pi);
  SurveyRow row;
  row.n = pi.size();
  row.pi = pi;
  const auto wc = is_well_covered(g);
  row.well_covered = wc.well_covered;
  row.r = wc.r;
  row.cm_thm = is_cm_permutation(g).cm;
  const auto complex = independence_complex(g);
  row.cm_oracle_f2 = reisner_cm(complex, {Field::F2}).cm;
  row.cm_oracle_q = reisner_cm(complex, {Field::Q}).cm;
  row.connected = is_connected(g);
  row.complement_upo = is_upo(complement(g)).upo;
  return row;
}

std::vector<SurveyRow> run_survey(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("survey: n must be in 1..7");
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  std::vector<SurveyRow> rows;
  do {
    auto row = survey_row(Permutation(seq));
    if (row.cm_thm != row.cm_oracle_f2 || row.cm_thm != row.cm_oracle_q) throw SurveyMismatch(row);
    rows.push_back(std::move(row));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return rows;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
  const auto b = [](bool v) { return v ? "true" : "false"; };
  out << kSurveyCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.n << ',' << join(row.pi, ' ') << ',' << b(row.well_covered) << ',' << row.r << ','
        << b(row.cm_thm) << ',' << b(row.cm_oracle_f2) << ',' << b(row.cm_oracle_q) << ','
        << b(row.connected) << ',' << b(row.complement_upo) << '\n';
  }
}

SurveySummary summarize(const std::vector<SurveyRow>& rows) {
  SurveySummary s;
  s.rows = rows.size();
  for (const auto& row : rows) {
    s.well_covered += row.well_covered;
    s.cm += row.cm_thm;
    s.connected_cm += row.cm_thm && row.connected;
    s.complement_upo += row.complement_upo;
  }
  return s;
}

}  // namespace cmperm
