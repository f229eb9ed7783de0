// cmperm: command-line front end.
//
// Exit codes: 0 when the checked property holds, 1 when it fails, 2 on any
// error (bad input, unsupported graph, cap exceeded, I/O).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmperm/cmperm.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<cmperm::Field> parse_fields(const std::string& spec) {
  std::vector<cmperm::Field> fields;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto f = cmperm::parse_field(token);
    if (!f) throw cmperm::io::ParseError("unknown field \"" + token + "\" (use f2, f3, f5, q)");
    if (std::find(fields.begin(), fields.end(), *f) == fields.end()) fields.push_back(*f);
  }
  if (fields.empty()) throw cmperm::io::ParseError("no fields given");
  return fields;
}

int run_build(const std::string& pi, const std::string& pi1, const std::string& pi2) {
  using namespace cmperm;
  if (!pi.empty()) {
    if (!pi1.empty() || !pi2.empty()) throw io::ParseError("use either --pi or --pi1/--pi2");
    std::cout << io::graph_to_json(perm_graph_id(io::parse_permutation(pi))) << '\n';
    return kHolds;
  }
  if (pi1.empty() || pi2.empty()) throw io::ParseError("need --pi, or both --pi1 and --pi2");
  const Realizer r(io::parse_permutation(pi1), io::parse_permutation(pi2));
  std::cout << io::graph_to_json(perm_graph(r)) << '\n';
  return kHolds;
}

int run_check(const std::string& kind, const std::string& input) {
  using namespace cmperm;
  const Graph g = io::graph_from_json(read_input(input));
  if (kind == "cm") {
    const auto v = is_cm_permutation(g);
    std::cout << io::cm_verdict_to_json(v) << '\n';
    return v.cm ? kHolds : kFails;
  }
  if (kind == "upo") {
    const auto v = is_upo(g);
    std::cout << io::upo_verdict_to_json(v) << '\n';
    return v.upo ? kHolds : kFails;
  }
  if (kind == "well-covered") {
    const auto v = is_well_covered(g);
    std::cout << io::well_covered_to_json(v) << '\n';
    return v.well_covered ? kHolds : kFails;
  }
  const auto v = recognize_permutation_graph(g);
  std::cout << io::recognition_to_json(v) << '\n';
  return v.outcome == RecognitionOutcome::permutation ? kHolds : kFails;
}

int run_oracle(const std::string& fields, const std::string& input) {
  using namespace cmperm;
  const Graph g = io::graph_from_json(read_input(input));
  const auto v = oracle_cm_graph(g, parse_fields(fields));
  std::cout << io::reisner_verdict_to_json(v) << '\n';
  return v.cm ? kHolds : kFails;
}

int run_survey(int n, const std::string& out_path) {
  using namespace cmperm;
  std::vector<SurveyRow> rows;
  try {
    rows = cmperm::run_survey(n);
  } catch (const SurveyMismatch& e) {
    std::cerr << "cmperm: " << e.what() << '\n';
    return kFails;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  write_survey_csv(out, rows);
  out.close();
  if (!out) throw std::runtime_error("write failed for " + out_path);

  const auto s = summarize(rows);
  std::cout << "n=" << n << " rows=" << s.rows << " well_covered=" << s.well_covered
            << " cm=" << s.cm << " connected_cm=" << s.connected_cm
            << " complement_upo=" << s.complement_upo << " mismatches=0\n";
  return kHolds;
}

int run_export(const std::string& format, const std::string& input) {
  using namespace cmperm;
  if (format != "dot") throw io::ParseError("unsupported export format \"" + format + "\"");
  const std::string text = read_input(input);
  if (io::detect_kind(text) == io::DocumentKind::graph) {
    std::cout << io::graph_to_dot(io::graph_from_json(text));
  } else {
    std::cout << io::poset_to_dot(io::poset_from_json(text));
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay and UPO checks for permutation graphs"};
  app.require_subcommand(1);

  std::string pi, pi1, pi2;
  auto* build = app.add_subcommand("build", "Build a permutation graph as JSON");
  build->add_option("--pi", pi, "Permutation paired with the identity, e.g. 5,4,6,1,3,2");
  build->add_option("--pi1", pi1, "First line order");
  build->add_option("--pi2", pi2, "Second line order");

  std::string check_kind, check_input;
  auto* check = app.add_subcommand("check", "Decide a property of a graph read as JSON");
  check->add_option("kind", check_kind, "cm | upo | well-covered | permutation")
      ->required()
      ->check(CLI::IsMember({"cm", "upo", "well-covered", "permutation"}));
  check->add_option("input", check_input, "Graph JSON file (default: standard input)");

  std::string oracle_kind, oracle_fields = "f2,q", oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Reisner-criterion Cohen-Macaulay check");
  oracle->add_option("kind", oracle_kind, "cm")->required()->check(CLI::IsMember({"cm"}));
  oracle->add_option("--fields", oracle_fields, "Comma-separated fields: f2,f3,f5,q");
  oracle->add_option("input", oracle_input, "Graph JSON file (default: standard input)");

  int survey_n = 0;
  std::string survey_out;
  auto* survey = app.add_subcommand("survey", "Check every G(Id, pi), pi in S_n, and write CSV");
  survey->add_option("--n", survey_n, "Permutation length (1..7)")->required()->check(CLI::Range(1, 7));
  survey->add_option("--out", survey_out, "Output CSV path")->required();

  std::string export_format = "dot", export_input;
  auto* exporter = app.add_subcommand("export", "Render a graph or poset");
  exporter->add_option("--format", export_format, "Output format (dot)");
  exporter->add_option("input", export_input, "Graph or poset JSON file (default: standard input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (*build) return run_build(pi, pi1, pi2);
    if (*check) return run_check(check_kind, check_input);
    if (*oracle) return run_oracle(oracle_fields, oracle_input);
    if (*survey) return run_survey(survey_n, survey_out);
    if (*exporter) return run_export(export_format, export_input);
  } catch (const std::exception& e) {
    std::cerr << "cmperm: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
