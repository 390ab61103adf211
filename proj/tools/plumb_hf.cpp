// plumb_hf: plumbing-graph analyses and surveys from the command line.
//
// Exit codes: 0 all rows computed, 2 some row skipped (or a property check
// failed, or an analysis was refused), 1 invocation or input error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "plumb_hf/io.hpp"
#include "plumb_hf/survey.hpp"

namespace {

using namespace plumb;

struct Common {
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> early_stop;
  bool emit_sequences = false;
};

Format parse_format(const std::string& s) { return s == "csv" ? Format::Csv : Format::Json; }

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  fn(out);
}

int report_exit(const AnalysisReport& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (!r.order_dependent_initials.empty()) {
    std::cerr << "note: " << r.order_dependent_initials.size()
              << " good initial(s) dead-end on the first-legal-move path\n";
  }
  return 0;
}

int survey_exit(const SurveyOutcome& outcome) {
  if (outcome.cache_hits) std::cerr << "cache: " << outcome.cache_hits << " row(s) reused\n";
  if (outcome.reverified) {
    std::cerr << "cache: reverified " << outcome.reverified << " row(s), " << outcome.reverify_mismatches
              << " mismatch(es)\n";
  }
  bool failed = outcome.any_skipped() || outcome.reverify_mismatches > 0;
  for (const auto& r : outcome.rows) failed = failed || !r.passed();
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative-definite plumbing trees and the good-initial-association count"};
  app.require_subcommand(1);

  Common common;
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", common.out, "Write output to this file instead of stdout");
  };
  auto add_game_flags = [&](CLI::App* sub) {
    sub->add_option("--early-stop", common.early_stop, "Stop after K good initial associations")
        ->check(CLI::PositiveNumber);
  };

  std::string graph_file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a graph JSON file");
  analyze_cmd->add_option("graph", graph_file, "Graph JSON file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_flag("--emit-sequences", common.emit_sequences, "Include witness sequences");
  add_game_flags(analyze_cmd);
  add_output_flags(analyze_cmd);

  std::vector<std::int64_t> multiplicities;
  auto* brieskorn_cmd = app.add_subcommand("brieskorn", "Build and analyze Sigma(a1,...,ak)");
  brieskorn_cmd->add_option("a", multiplicities, "Pairwise coprime multiplicities >= 2")->required();
  brieskorn_cmd->add_flag("--emit-sequences", common.emit_sequences, "Include witness sequences");
  add_game_flags(brieskorn_cmd);
  add_output_flags(brieskorn_cmd);

  SurveyOptions survey;
  std::string mode = "brieskorn";
  std::string cache_path;
  bool no_cache = false;
  bool full = false;
  std::optional<int> rays;
  auto add_cache_flags = [&](CLI::App* sub) {
    sub->add_option("--cache", cache_path, "Row cache (JSONL); defaults to $PLUMB_HF_CACHE or ~/.cache");
    sub->add_flag("--no-cache", no_cache, "Do not read or write the row cache");
    sub->add_option("--reverify-sample", survey.reverify_sample, "Recompute N random cached rows");
    sub->add_option("--seed", survey.seed, "Seed for reverification sampling");
    sub->add_option("--jobs", survey.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* survey_cmd = app.add_subcommand("survey", "Enumerate a family and classify each member");
  survey_cmd->add_option("--mode", mode, "Family")->check(CLI::IsMember({"brieskorn", "all-minus-two"}));
  survey_cmd->add_option("--rays", rays, "brieskorn: ray count (3); all-minus-two: max n (6)")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--max-a", survey.max_a, "Largest multiplicity");
  survey_cmd->add_option("--max-p", survey.max_p, "Largest chain length");
  survey_cmd->add_option("--early-stop", survey.early_stop, "Good initials needed per row")->check(CLI::PositiveNumber);
  survey_cmd->add_flag("--full", full, "Full counts instead of early stop");
  add_output_flags(survey_cmd);
  add_cache_flags(survey_cmd);

  auto* s3_cmd = app.add_subcommand("s3", "Check the two-ray S^3 property suite");
  s3_cmd->add_option("--bound", survey.bound, "a1 + a2 <= bound")->check(CLI::Range(5, 1000));
  add_output_flags(s3_cmd);
  add_cache_flags(s3_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    const Format format = parse_format(common.format);
    const AnalyzeOptions analyze_options{common.early_stop, common.emit_sequences};

    if (analyze_cmd->parsed() || brieskorn_cmd->parsed()) {
      AnalysisReport report;
      try {
        report = analyze_cmd->parsed() ? analyze(parse_graph_file(graph_file), analyze_options)
                                       : analyze_brieskorn(multiplicities, analyze_options);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooManyBadVertices) throw;
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      with_output(common.out, [&](std::ostream& out) { write_report(report, format, out); });
      return report_exit(report);
    }

    std::optional<RowCache> cache;
    if (!no_cache) {
      cache.emplace(cache_path.empty() ? default_cache_path() : std::filesystem::path(cache_path));
      survey.cache = &*cache;
    }
    if (full) survey.early_stop.reset();

    SurveyOutcome outcome;
    if (survey_cmd->parsed() && mode == "brieskorn") {
      survey.rays = rays.value_or(3);
      outcome = survey_brieskorn(survey);
    } else if (survey_cmd->parsed()) {
      survey.rays = rays.value_or(6);
      outcome = survey_all_minus_two(survey);
    } else {
      outcome = survey_s3(survey);
    }
    with_output(common.out, [&](std::ostream& out) { write_rows(outcome.rows, format, out); });
    return survey_exit(outcome);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
