#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plumb_hf/io.hpp"
#include "plumb_hf/report.hpp"

namespace plumb {

struct AnalyzeOptions {
  std::optional<std::uint64_t> early_stop;
  bool emit_sequences = false;
};

/// Determinant, definiteness, bad vertices and the good-initial count.
/// Throws TooManyBadVertices.
AnalysisReport analyze(const PlumbingGraph& g, const AnalyzeOptions& options = {});

/// Builds the Brieskorn star, blows it down and analyzes it.
AnalysisReport analyze_brieskorn(const std::vector<std::int64_t>& multiplicities, const AnalyzeOptions& options = {});

struct SurveyOptions {
  std::optional<std::uint64_t> early_stop = 2;
  int rays = 3;               // brieskorn: exact ray count; all-minus-two: n = 1..rays
  std::int64_t max_a = 30;
  std::int64_t max_p = 12;
  std::int64_t bound = 20;    // s3: a1 + a2 <= bound
  unsigned jobs = 1;
  RowCache* cache = nullptr;
  std::size_t reverify_sample = 0;
  std::uint64_t seed = 0;
};

struct SurveyOutcome {
  std::vector<SurveyRow> rows;
  std::size_t cache_hits = 0;
  std::size_t reverified = 0;
  std::size_t reverify_mismatches = 0;

  bool any_skipped() const;
};

/// Increasing pairwise-coprime tuples 2 <= a_1 < ... < a_rays <= max_a.
std::vector<std::vector<std::int64_t>> brieskorn_tuples(int rays, std::int64_t max_a);

/// 2 - sum p_i/(p_i+1) == 1/prod(p_i+1), exactly.
bool all_minus_two_condition(const std::vector<std::int64_t>& p);

/// Star with center -2 and -2 chains of lengths p_i.
PlumbingGraph all_minus_two_star(const std::vector<std::int64_t>& p);

SurveyRow brieskorn_row(const std::vector<std::int64_t>& multiplicities, std::optional<std::uint64_t> early_stop);

/// Full property check of one sphere quadruple's two-ray star: unique good
/// initial equal to 2+m, both Lemma-1 inequalities, central count
/// a1 + a2 - 1, pairing jumps, and replay of the reversed witness.
SurveyRow s3_row(const SphereQuadruple& q);

SurveyOutcome survey_brieskorn(const SurveyOptions& options);
SurveyOutcome survey_all_minus_two(const SurveyOptions& options);
SurveyOutcome survey_s3(const SurveyOptions& options);

}  // namespace plumb
