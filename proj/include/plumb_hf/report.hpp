#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumb_hf/lattice_game.hpp"
#include "plumb_hf/seifert.hpp"

namespace plumb {

struct AnalysisReport {
  std::string name;
  std::string graph_hash;
  std::int64_t det = 0;
  bool negative_definite = false;
  std::vector<VertexId> bad_vertices;
  std::optional<bool> is_homology_sphere;  // unset for disconnected graphs
  std::uint64_t initial_count = 0;
  std::uint64_t good_initial_count = 0;
  bool partial = false;
  std::vector<std::vector<int>> good_initials;
  std::int64_t elapsed_ms = 0;

  std::optional<SeifertInvariants> seifert;
  std::vector<GoodSequence> sequences;  // filled when requested
  /// Good initials whose first-legal-move path dead-ends although a witness
  /// exists. Always empty so far; kept as observed data.
  std::vector<std::vector<int>> order_dependent_initials;
  std::vector<std::string> warnings;
};

enum class Verdict { TrivialRank, Nontrivial, Skipped };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct SurveyRow {
  std::string family;  // brieskorn, all-minus-two, s3
  std::vector<std::int64_t> params;
  std::string graph_hash;
  std::optional<std::uint64_t> good_initial_count;
  bool partial = false;  // count is a lower bound
  Verdict verdict = Verdict::Skipped;
  std::string reason;
  std::optional<std::int64_t> central_count;
  std::vector<std::pair<std::string, bool>> checks;

  bool passed() const {
    for (const auto& [name, ok] : checks) {
      if (!ok) return false;
    }
    return verdict != Verdict::Skipped;
  }

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// Verdict implied by a (count, partial) pair.
Verdict classify(std::uint64_t count, bool partial);

}  // namespace plumb
