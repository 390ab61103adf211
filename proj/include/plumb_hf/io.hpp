#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plumb_hf/graph.hpp"
#include "plumb_hf/report.hpp"

namespace plumb {

/// {"name": ..., "vertices": [{"id": 0, "weight": -1}, ...], "edges": [[0, 1], ...]}
/// Vertices may appear in any order but ids must be exactly 0..n-1. Throws
/// ParseError naming the offending field, or the graph-construction errors.
PlumbingGraph parse_graph(const std::string& text);
PlumbingGraph parse_graph_file(const std::filesystem::path& path);

/// Canonical serialization (vertices by id, sorted edges, two-space indent).
std::string write_graph(const PlumbingGraph& g);

nlohmann::json to_json(const GoodSequence& seq);
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const SurveyRow& row);
SurveyRow row_from_json(const nlohmann::json& j);

enum class Format { Json, Csv };

void write_report(const AnalysisReport& report, Format format, std::ostream& out);
void write_rows(const std::vector<SurveyRow>& rows, Format format, std::ostream& out);

/// Parses the CSV produced by write_rows back into rows.
std::vector<SurveyRow> read_rows_csv(std::istream& in);

/// Append-only JSONL cache of survey rows keyed by family, graph hash and
/// search settings. Appends go through a mutex so one writer is active.
class RowCache {
 public:
  RowCache() = default;
  explicit RowCache(std::filesystem::path path);

  bool enabled() const { return !path_.empty(); }
  std::optional<SurveyRow> find(const std::string& key) const;
  void append(const std::string& key, const SurveyRow& row);
  std::size_t size() const { return rows_.size(); }

  static std::string key(const std::string& family, const std::string& graph_hash,
                         std::optional<std::uint64_t> early_stop);

 private:
  std::filesystem::path path_;
  std::map<std::string, SurveyRow> rows_;
  mutable std::mutex mutex_;
};

/// PLUMB_HF_CACHE if set, else $XDG_CACHE_HOME/plumb_hf/rows.jsonl or
/// ~/.cache/plumb_hf/rows.jsonl.
std::filesystem::path default_cache_path();

}  // namespace plumb
