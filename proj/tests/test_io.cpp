#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "plumb_hf/io.hpp"
#include "plumb_hf/survey.hpp"

using namespace plumb;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Overflow;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "plumb_hf_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("parse_graph minimal file") {
  const auto g = parse_graph(R"({"vertices":[{"id":0,"weight":-1}],"edges":[]})");
  CHECK(g == build_graph({-1}, {}));
}

TEST_CASE("parse_graph accepts vertices in any order") {
  const auto g = parse_graph(R"({"vertices":[{"id":1,"weight":-3},{"id":0,"weight":-1}],"edges":[[1,0]]})");
  CHECK(g == build_graph({-1, -3}, {{0, 1}}));
}

TEST_CASE("parse errors name the field") {
  try {
    parse_graph(R"({"vertices":[{"id":0,"weight":"two"}],"edges":[]})");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("vertices[0].weight") != std::string::npos);
  }
  CHECK(code_of([] { parse_graph("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph(R"({"edges":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph(R"({"vertices":[{"id":0,"weight":-1},{"id":0,"weight":-2}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph(R"({"vertices":[{"id":0,"weight":-1}],"edges":[[0]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph(R"({"vertices":[{"id":0,"weight":-1},{"id":1,"weight":-1}],"edges":[[0,1],[1,0]]})"); }) ==
        ErrorCode::DuplicateEdge);
}

TEST_CASE("canonical serialization round-trips") {
  auto e8 = fixture::e8();
  e8.set_name("E8");
  const auto text = write_graph(e8);
  const auto back = parse_graph(text);
  CHECK(back == e8);
  CHECK(write_graph(back) == text);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 10;
    std::vector<int> weights(static_cast<std::size_t>(n));
    for (auto& w : weights) w = std::uniform_int_distribution<int>(-9, 3)(rng);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      if (rng() % 4) edges.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    }
    const auto g = build_graph(weights, edges);
    CHECK(parse_graph(write_graph(g)) == g);
  }
}

TEST_CASE("witness JSON shape") {
  const auto report = analyze(build_graph({-1}, {}), AnalyzeOptions{std::nullopt, true});
  const auto j = to_json(report);
  REQUIRE(j.contains("sequences"));
  CHECK(j["sequences"][0]["states"] == nlohmann::json::parse("[[1],[-1]]"));
  CHECK(j["sequences"][0]["moved"] == nlohmann::json::parse("[0]"));
}

TEST_CASE("report JSON uses snake_case keys") {
  const auto j = to_json(analyze(fixture::e8()));
  for (const char* key : {"name", "graph_hash", "det", "negative_definite", "bad_vertices", "is_homology_sphere",
                          "initial_count", "good_initial_count", "partial", "good_initials", "elapsed_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["det"] == 1);
  CHECK(j["good_initial_count"] == 1);
}

TEST_CASE("CSV and JSON carry the same rows") {
  SurveyOptions options;
  options.bound = 12;
  auto rows = survey_s3(options).rows;
  options.max_a = 9;
  const auto b = survey_brieskorn(options).rows;
  rows.insert(rows.end(), b.begin(), b.end());
  SurveyRow odd;
  odd.family = "brieskorn";
  odd.params = {2, 4};
  odd.reason = "NotCoprime: a \"quoted\", reason";
  rows.push_back(odd);

  std::stringstream json_out, csv_out;
  write_rows(rows, Format::Json, json_out);
  write_rows(rows, Format::Csv, csv_out);

  std::vector<SurveyRow> from_json;
  for (const auto& j : nlohmann::json::parse(json_out.str())) from_json.push_back(row_from_json(j));
  const auto from_csv = read_rows_csv(csv_out);
  CHECK(from_json == rows);
  CHECK(from_csv == rows);
}

TEST_CASE("row cache persists and reuses rows") {
  const auto path = temp_file("cache.jsonl");
  SurveyOptions options;
  options.max_a = 11;
  {
    RowCache cache(path);
    options.cache = &cache;
    const auto first = survey_brieskorn(options);
    CHECK(first.cache_hits == 0);
    CHECK(cache.size() == first.rows.size());
  }
  RowCache reopened(path);
  options.cache = &reopened;
  options.reverify_sample = 100;
  const auto second = survey_brieskorn(options);
  CHECK(second.cache_hits == second.rows.size());
  CHECK(second.reverified == std::min<std::size_t>(100, second.rows.size()));
  CHECK(second.reverify_mismatches == 0);

  options.cache = nullptr;
  CHECK(survey_brieskorn(options).rows == second.rows);
}

TEST_CASE("reverification catches a corrupted cache entry") {
  const auto path = temp_file("corrupt.jsonl");
  SurveyOptions options;
  options.max_a = 7;
  {
    RowCache cache(path);
    options.cache = &cache;
    survey_brieskorn(options);
  }
  // Rewrite every cached count to a wrong value.
  std::ifstream in(path);
  std::stringstream fixed;
  for (std::string line; std::getline(in, line);) {
    auto j = nlohmann::json::parse(line);
    j["row"]["good_initial_count"] = 99;
    fixed << j.dump() << "\n";
  }
  in.close();
  std::ofstream(path) << fixed.str();

  RowCache cache(path);
  options.cache = &cache;
  options.reverify_sample = 100;
  const auto outcome = survey_brieskorn(options);
  CHECK(outcome.reverified == outcome.rows.size());
  CHECK(outcome.reverify_mismatches == outcome.rows.size());
  for (const auto& r : outcome.rows) CHECK(r.good_initial_count != 99u);
}

TEST_CASE("default cache path honours PLUMB_HF_CACHE") {
  setenv("PLUMB_HF_CACHE", "/tmp/somewhere/rows.jsonl", 1);
  CHECK(default_cache_path() == std::filesystem::path("/tmp/somewhere/rows.jsonl"));
  unsetenv("PLUMB_HF_CACHE");
  CHECK(default_cache_path().filename() == "rows.jsonl");
}
