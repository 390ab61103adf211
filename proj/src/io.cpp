#include "plumb_hf/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace plumb {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) parse_fail(field, "expected integer, got " + j.dump());
  return j.get<std::int64_t>();
}

int require_small_int(const json& j, const std::string& field) {
  const auto v = require_int(j, field);
  if (v < -(1 << 24) || v > (1 << 24)) parse_fail(field, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::string join(const std::vector<std::int64_t>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<int> to_vector(const Association& n) { return {n.data(), n.data() + n.size()}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

const std::vector<std::string> kFixedColumns{"family",  "params", "graph_hash",   "good_initial_count", "partial",
                                             "verdict", "reason", "central_count"};

}  // namespace

PlumbingGraph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) parse_fail("<root>", "expected an object");

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail("name", "expected string");
    name = j["name"].get<std::string>();
  }

  if (!j.contains("vertices") || !j["vertices"].is_array()) parse_fail("vertices", "missing or not an array");
  const auto& vs = j["vertices"];
  std::vector<std::optional<Weight>> slots(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_object()) parse_fail(field, "expected an object");
    if (!vs[i].contains("id")) parse_fail(field + ".id", "missing");
    if (!vs[i].contains("weight")) parse_fail(field + ".weight", "missing");
    const auto id = require_int(vs[i]["id"], field + ".id");
    const int weight = require_small_int(vs[i]["weight"], field + ".weight");
    if (id < 0 || id >= static_cast<std::int64_t>(vs.size())) {
      parse_fail(field + ".id", "id " + std::to_string(id) + " outside 0.." + std::to_string(vs.size() - 1));
    }
    auto& slot = slots[static_cast<std::size_t>(id)];
    if (slot) parse_fail(field + ".id", "duplicate id " + std::to_string(id));
    slot = weight;
  }
  std::vector<Weight> weights;
  for (const auto& s : slots) weights.push_back(*s);

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) parse_fail("edges", "expected an array");
    const auto& es = j["edges"];
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string field = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) parse_fail(field, "expected a pair of ids");
      edges.emplace_back(require_small_int(es[i][0], field + "[0]"), require_small_int(es[i][1], field + "[1]"));
    }
  }
  return PlumbingGraph::build(std::move(weights), std::move(edges), std::move(name));
}

PlumbingGraph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto g = parse_graph(buf.str());
  if (g.name().empty()) g.set_name(path.stem().string());
  return g;
}

std::string write_graph(const PlumbingGraph& g) {
  json j;
  j["name"] = g.name();
  j["vertices"] = json::array();
  for (VertexId v = 0; v < g.size(); ++v) j["vertices"].push_back({{"id", v}, {"weight", g.weight(v)}});
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump(2) + "\n";
}

json to_json(const GoodSequence& seq) {
  json states = json::array();
  for (const auto& s : seq.states) states.push_back(to_vector(s));
  return {{"states", states}, {"moved", seq.moved}};
}

json to_json(const AnalysisReport& r) {
  json j;
  j["name"] = r.name;
  j["graph_hash"] = r.graph_hash;
  j["det"] = r.det;
  j["negative_definite"] = r.negative_definite;
  j["bad_vertices"] = r.bad_vertices;
  j["is_homology_sphere"] = r.is_homology_sphere ? json(*r.is_homology_sphere) : json(nullptr);
  j["initial_count"] = r.initial_count;
  j["good_initial_count"] = r.good_initial_count;
  j["partial"] = r.partial;
  j["good_initials"] = r.good_initials;
  j["elapsed_ms"] = r.elapsed_ms;
  j["assumption"] = "rank of Ker(U) over Z/2 reported as the number of good initial associations";
  if (r.seifert) {
    json rays = json::array();
    for (const auto& ray : r.seifert->rays) rays.push_back({{"a", ray.a}, {"b", ray.b}});
    j["seifert"] = {{"m", r.seifert->m}, {"rays", rays}};
  }
  if (!r.sequences.empty()) {
    j["sequences"] = json::array();
    for (const auto& s : r.sequences) j["sequences"].push_back(to_json(s));
  }
  j["order_dependent_initials"] = r.order_dependent_initials;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const SurveyRow& row) {
  json j;
  j["family"] = row.family;
  j["params"] = row.params;
  j["graph_hash"] = row.graph_hash;
  j["good_initial_count"] = row.good_initial_count ? json(*row.good_initial_count) : json(nullptr);
  j["partial"] = row.partial;
  j["verdict"] = to_string(row.verdict);
  j["reason"] = row.reason;
  j["central_count"] = row.central_count ? json(*row.central_count) : json(nullptr);
  // Object keys would reorder; keep the declared order as an array of pairs.
  j["checks"] = json::array();
  for (const auto& [name, ok] : row.checks) j["checks"].push_back({{"name", name}, {"pass", ok}});
  return j;
}

SurveyRow row_from_json(const json& j) {
  SurveyRow row;
  row.family = j.at("family").get<std::string>();
  row.params = j.at("params").get<std::vector<std::int64_t>>();
  row.graph_hash = j.at("graph_hash").get<std::string>();
  if (!j.at("good_initial_count").is_null()) row.good_initial_count = j["good_initial_count"].get<std::uint64_t>();
  row.partial = j.at("partial").get<bool>();
  row.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  row.reason = j.at("reason").get<std::string>();
  if (!j.at("central_count").is_null()) row.central_count = j["central_count"].get<std::int64_t>();
  for (const auto& c : j.at("checks")) row.checks.emplace_back(c.at("name").get<std::string>(), c.at("pass").get<bool>());
  return row;
}

void write_report(const AnalysisReport& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(report).dump(2) << "\n";
    return;
  }
  out << "name,graph_hash,det,negative_definite,bad_vertices,is_homology_sphere,initial_count,"
         "good_initial_count,partial,elapsed_ms\n";
  std::vector<std::int64_t> bad(report.bad_vertices.begin(), report.bad_vertices.end());
  out << csv_field(report.name) << ',' << report.graph_hash << ',' << report.det << ','
      << (report.negative_definite ? "true" : "false") << ',' << join(bad, ';') << ','
      << (report.is_homology_sphere ? (*report.is_homology_sphere ? "true" : "false") : "") << ','
      << report.initial_count << ',' << report.good_initial_count << ',' << (report.partial ? "true" : "false") << ','
      << report.elapsed_ms << "\n";
}

void write_rows(const std::vector<SurveyRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
    return;
  }
  std::vector<std::string> check_columns;
  for (const auto& r : rows) {
    for (const auto& [name, ok] : r.checks) {
      if (std::find(check_columns.begin(), check_columns.end(), name) == check_columns.end()) {
        check_columns.push_back(name);
      }
    }
  }
  for (std::size_t i = 0; i < kFixedColumns.size(); ++i) out << (i ? "," : "") << kFixedColumns[i];
  for (const auto& c : check_columns) out << ',' << c;
  out << "\n";
  for (const auto& r : rows) {
    out << csv_field(r.family) << ',' << join(r.params, ';') << ',' << r.graph_hash << ','
        << (r.good_initial_count ? std::to_string(*r.good_initial_count) : "") << ','
        << (r.partial ? "true" : "false") << ',' << to_string(r.verdict) << ',' << csv_field(r.reason) << ','
        << (r.central_count ? std::to_string(*r.central_count) : "");
    for (const auto& c : check_columns) {
      out << ',';
      for (const auto& [name, ok] : r.checks) {
        if (name == c) out << (ok ? "pass" : "fail");
      }
    }
    out << "\n";
  }
}

std::vector<SurveyRow> read_rows_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  const auto header = split_csv_line(line);
  if (header.size() < kFixedColumns.size() || !std::equal(kFixedColumns.begin(), kFixedColumns.end(), header.begin())) {
    throw Error(ErrorCode::ParseError, "unexpected CSV header: " + line);
  }
  std::vector<SurveyRow> rows;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                             std::to_string(header.size()) + " fields");
    }
    SurveyRow r;
    r.family = f[0];
    std::stringstream params(f[1]);
    for (std::string p; std::getline(params, p, ';');) r.params.push_back(std::stoll(p));
    r.graph_hash = f[2];
    if (!f[3].empty()) r.good_initial_count = std::stoull(f[3]);
    r.partial = f[4] == "true";
    r.verdict = verdict_from_string(f[5]);
    r.reason = f[6];
    if (!f[7].empty()) r.central_count = std::stoll(f[7]);
    for (std::size_t c = kFixedColumns.size(); c < header.size(); ++c) {
      if (!f[c].empty()) r.checks.emplace_back(header[c], f[c] == "pass");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

RowCache::RowCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = json::parse(line);
      rows_.insert_or_assign(j.at("key").get<std::string>(), row_from_json(j.at("row")));
    } catch (const std::exception&) {
      // A torn trailing line from an interrupted run; later appends supersede it.
    }
  }
}

std::optional<SurveyRow> RowCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  return std::nullopt;
}

void RowCache::append(const std::string& key, const SurveyRow& row) {
  std::lock_guard lock(mutex_);
  rows_.insert_or_assign(key, row);
  if (path_.empty()) return;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  out << json{{"key", key}, {"row", to_json(row)}}.dump() << "\n";
}

std::string RowCache::key(const std::string& family, const std::string& graph_hash,
                          std::optional<std::uint64_t> early_stop) {
  return family + ":" + graph_hash + ":" + (early_stop ? std::to_string(*early_stop) : "full");
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("PLUMB_HF_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "plumb_hf" / "rows.jsonl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "plumb_hf" / "rows.jsonl";
  }
  return "plumb_hf_rows.jsonl";
}

}  // namespace plumb
