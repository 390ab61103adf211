#include "plumb_hf/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

namespace plumb {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::TrivialRank: return "trivial-rank";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Skipped: return "skipped";
  }
  return "skipped";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "trivial-rank") return Verdict::TrivialRank;
  if (s == "nontrivial") return Verdict::Nontrivial;
  if (s == "skipped") return Verdict::Skipped;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(s) + "'");
}

Verdict classify(std::uint64_t count, bool partial) {
  if (count >= 2) return Verdict::Nontrivial;
  if (count == 1 && !partial) return Verdict::TrivialRank;
  return Verdict::Skipped;
}

bool SurveyOutcome::any_skipped() const {
  return std::any_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.verdict == Verdict::Skipped; });
}

namespace {

std::vector<int> to_vector(const Association& n) { return {n.data(), n.data() + n.size()}; }

// Evaluates fn(i) for i in [0, n) on `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    });
  }
  workers.clear();
  return out;
}

// Runs rows through the cache: hits are reused, misses computed in parallel
// and appended by this thread only.
SurveyOutcome run_cached(const std::vector<std::string>& keys, const SurveyOptions& options,
                         const std::function<SurveyRow(std::size_t)>& compute) {
  SurveyOutcome outcome;
  const std::size_t n = keys.size();
  std::vector<std::optional<SurveyRow>> cached(n);
  std::vector<std::size_t> misses;
  for (std::size_t i = 0; i < n; ++i) {
    if (options.cache && !keys[i].empty()) cached[i] = options.cache->find(keys[i]);
    if (!cached[i]) misses.push_back(i);
  }
  outcome.cache_hits = n - misses.size();

  const auto fresh = parallel_map<SurveyRow>(misses.size(), options.jobs,
                                             [&](std::size_t k) { return compute(misses[k]); });
  outcome.rows.resize(n);
  for (std::size_t k = 0; k < misses.size(); ++k) {
    const std::size_t i = misses[k];
    outcome.rows[i] = fresh[k];
    if (options.cache && !keys[i].empty() && fresh[k].verdict != Verdict::Skipped) {
      options.cache->append(keys[i], fresh[k]);
    }
  }

  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < n; ++i) {
    if (cached[i]) {
      outcome.rows[i] = *cached[i];
      hits.push_back(i);
    }
  }
  if (options.reverify_sample > 0 && !hits.empty()) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(hits.begin(), hits.end(), rng);
    hits.resize(std::min(hits.size(), options.reverify_sample));
    const auto again = parallel_map<SurveyRow>(hits.size(), options.jobs,
                                               [&](std::size_t k) { return compute(hits[k]); });
    for (std::size_t k = 0; k < hits.size(); ++k) {
      ++outcome.reverified;
      if (!(again[k] == outcome.rows[hits[k]])) {
        ++outcome.reverify_mismatches;
        outcome.rows[hits[k]] = again[k];
        options.cache->append(keys[hits[k]], again[k]);
      }
    }
  }
  return outcome;
}

SurveyRow skipped_row(std::string family, std::vector<std::int64_t> params, const std::string& reason) {
  SurveyRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.verdict = Verdict::Skipped;
  row.reason = reason;
  return row;
}

}  // namespace

AnalysisReport analyze(const PlumbingGraph& g, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.name = g.name();
  r.graph_hash = g.canonical_hash();
  r.det = determinant(g);
  r.negative_definite = is_negative_definite(g);
  r.bad_vertices = bad_vertices(g);
  if (g.connected()) r.is_homology_sphere = is_homology_sphere(g);
  r.initial_count = initial_count(g);
  if (!r.negative_definite) r.warnings.emplace_back("graph is not negative definite; the count has no HF meaning");
  if (!g.connected()) r.warnings.emplace_back("graph is disconnected");

  const auto counted = good_initial_count(g, CountOptions{options.early_stop, {}});
  r.good_initial_count = counted.count;
  r.partial = counted.partial;
  GameSolver solver(g);
  for (const auto& n : counted.good_initials) {
    r.good_initials.push_back(to_vector(n));
    if (!greedy_path_completes(g, n)) r.order_dependent_initials.push_back(to_vector(n));
    if (options.emit_sequences) {
      if (auto seq = solver.complete(n)) r.sequences.push_back(std::move(*seq));
    }
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

AnalysisReport analyze_brieskorn(const std::vector<std::int64_t>& multiplicities, const AnalyzeOptions& options) {
  const auto inv = brieskorn(multiplicities);
  auto g = blow_down(star_graph(inv));
  std::string name = "Sigma(";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) name += (i ? "," : "") + std::to_string(multiplicities[i]);
  g.set_name(name + ")");
  auto report = analyze(g, options);
  report.seifert = inv;
  return report;
}

std::vector<std::vector<std::int64_t>> brieskorn_tuples(int rays, std::int64_t max_a) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> grow = [&](std::int64_t from) {
    if (static_cast<int>(cur.size()) == rays) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t a = from; a <= max_a; ++a) {
      if (std::all_of(cur.begin(), cur.end(), [a](std::int64_t x) { return std::gcd(a, x) == 1; })) {
        cur.push_back(a);
        grow(a + 1);
        cur.pop_back();
      }
    }
  };
  if (rays > 0) grow(2);
  return out;
}

bool all_minus_two_condition(const std::vector<std::int64_t>& p) {
  Rat lhs(2);
  std::int64_t product = 1;
  for (const auto pi : p) {
    lhs -= Rat(pi, pi + 1);
    product = detail::checked_mul(product, pi + 1);
  }
  return lhs == Rat(1, product);
}

PlumbingGraph all_minus_two_star(const std::vector<std::int64_t>& p) {
  std::vector<Weight> weights{-2};
  std::vector<Edge> edges;
  for (const auto len : p) {
    VertexId prev = 0;
    for (std::int64_t j = 0; j < len; ++j) {
      const auto v = static_cast<VertexId>(weights.size());
      weights.push_back(-2);
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return PlumbingGraph::build(std::move(weights), std::move(edges));
}

SurveyRow brieskorn_row(const std::vector<std::int64_t>& multiplicities, std::optional<std::uint64_t> early_stop) {
  SurveyRow row;
  row.family = "brieskorn";
  row.params = multiplicities;
  try {
    const auto g = blow_down(star_graph(brieskorn(multiplicities)));
    row.graph_hash = g.canonical_hash();
    const auto counted = good_initial_count(g, CountOptions{early_stop, {}});
    row.good_initial_count = counted.count;
    row.partial = counted.partial;
    row.verdict = classify(counted.count, counted.partial);
    if (row.verdict == Verdict::Skipped) row.reason = "no conclusive count";
  } catch (const Error& e) {
    return skipped_row("brieskorn", multiplicities, e.what());
  }
  return row;
}

SurveyRow s3_row(const SphereQuadruple& q) {
  SurveyRow row;
  row.family = "s3";
  row.params = {q.a1, q.b1, q.a2, q.b2};
  try {
    const auto g = star_graph(q);
    row.graph_hash = g.canonical_hash();
    const auto counted = good_initial_count(g);
    row.good_initial_count = counted.count;
    row.verdict = classify(counted.count, counted.partial);

    Association minimal(g.size());
    for (VertexId v = 0; v < g.size(); ++v) minimal(v) = 2 + g.weight(v);
    row.checks.emplace_back("unique_initial",
                            counted.count == 1 && AssociationEqual{}(counted.good_initials.front(), minimal));

    const auto t = expand_cf(q.first().ratio());
    const auto s = expand_cf(q.second().ratio());
    const auto lemma1 = lemma1_check(t, s);
    row.checks.emplace_back("lemma1", lemma1.bumped_first && lemma1.bumped_second);

    const auto witness = completes_to_good(minimal, g);
    if (!witness) {
      row.checks.emplace_back("lemma2", false);
      row.checks.emplace_back("pairing_jump", false);
      row.checks.emplace_back("reversal", false);
      row.reason = "2+m does not complete";
      return row;
    }
    const auto central = central_count(*witness, 0);
    row.central_count = static_cast<std::int64_t>(central);
    row.checks.emplace_back("lemma2", row.central_count == q.a1 + q.a2 - 1);

    const auto pv = pairing_vector(q);
    bool jumps = true;
    for (std::size_t k = 1; k < witness->states.size(); ++k) {
      const auto diff = pairing(pv, witness->states[k]) - pairing(pv, witness->states[k - 1]);
      jumps = jumps && diff == (witness->moved[k - 1] == 0 ? 2 : 0);
    }
    row.checks.emplace_back("pairing_jump", jumps);
    row.checks.emplace_back("reversal", is_good_sequence(g, reversed(*witness)));
  } catch (const Error& e) {
    return skipped_row("s3", row.params, e.what());
  }
  return row;
}

SurveyOutcome survey_brieskorn(const SurveyOptions& options) {
  const auto tuples = brieskorn_tuples(options.rays, options.max_a);
  std::vector<std::string> keys(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    try {
      keys[i] = RowCache::key("brieskorn", blow_down(star_graph(brieskorn(tuples[i]))).canonical_hash(),
                              options.early_stop);
    } catch (const Error&) {
      // Left uncached; the row itself reports the failure.
    }
  }
  return run_cached(keys, options, [&](std::size_t i) { return brieskorn_row(tuples[i], options.early_stop); });
}

SurveyOutcome survey_all_minus_two(const SurveyOptions& options) {
  std::vector<std::vector<std::int64_t>> solutions;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, int)> grow = [&](std::int64_t from, int n) {
    if (static_cast<int>(cur.size()) == n) {
      if (all_minus_two_condition(cur)) solutions.push_back(cur);
      return;
    }
    for (std::int64_t p = from; p <= options.max_p; ++p) {
      cur.push_back(p);
      grow(p, n);
      cur.pop_back();
    }
  };
  for (int n = 1; n <= options.rays; ++n) grow(1, n);

  std::vector<std::string> keys(solutions.size());
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    keys[i] = RowCache::key("all-minus-two", all_minus_two_star(solutions[i]).canonical_hash(), options.early_stop);
  }
  return run_cached(keys, options, [&](std::size_t i) {
    SurveyRow row;
    row.family = "all-minus-two";
    row.params = solutions[i];
    try {
      const auto g = all_minus_two_star(solutions[i]);
      row.graph_hash = g.canonical_hash();
      const auto counted = good_initial_count(g, CountOptions{options.early_stop, {}});
      row.good_initial_count = counted.count;
      row.partial = counted.partial;
      row.verdict = classify(counted.count, counted.partial);
    } catch (const Error& e) {
      return skipped_row("all-minus-two", solutions[i], e.what());
    }
    return row;
  });
}

SurveyOutcome survey_s3(const SurveyOptions& options) {
  const auto quadruples = enumerate_quadruples(options.bound);
  std::vector<std::string> keys(quadruples.size());
  for (std::size_t i = 0; i < quadruples.size(); ++i) {
    keys[i] = RowCache::key("s3", star_graph(quadruples[i]).canonical_hash(), std::nullopt);
  }
  return run_cached(keys, options, [&](std::size_t i) { return s3_row(quadruples[i]); });
}

}  // namespace plumb
