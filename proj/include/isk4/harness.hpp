#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/report.hpp"
#include "isk4/search.hpp"

namespace isk4 {

enum class SourceKind {
  stream,         // graph6 records from an input stream
  labeled,        // every labeled graph on min_n..max_n vertices
  degree_sorted,  // labeled graphs with nonincreasing degrees (one per isomorphism class at least)
  random,         // G(n, p); p cycles through 0.2, 0.5, 0.8 unless set
  planted,        // complete multipartite core with glued blocks
  k44_random,     // planted K4,4 plus random edges
  triangle_free,  // random triangle-free process with a random edge target
};

std::optional<SourceKind> parse_source_kind(const std::string& name);
const char* to_string(SourceKind k);

struct Filters {
  bool isk4p_free = false;
  bool isk4_free = false;
  bool triangle_free = false;
};

/// Parses a comma-separated list of isk4p-free, isk4-free, triangle-free.
std::optional<Filters> parse_filters(const std::string& list);

struct CampaignConfig {
  SourceKind source = SourceKind::labeled;
  std::istream* stream = nullptr;  // for SourceKind::stream
  int min_n = 1;
  int max_n = 5;
  std::int64_t count = 1000;  // random sources
  double edge_probability = -1;
  double noise = 0.25;  // planted
  std::uint64_t seed = 1;
  Filters filters;
  SearchLimits limits{50'000'000};
  int jobs = 1;
  int oracle_max_order = 16;
};

/// Ceiling on max_n for exhaustive labeled enumeration.
inline constexpr int kLabeledMaxOrder = 7;
inline constexpr int kDegreeSortedMaxOrder = 8;

/// Checks CampaignConfig invariants; empty string when valid.
std::string validate_config(const CampaignConfig& cfg);

/// All labeled graphs on n vertices (n <= 7), ordered by edge bitmask.
std::vector<Graph> enumerate_labeled(int n);
/// Streaming form of enumerate_labeled.
void for_each_labeled(int n, const std::function<void(const Graph&)>& fn);

/// Streams graphs from a configured source in batches.
class GraphSource {
public:
  virtual ~GraphSource() = default;
  /// Appends up to `max` graphs to `out`; returns false once exhausted.
  virtual bool next_batch(std::vector<Graph>& out, std::size_t max) = 0;
};

std::unique_ptr<GraphSource> make_source(const CampaignConfig& cfg);

/// Runs fn(i) for i in [0, count) over `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Calls `fn(index, graph)` on every graph of the source, fanning out over
/// cfg.jobs threads per batch; `consume(index, graph, result)` then runs
/// sequentially in input order, so reductions are independent of cfg.jobs.
template <class R, class Fn, class Consume>
void run_campaign(const CampaignConfig& cfg, Fn&& fn, Consume&& consume) {
  constexpr std::size_t kBatch = 4096;
  auto source = make_source(cfg);
  std::vector<Graph> batch;
  std::vector<R> results;
  std::int64_t base = 0;
  for (bool more = true; more;) {
    batch.clear();
    more = source->next_batch(batch, kBatch);
    results.assign(batch.size(), R{});
    parallel_for(batch.size(), cfg.jobs,
                 [&](std::size_t i) { results[i] = fn(base + static_cast<std::int64_t>(i), batch[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i) consume(base + static_cast<std::int64_t>(i), batch[i], results[i]);
    base += static_cast<std::int64_t>(batch.size());
  }
}

enum class FilterVerdict { pass, reject, budget };

/// Applies the filters, cheapest first.
FilterVerdict apply_filters(const Graph& g, const Filters& f, SearchLimits limits);

bool is_triangle_free(const Graph& g);

struct SurveyRow {
  int n = 0;
  int omega = 0;
  int max_chi_observed = 0;
  std::int64_t count_graphs = 0;
  std::string example_graph6;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;  // sorted by (n, omega)
  std::int64_t graphs_seen = 0;
  std::int64_t graphs_passed = 0;
  std::int64_t budget_exhausted = 0;
};

SurveyReport survey_chi_vs_omega(const CampaignConfig& cfg);
std::string to_csv(const SurveyReport& r);

struct Inconsistency {
  std::int64_t index = 0;
  std::string graph6;
  std::string reason;
};

struct ClaimsReport {
  std::int64_t graphs = 0;
  std::int64_t with_k44 = 0;
  std::int64_t claims_pass = 0;
  std::int64_t violations[4] = {0, 0, 0, 0};  // by claim id
  std::int64_t maximality_breaches = 0;
  std::int64_t violations_confirmed = 0;
  std::int64_t isk4p_free = 0;
  std::int64_t free_all_claims_pass = 0;
  std::int64_t cutsets_required = 0;
  std::int64_t cutsets_valid = 0;
  std::int64_t witnesses_verified = 0;
  std::int64_t budget_exhausted = 0;
  std::vector<Inconsistency> inconsistencies;
};

/// For each graph with an induced K4,4: grows M, runs the claim checks and
/// cross-checks them against the detectors.
ClaimsReport verify_claims_campaign(const CampaignConfig& cfg);
Json to_json(const ClaimsReport& r);

struct BoundViolation {
  int bound = 0;
  int chi = 0;
  std::string graph6;
};

struct BoundsReport {
  std::int64_t graphs = 0;
  std::int64_t isk4_free = 0;
  int max_chi_isk4_free = 0;
  std::string example_isk4_free;
  std::int64_t triangle_free_isk4_free = 0;
  int max_chi_triangle_free = 0;
  std::string example_triangle_free;
  std::int64_t budget_exhausted = 0;
  std::vector<BoundViolation> violations;
};

inline constexpr int kIsk4FreeChiBound = 24;
inline constexpr int kTriangleFreeIsk4FreeChiBound = 3;

/// Exact chi on ISK4-free graphs (bound 24) and on triangle-free ISK4-free
/// graphs (bound 3). With filters.triangle_free set only the latter class is kept.
BoundsReport check_cited_bounds(const CampaignConfig& cfg);
Json to_json(const BoundsReport& r);

struct QualityRow {
  int n = 0;
  std::int64_t count = 0;
  std::int64_t gap_sum = 0;
  int max_gap = 0;
  std::int64_t fallbacks = 0;
  std::string worst_graph6;
};

struct QualityReport {
  std::vector<QualityRow> rows;  // by n
  std::int64_t graphs_seen = 0;
  std::int64_t improper = 0;
  std::int64_t budget_exhausted = 0;
};

/// Palette used by color_isk4plus_free minus exact chi, on ISK4+-free graphs.
QualityReport coloring_quality_campaign(const CampaignConfig& cfg);
std::string to_csv(const QualityReport& r);

}  // namespace isk4
