#include "isk4/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "isk4/coloring.hpp"
#include "isk4/detect.hpp"
#include "isk4/generators.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/structure.hpp"

namespace isk4 {

std::optional<SourceKind> parse_source_kind(const std::string& name) {
  static const std::map<std::string, SourceKind> kinds{
      {"stream", SourceKind::stream},         {"labeled", SourceKind::labeled},
      {"degree-sorted", SourceKind::degree_sorted}, {"random", SourceKind::random},
      {"planted", SourceKind::planted},       {"k44-random", SourceKind::k44_random},
      {"triangle-free", SourceKind::triangle_free}};
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

const char* to_string(SourceKind k) {
  switch (k) {
    case SourceKind::stream: return "stream";
    case SourceKind::labeled: return "labeled";
    case SourceKind::degree_sorted: return "degree-sorted";
    case SourceKind::random: return "random";
    case SourceKind::planted: return "planted";
    case SourceKind::k44_random: return "k44-random";
    case SourceKind::triangle_free: return "triangle-free";
  }
  return "?";
}

std::optional<Filters> parse_filters(const std::string& list) {
  Filters f;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "isk4p-free")
      f.isk4p_free = true;
    else if (item == "isk4-free")
      f.isk4_free = true;
    else if (item == "triangle-free")
      f.triangle_free = true;
    else if (item == "none" || item.empty())
      continue;
    else
      return std::nullopt;
  }
  return f;
}

std::string validate_config(const CampaignConfig& cfg) {
  if (cfg.jobs < 1) return "jobs must be at least 1";
  if (cfg.min_n < 0 || cfg.max_n < cfg.min_n) return "invalid vertex range";
  if (cfg.max_n > kMaxVertices) return "max_n exceeds 128";
  switch (cfg.source) {
    case SourceKind::stream:
      if (!cfg.stream) return "stream source without an input stream";
      break;
    case SourceKind::labeled:
      if (cfg.max_n > kLabeledMaxOrder) return "labeled enumeration is limited to n <= 7";
      break;
    case SourceKind::degree_sorted:
      if (cfg.max_n > kDegreeSortedMaxOrder) return "degree-sorted enumeration is limited to n <= 8";
      break;
    case SourceKind::k44_random:
      if (cfg.min_n < 8) return "k44-random needs min_n >= 8";
      break;
    case SourceKind::planted:
      if (cfg.min_n < 8) return "planted needs min_n >= 8";
      break;
    default:
      break;
  }
  if (cfg.source != SourceKind::stream && cfg.source != SourceKind::labeled &&
      cfg.source != SourceKind::degree_sorted && cfg.count < 0)
    return "count must be nonnegative";
  if (cfg.edge_probability > 1) return "edge probability above 1";
  if (cfg.oracle_max_order > 24) return "oracle ceiling above 24";
  return {};
}

void for_each_labeled(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > kLabeledMaxOrder) throw GraphError("enumerate_labeled: n must be in [0, 7]");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask));
}

std::vector<Graph> enumerate_labeled(int n) {
  std::vector<Graph> out;
  for_each_labeled(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

class StreamSource : public GraphSource {
public:
  explicit StreamSource(std::istream& in) : reader_(in) {}
  bool next_batch(std::vector<Graph>& out, std::size_t max) override {
    for (std::size_t i = 0; i < max; ++i) {
      auto g = reader_.next();
      if (!g) return false;
      out.push_back(std::move(*g));
    }
    return true;
  }

private:
  Graph6Reader reader_;
};

class MaskSource : public GraphSource {
public:
  MaskSource(int min_n, int max_n, bool degree_sorted)
      : n_(min_n), max_n_(max_n), degree_sorted_(degree_sorted) {}
  bool next_batch(std::vector<Graph>& out, std::size_t max) override {
    std::size_t added = 0;
    while (n_ <= max_n_) {
      const std::uint64_t total = std::uint64_t{1} << pair_count(n_);
      while (mask_ < total) {
        if (added == max) return true;
        const std::uint64_t m = mask_++;
        if (degree_sorted_ && !degrees_nonincreasing(n_, m)) continue;
        out.push_back(graph_from_mask(n_, m));
        ++added;
      }
      ++n_;
      mask_ = 0;
    }
    return false;
  }

private:
  int n_;
  int max_n_;
  bool degree_sorted_;
  std::uint64_t mask_ = 0;
};

class RandomSource : public GraphSource {
public:
  explicit RandomSource(const CampaignConfig& cfg) : cfg_(cfg) {}
  bool next_batch(std::vector<Graph>& out, std::size_t max) override {
    for (std::size_t i = 0; i < max; ++i) {
      if (next_ >= cfg_.count) return false;
      out.push_back(make(next_++));
    }
    return next_ < cfg_.count;
  }

private:
  Graph make(std::int64_t index) const {
    static constexpr double kDefaultP[3] = {0.2, 0.5, 0.8};
    Rng rng = item_rng(cfg_.seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(cfg_.source));
    const int n = std::uniform_int_distribution<int>(cfg_.min_n, cfg_.max_n)(rng);
    const double p = cfg_.edge_probability >= 0 ? cfg_.edge_probability : kDefaultP[index % 3];
    switch (cfg_.source) {
      case SourceKind::random: return random_gnp(n, p, rng);
      case SourceKind::k44_random: return random_with_k44(n, p, rng);
      case SourceKind::planted: return random_planted(n, cfg_.noise, rng);
      case SourceKind::triangle_free: {
        const int target = std::uniform_int_distribution<int>(n / 2, 3 * n / 2)(rng);
        return random_triangle_free(n, target, rng);
      }
      default: break;
    }
    throw GraphError("not a random source");
  }

  const CampaignConfig& cfg_;
  std::int64_t next_ = 0;
};

}  // namespace

std::unique_ptr<GraphSource> make_source(const CampaignConfig& cfg) {
  if (auto err = validate_config(cfg); !err.empty()) throw GraphError("campaign config: " + err);
  switch (cfg.source) {
    case SourceKind::stream: return std::make_unique<StreamSource>(*cfg.stream);
    case SourceKind::labeled: return std::make_unique<MaskSource>(cfg.min_n, cfg.max_n, false);
    case SourceKind::degree_sorted: return std::make_unique<MaskSource>(cfg.min_n, cfg.max_n, true);
    default: return std::make_unique<RandomSource>(cfg);
  }
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const int n = static_cast<int>(std::min<std::size_t>(jobs, count));
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.adj(u).intersects(g.adj(v))) return false;
  return true;
}

FilterVerdict apply_filters(const Graph& g, const Filters& f, SearchLimits limits) {
  if (f.triangle_free && !is_triangle_free(g)) return FilterVerdict::reject;
  if (f.isk4_free) {
    auto r = find_isk4(g, limits);
    if (r.is_budget()) return FilterVerdict::budget;
    if (r.is_found()) return FilterVerdict::reject;
  }
  if (f.isk4p_free && !f.isk4_free) {
    auto r = find_isk4plus(g, limits);
    if (r.is_budget()) return FilterVerdict::budget;
    if (r.is_found()) return FilterVerdict::reject;
  }
  return FilterVerdict::pass;
}

// ---------------------------------------------------------------- survey

namespace {

struct SurveyItem {
  FilterVerdict verdict = FilterVerdict::reject;
  int omega = 0;
  int chi = 0;
};

}  // namespace

SurveyReport survey_chi_vs_omega(const CampaignConfig& cfg) {
  SurveyReport report;
  std::map<std::pair<int, int>, SurveyRow> rows;
  run_campaign<SurveyItem>(
      cfg,
      [&](std::int64_t, const Graph& g) {
        SurveyItem item;
        item.verdict = apply_filters(g, cfg.filters, cfg.limits);
        if (item.verdict != FilterVerdict::pass) return item;
        auto omega = clique_number(g, cfg.limits);
        auto chi = chromatic_number_exact(g, cfg.limits);
        if (omega.is_budget() || chi.is_budget()) {
          item.verdict = FilterVerdict::budget;
          return item;
        }
        item.omega = *omega.value;
        item.chi = *chi.value;
        return item;
      },
      [&](std::int64_t, const Graph& g, SurveyItem& item) {
        ++report.graphs_seen;
        if (item.verdict == FilterVerdict::budget) ++report.budget_exhausted;
        if (item.verdict != FilterVerdict::pass) return;
        ++report.graphs_passed;
        SurveyRow& row = rows[{g.order(), item.omega}];
        row.n = g.order();
        row.omega = item.omega;
        ++row.count_graphs;
        if (row.count_graphs == 1 || item.chi > row.max_chi_observed) {
          row.max_chi_observed = item.chi;
          row.example_graph6 = write_graph6(g);
        }
      });
  for (auto& [key, row] : rows) report.rows.push_back(std::move(row));
  return report;
}

std::string to_csv(const SurveyReport& r) {
  std::ostringstream out;
  out << "n,omega,max_chi_observed,count_graphs,example_graph6\n";
  for (const auto& row : r.rows)
    out << row.n << ',' << row.omega << ',' << row.max_chi_observed << ',' << row.count_graphs << ','
        << row.example_graph6 << '\n';
  return out.str();
}

// ---------------------------------------------------------------- claims

namespace {

struct ClaimsItem {
  bool budget = false;
  bool k44 = false;
  ClaimResult::Kind kind = ClaimResult::Kind::ok;
  int claim_id = 0;
  bool confirmed = false;
  bool free = false;
  bool cut_required = false;
  bool cut_valid = false;
  int witnesses = 0;
  std::string inconsistency;
};

ClaimsItem claims_for_graph(const Graph& g, const CampaignConfig& cfg) {
  ClaimsItem item;
  auto k44 = find_induced_biclique(g, 4, cfg.limits);
  if (k44.is_budget()) {
    item.budget = true;
    return item;
  }
  if (!k44.is_found()) return item;
  item.k44 = true;

  const MultipartiteWitness m = grow_maximal_multipartite(g, *k44.value);
  if (auto err = validate_multipartite(g, m); !err.empty()) {
    item.inconsistency = "grown M invalid: " + err;
    return item;
  }
  for (Vertex v : g.vertices() - m.members) {
    if (extends_multipartite(g, m, v)) {
      item.inconsistency = "grown M is not inclusion-maximal at vertex " + std::to_string(v);
      return item;
    }
  }

  ClaimResult r;
  try {
    r = check_claims(g, m);
  } catch (const ClaimPreconditionError& e) {
    item.inconsistency = std::string("claim construction failed: ") + e.what();
    return item;
  }
  item.kind = r.kind;

  SearchResult<SubdivisionWitness> detector =
      g.order() <= cfg.oracle_max_order ? find_isk4plus_oracle(g, {cfg.oracle_max_order, kK4PlusOrder})
                                        : find_isk4plus(g, cfg.limits);
  if (detector.is_budget()) {
    item.budget = true;
    return item;
  }
  item.free = detector.is_none();
  if (detector.is_found()) {
    ++item.witnesses;
    if (auto err = verify_witness(g, *detector.value); !err.empty()) {
      item.inconsistency = "detector witness invalid: " + err;
      return item;
    }
  }

  switch (r.kind) {
    case ClaimResult::Kind::violation: {
      const ClaimViolation& v = *r.violation;
      item.claim_id = v.claim_id;
      ++item.witnesses;
      if (auto err = verify_witness(g, v.constructed); !err.empty()) {
        item.inconsistency = "claim witness invalid: " + err;
        return item;
      }
      const Subgraph actors = induced_subgraph(g, v.constructed.total);
      auto local = actors.graph.order() <= cfg.oracle_max_order ? find_isk4plus_oracle(actors.graph, {cfg.oracle_max_order, kK4PlusOrder})
                                                                 : find_isk4plus(actors.graph, cfg.limits);
      if (local.is_budget()) {
        item.budget = true;
        return item;
      }
      if (!local.is_found()) {
        item.inconsistency = "claim violation not confirmed on the actors' subgraph";
        return item;
      }
      if (item.free) {
        item.inconsistency = "claim " + std::to_string(v.claim_id) + " violated on an ISK4+-free graph";
        return item;
      }
      item.confirmed = true;
      return item;
    }
    case ClaimResult::Kind::maximality_breach:
      item.inconsistency = "maximality breach at vertex " + std::to_string(r.breach_vertex) + " on a maximal M";
      return item;
    case ClaimResult::Kind::ok:
      break;
  }

  if (is_connected(g) && m.members != g.vertices()) {
    item.cut_required = true;
    const CutsetOutcome cut = find_structural_cutset(g, m);
    if (cut.status != CutsetOutcome::Status::split) {
      item.inconsistency = "claims hold but the component attachment is not a clique";
      return item;
    }
    if (auto err = validate_cutset_split(g, *cut.split); !err.empty()) {
      item.inconsistency = "invalid cutset split: " + err;
      return item;
    }
    item.cut_valid = true;
  }
  return item;
}

}  // namespace

ClaimsReport verify_claims_campaign(const CampaignConfig& cfg) {
  ClaimsReport report;
  run_campaign<ClaimsItem>(
      cfg, [&](std::int64_t, const Graph& g) { return claims_for_graph(g, cfg); },
      [&](std::int64_t index, const Graph& g, ClaimsItem& item) {
        ++report.graphs;
        report.witnesses_verified += item.witnesses;
        if (!item.inconsistency.empty()) {
          report.inconsistencies.push_back({index, write_graph6(g), item.inconsistency});
          return;
        }
        if (item.budget) {
          ++report.budget_exhausted;
          return;
        }
        if (!item.k44) return;
        ++report.with_k44;
        if (item.free) ++report.isk4p_free;
        switch (item.kind) {
          case ClaimResult::Kind::ok:
            ++report.claims_pass;
            if (item.free) ++report.free_all_claims_pass;
            break;
          case ClaimResult::Kind::violation:
            ++report.violations[item.claim_id];
            if (item.confirmed) ++report.violations_confirmed;
            break;
          case ClaimResult::Kind::maximality_breach:
            ++report.maximality_breaches;
            break;
        }
        if (item.cut_required) ++report.cutsets_required;
        if (item.cut_valid) ++report.cutsets_valid;
      });
  return report;
}

Json to_json(const ClaimsReport& r) {
  Json j;
  j["graphs"] = r.graphs;
  j["with_k44"] = r.with_k44;
  j["claims_pass"] = r.claims_pass;
  j["violations"] = {{"claim1", r.violations[1]}, {"claim2", r.violations[2]}, {"claim3", r.violations[3]}};
  j["maximality_breaches"] = r.maximality_breaches;
  j["violations_confirmed"] = r.violations_confirmed;
  j["isk4p_free"] = r.isk4p_free;
  j["free_all_claims_pass"] = r.free_all_claims_pass;
  j["cutsets_required"] = r.cutsets_required;
  j["cutsets_valid"] = r.cutsets_valid;
  j["witnesses_verified"] = r.witnesses_verified;
  j["budget_exhausted"] = r.budget_exhausted;
  j["inconsistencies"] = Json::array();
  for (const auto& inc : r.inconsistencies) {
    Json e;
    e["index"] = inc.index;
    e["graph6"] = inc.graph6;
    e["reason"] = inc.reason;
    j["inconsistencies"].push_back(std::move(e));
  }
  return j;
}

// ---------------------------------------------------------------- bounds

namespace {

struct BoundsItem {
  bool budget = false;
  bool isk4_free = false;
  bool triangle_free = false;
  int chi = 0;
};

}  // namespace

BoundsReport check_cited_bounds(const CampaignConfig& cfg) {
  BoundsReport report;
  run_campaign<BoundsItem>(
      cfg,
      [&](std::int64_t, const Graph& g) {
        BoundsItem item;
        item.triangle_free = is_triangle_free(g);
        if (cfg.filters.triangle_free && !item.triangle_free) return item;
        auto det = find_isk4(g, cfg.limits);
        if (det.is_budget()) {
          item.budget = true;
          return item;
        }
        item.isk4_free = det.is_none();
        if (!item.isk4_free) return item;
        auto chi = chromatic_number_exact(g, cfg.limits);
        if (chi.is_budget()) {
          item.budget = true;
          return item;
        }
        item.chi = *chi.value;
        return item;
      },
      [&](std::int64_t, const Graph& g, BoundsItem& item) {
        ++report.graphs;
        if (item.budget) {
          ++report.budget_exhausted;
          return;
        }
        if (!item.isk4_free) return;
        ++report.isk4_free;
        if (report.example_isk4_free.empty() || item.chi > report.max_chi_isk4_free) {
          report.max_chi_isk4_free = item.chi;
          report.example_isk4_free = write_graph6(g);
        }
        if (item.chi > kIsk4FreeChiBound) report.violations.push_back({kIsk4FreeChiBound, item.chi, write_graph6(g)});
        if (!item.triangle_free) return;
        ++report.triangle_free_isk4_free;
        if (report.example_triangle_free.empty() || item.chi > report.max_chi_triangle_free) {
          report.max_chi_triangle_free = item.chi;
          report.example_triangle_free = write_graph6(g);
        }
        if (item.chi > kTriangleFreeIsk4FreeChiBound)
          report.violations.push_back({kTriangleFreeIsk4FreeChiBound, item.chi, write_graph6(g)});
      });
  return report;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["graphs"] = r.graphs;
  j["isk4_free"] = {{"count", r.isk4_free},
                    {"bound", kIsk4FreeChiBound},
                    {"max_chi", r.max_chi_isk4_free},
                    {"example_graph6", r.example_isk4_free}};
  j["triangle_free_isk4_free"] = {{"count", r.triangle_free_isk4_free},
                                  {"bound", kTriangleFreeIsk4FreeChiBound},
                                  {"max_chi", r.max_chi_triangle_free},
                                  {"example_graph6", r.example_triangle_free}};
  j["budget_exhausted"] = r.budget_exhausted;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["bound"] = v.bound;
    e["chi"] = v.chi;
    e["graph6"] = v.graph6;
    j["violations"].push_back(std::move(e));
  }
  return j;
}

// ---------------------------------------------------------------- quality

namespace {

struct QualityItem {
  bool budget = false;
  bool free = false;
  bool proper = true;
  int gap = 0;
  int fallbacks = 0;
};

}  // namespace

QualityReport coloring_quality_campaign(const CampaignConfig& cfg) {
  QualityReport report;
  std::map<int, QualityRow> rows;
  run_campaign<QualityItem>(
      cfg,
      [&](std::int64_t, const Graph& g) {
        QualityItem item;
        auto det = find_isk4plus(g, cfg.limits);
        if (det.is_budget()) {
          item.budget = true;
          return item;
        }
        item.free = det.is_none();
        if (!item.free) return item;
        auto chi = chromatic_number_exact(g, cfg.limits);
        if (chi.is_budget()) {
          item.budget = true;
          return item;
        }
        ColoringOptions opts;
        opts.limits = cfg.limits;
        const ColoringResult res = color_isk4plus_free(g, opts);
        if (res.status == SearchStatus::budget) {
          item.budget = true;
          return item;
        }
        item.proper = !verify_proper(g, res.coloring).has_value();
        item.gap = res.coloring.palette_size - *chi.value;
        item.fallbacks = count_fallbacks(res.trace);
        return item;
      },
      [&](std::int64_t, const Graph& g, QualityItem& item) {
        ++report.graphs_seen;
        if (item.budget) {
          ++report.budget_exhausted;
          return;
        }
        if (!item.free) return;
        if (!item.proper) ++report.improper;
        QualityRow& row = rows[g.order()];
        row.n = g.order();
        ++row.count;
        row.gap_sum += item.gap;
        row.fallbacks += item.fallbacks;
        if (row.count == 1 || item.gap > row.max_gap) {
          row.max_gap = item.gap;
          row.worst_graph6 = write_graph6(g);
        }
      });
  for (auto& [n, row] : rows) report.rows.push_back(std::move(row));
  return report;
}

std::string to_csv(const QualityReport& r) {
  std::ostringstream out;
  out << "n,count,mean_gap,max_gap,fallbacks,worst_graph6\n";
  out.setf(std::ios::fixed);
  out.precision(6);
  for (const auto& row : r.rows)
    out << row.n << ',' << row.count << ','
        << (row.count ? static_cast<double>(row.gap_sum) / static_cast<double>(row.count) : 0.0) << ','
        << row.max_gap << ',' << row.fallbacks << ',' << row.worst_graph6 << '\n';
  return out.str();
}

}  // namespace isk4
