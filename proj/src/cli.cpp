#include "isk4/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "isk4/coloring.hpp"
#include "isk4/detect.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/harness.hpp"
#include "isk4/report.hpp"

namespace isk4::cli {

namespace {

struct CommonOptions {
  std::string input = "-";
  std::string format = "graph6";
  std::string output;
  int jobs = 1;
  long long budget = 50'000'000;
};

struct DetectOptions {
  std::string variant = "isk4p";
  bool oracle = false;
  int oracle_max = 16;
};

struct ColorOptions {
  int k = 0;
  int base_size = -1;
  bool via_ramsey = false;
  int ramsey_side = 4;
  bool verify = false;
  bool exact = false;
  std::string emit = "json";
};

struct CampaignOptions {
  std::string source;
  int min_n = 1;
  int max_n = 5;
  long long count = 1000;
  double p = -1;
  double noise = 0.25;
  unsigned long long seed = kDefaultSeed;
  std::string filter;
  int oracle_max = 16;
};

// Signals a failed --verify or other internal check.
struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InputReader {
public:
  InputReader(const CommonOptions& opts, std::istream& stdin_stream) {
    if (opts.input == "-") {
      in_ = &stdin_stream;
    } else {
      file_.open(opts.input);
      if (!file_) throw ParseError("cannot open input file '" + opts.input + "'");
      in_ = &file_;
    }
    format_ = *parse_input_format(opts.format);
  }

  std::istream& stream() { return *in_; }
  InputFormat format() const { return format_; }

  Graph read_single() {
    if (format_ == InputFormat::edgelist) return read_edge_list(*in_);
    if (format_ == InputFormat::dimacs) return read_dimacs(*in_);
    throw ParseError("graph6 input is a stream");
  }

private:
  std::ifstream file_;
  std::istream* in_ = nullptr;
  InputFormat format_ = InputFormat::graph6;
};

// Applies fn to every input graph (parallel within batches) and emits
// results in input order.
template <class R, class Fn, class Emit>
void for_each_input(InputReader& reader, int jobs, Fn&& fn, Emit&& emit) {
  if (reader.format() == InputFormat::graph6) {
    CampaignConfig cfg;
    cfg.source = SourceKind::stream;
    cfg.stream = &reader.stream();
    cfg.jobs = jobs;
    run_campaign<R>(cfg, fn, emit);
    return;
  }
  const Graph g = reader.read_single();
  R r = fn(0, g);
  emit(0, g, r);
}

int exit_for(bool failure, bool budget) {
  if (failure) return kExitAssertion;
  if (budget) return kExitBudget;
  return kExitOk;
}

struct DetectItem {
  SearchStatus status = SearchStatus::none;
  std::optional<SubdivisionWitness> witness;
};

int run_detect(const CommonOptions& common, const DetectOptions& opts, std::istream& in, std::ostream& out) {
  InputReader reader(common, in);
  const int min_order = opts.variant == "isk4" ? kK4Order : kK4PlusOrder;
  const SearchLimits limits{common.budget};
  bool budget = false;
  for_each_input<DetectItem>(
      reader, common.jobs,
      [&](std::int64_t, const Graph& g) {
        auto r = opts.oracle ? find_isk4plus_oracle(g, {opts.oracle_max, min_order})
                             : find_induced_k4_subdivision(g, min_order, limits);
        if (r.is_found() && !verify_witness(g, *r.value, min_order).empty())
          throw InternalFailure("detector returned an invalid witness");
        return DetectItem{r.status, std::move(r.value)};
      },
      [&](std::int64_t index, const Graph&, DetectItem& item) {
        Json j;
        j["input_index"] = index;
        j["verdict"] = to_string(item.status);
        if (item.witness) j["witness"] = to_json(*item.witness);
        out << j.dump() << '\n';
        budget |= item.status == SearchStatus::budget;
      });
  return exit_for(false, budget);
}

struct ColorItem {
  ColoringResult result;
  std::optional<Edge> bad_edge;
  int chi = -1;
  bool chi_budget = false;
};

int run_color(const CommonOptions& common, const ColorOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
  if (opts.via_ramsey && (opts.k < 1 || opts.k > 5)) {
    err << "--via-ramsey requires --k between 1 and 5\n";
    return kExitUsage;
  }
  InputReader reader(common, in);
  const SearchLimits limits{common.budget};
  bool budget = false;
  int usage_error = 0;
  for_each_input<ColorItem>(
      reader, common.jobs,
      [&](std::int64_t, const Graph& g) {
        ColorItem item;
        if (opts.k > 0) {
          auto omega = clique_number(g, limits);
          if (omega.is_found() && *omega.value > opts.k) {
            item.result.status = SearchStatus::none;  // marks a clique-bound error
            item.result.clique_bound = *omega.value;
            return item;
          }
        }
        ColoringOptions co;
        co.k = opts.k;
        co.base_size = opts.base_size;
        co.via_ramsey = opts.via_ramsey;
        co.ramsey_side = opts.ramsey_side;
        co.limits = limits;
        item.result = color_isk4plus_free(g, co);
        if (item.result.status == SearchStatus::found) item.bad_edge = verify_proper(g, item.result.coloring);
        if (opts.exact) {
          auto chi = chromatic_number_exact(g, limits);
          if (chi.is_found())
            item.chi = *chi.value;
          else
            item.chi_budget = true;
        }
        return item;
      },
      [&](std::int64_t index, const Graph&, ColorItem& item) {
        if (item.result.status == SearchStatus::none) {
          err << "graph " << index << ": --k " << opts.k << " is below the clique number "
              << item.result.clique_bound << '\n';
          usage_error = kExitUsage;
          return;
        }
        const bool done = item.result.status == SearchStatus::found;
        budget |= !done || item.chi_budget;
        if (done && opts.verify && item.bad_edge)
          throw InternalFailure("coloring of graph " + std::to_string(index) + " is improper at edge {" +
                                std::to_string(item.bad_edge->first) + "," + std::to_string(item.bad_edge->second) +
                                "}");
        if (opts.emit == "lines") {
          if (index > 0) out << '\n';
          if (done)
            for (std::size_t v = 0; v < item.result.coloring.color.size(); ++v)
              out << v << ' ' << item.result.coloring.color[v] << '\n';
          return;
        }
        Json j;
        j["input_index"] = index;
        j["status"] = done ? "ok" : "budget";
        j["clique_bound"] = item.result.clique_bound;
        if (done) {
          j["palette_size"] = item.result.coloring.palette_size;
          j["colors"] = item.result.coloring.color;
          j["proper"] = !item.bad_edge.has_value();
        }
        if (opts.exact) j["chi"] = item.chi_budget ? Json(nullptr) : Json(item.chi);
        j["fallbacks"] = count_fallbacks(item.result.trace);
        j["trace"] = to_json(item.result.trace);
        out << j.dump() << '\n';
      });
  if (usage_error) return usage_error;
  return exit_for(false, budget);
}

CampaignConfig make_config(const CommonOptions& common, const CampaignOptions& opts, std::istream& stream,
                           std::ostream& err, bool positional_input) {
  CampaignConfig cfg;
  if (!opts.source.empty()) {
    cfg.source = *parse_source_kind(opts.source);
  } else {
    cfg.source = positional_input ? SourceKind::stream : SourceKind::labeled;
  }
  cfg.stream = &stream;
  cfg.min_n = opts.min_n;
  cfg.max_n = opts.max_n;
  cfg.count = opts.count;
  cfg.edge_probability = opts.p;
  cfg.noise = opts.noise;
  cfg.seed = opts.seed;
  cfg.filters = *parse_filters(opts.filter);
  cfg.limits = SearchLimits{common.budget};
  cfg.jobs = common.jobs;
  cfg.oracle_max_order = opts.oracle_max;
  err << "seed " << cfg.seed << '\n';
  return cfg;
}

void add_common(CLI::App* sub, CommonOptions& common, bool input_default_stdin) {
  sub->add_option("input", common.input, input_default_stdin ? "Input file or - for stdin" : "graph6 input file or -");
  sub->add_option("--format", common.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
  sub->add_option("-o,--output", common.output, "Write results to this file");
  sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--budget", common.budget, "Search node budget per call (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
}

void add_campaign(CLI::App* sub, CampaignOptions& c) {
  sub->add_option("--source", c.source, "Graph source")
      ->check(CLI::IsMember({"stream", "labeled", "degree-sorted", "random", "planted", "k44-random", "triangle-free"}));
  sub->add_option("--min-n", c.min_n, "Smallest order")->check(CLI::Range(0, 128));
  sub->add_option("--max-n", c.max_n, "Largest order")->check(CLI::Range(0, 128));
  sub->add_option("--count", c.count, "Graphs to sample from random sources")->check(CLI::NonNegativeNumber);
  sub->add_option("--p", c.p, "Edge probability for random sources")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--noise", c.noise, "Noise probability for planted graphs")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--filter", c.filter, "Comma-separated filters: isk4p-free, isk4-free, triangle-free")
      ->check([](const std::string& s) { return parse_filters(s) ? std::string{} : "unknown filter in '" + s + "'"; });
  sub->add_option("--oracle-max", c.oracle_max, "Largest order checked by the brute-force oracle")
      ->check(CLI::Range(5, 24));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induced K4+-subdivision detectors, structure checks and coloring", "isk4"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  CommonOptions common;
  DetectOptions detect;
  ColorOptions color;
  CampaignOptions campaign;

  auto* detect_cmd = app.add_subcommand("detect", "Search each input graph for an induced subdivision");
  add_common(detect_cmd, common, true);
  detect_cmd->add_option("--variant", detect.variant, "isk4p (>= 5 vertices) or isk4 (K4 allowed)")
      ->check(CLI::IsMember({"isk4p", "isk4"}));
  detect_cmd->add_flag("--oracle", detect.oracle, "Use the brute-force subset oracle");
  detect_cmd->add_option("--oracle-max", detect.oracle_max, "Oracle order ceiling")->check(CLI::Range(5, 24));

  auto* color_cmd = app.add_subcommand("color", "Color each input graph recursively");
  add_common(color_cmd, common, true);
  color_cmd->add_option("--k", color.k, "Clique bound (default: clique number)")->check(CLI::NonNegativeNumber);
  color_cmd->add_option("--base-size", color.base_size, "Base-case size (default: k)");
  color_cmd->add_flag("--via-ramsey", color.via_ramsey, "Find K4,4 through a K_{s,s} subgraph");
  color_cmd->add_option("--ramsey-side", color.ramsey_side, "Side size s of the K_{s,s} search")
      ->check(CLI::Range(4, 64));
  color_cmd->add_flag("--verify", color.verify, "Re-check properness before exiting");
  color_cmd->add_flag("--exact", color.exact, "Also report the exact chromatic number");
  color_cmd->add_option("--emit", color.emit, "json or lines")->check(CLI::IsMember({"json", "lines"}));

  auto* claims_cmd = app.add_subcommand("verify-claims", "Check the structural claims on a graph corpus");
  auto* survey_cmd = app.add_subcommand("survey", "Tabulate max chromatic number by order and clique number");
  auto* bounds_cmd = app.add_subcommand("check-bounds", "Check chi <= 24 (ISK4-free) and chi <= 3 (triangle-free)");
  for (auto* sub : {claims_cmd, survey_cmd, bounds_cmd}) {
    add_common(sub, common, false);
    add_campaign(sub, campaign);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!common.output.empty()) {
    file_out.open(common.output);
    if (!file_out) {
      err << "cannot open output file '" << common.output << "'\n";
      return kExitUsage;
    }
    sink = &file_out;
  }

  try {
    if (detect_cmd->parsed()) return run_detect(common, detect, in, *sink);
    if (color_cmd->parsed()) return run_color(common, color, in, *sink, err);

    // Campaigns read a graph6 stream only when an input is named.
    InputReader reader(common, in);
    if (common.format != "graph6") {
      err << "campaigns read graph6 streams only\n";
      return kExitUsage;
    }
    const bool positional = !(claims_cmd->parsed() ? claims_cmd : survey_cmd->parsed() ? survey_cmd : bounds_cmd)
                                 ->get_option("input")
                                 ->empty();
    const CampaignConfig cfg = make_config(common, campaign, reader.stream(), err, positional);
    if (auto problem = validate_config(cfg); !problem.empty()) {
      err << problem << '\n';
      return kExitUsage;
    }
    if (claims_cmd->parsed()) {
      const ClaimsReport r = verify_claims_campaign(cfg);
      *sink << to_json(r).dump(2) << '\n';
      return exit_for(!r.inconsistencies.empty(), r.budget_exhausted > 0);
    }
    if (survey_cmd->parsed()) {
      const SurveyReport r = survey_chi_vs_omega(cfg);
      *sink << to_csv(r);
      err << "graphs " << r.graphs_seen << ", passed filters " << r.graphs_passed << ", budget "
          << r.budget_exhausted << '\n';
      return exit_for(false, r.budget_exhausted > 0);
    }
    const BoundsReport r = check_cited_bounds(cfg);
    *sink << to_json(r).dump(2) << '\n';
    return exit_for(!r.violations.empty(), r.budget_exhausted > 0);
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kExitDataErr;
  } catch (const GraphError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitDataErr;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitSoftware;
  }
}

}  // namespace isk4::cli
