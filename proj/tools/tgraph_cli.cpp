// tgraph: experiment front end over the tgraph C API.
//
//   tgraph gen        sample a temporal graph in the text format
//   tgraph sweep      Monte Carlo estimates of a property over a factor grid
//   tgraph gossip     CO / ANY gossip milestones
//   tgraph spanner    optimal spanner construction on F(n,p) or an input file
//   tgraph trajectory foremost-tree label trajectories on F(n,1)
//   tgraph verify     check a spanner file against a graph
//
// Exit status: 0 success, 2 flag or contract errors, 1 runtime failures.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tgraph/tgraph.h"

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(tg_status status) {
  if (status == TG_OK) return;
  std::string msg = std::string(tg_status_name(status)) + ": " + tg_last_error();
  switch (status) {
    case TG_ERR_CONTRACT:
    case TG_ERR_RESOURCE:
    case TG_ERR_PARSE:
    case TG_ERR_IO:
      throw UsageError(msg);
    default:
      throw RuntimeFailure(msg);
  }
}

std::string num(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

template <typename T>
std::string num(T x) requires std::is_integral_v<T> {
  return std::to_string(x);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      file_ = stdout;
      return;
    }
    file_ = std::fopen(path.c_str(), "w");
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    owned_ = true;
  }
  ~Output() {
    if (owned_) std::fclose(file_);
  }
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  FILE* get() const { return file_; }

  void line(const std::string& s) {
    if (std::fputs(s.c_str(), file_) < 0 || std::fputc('\n', file_) == EOF)
      throw RuntimeFailure("write failed");
  }

  void finish() {
    if (std::fflush(file_) != 0) throw RuntimeFailure("write failed");
  }

 private:
  FILE* file_ = nullptr;
  bool owned_ = false;
};

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

struct Common {
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("TT_SEED")) {
      std::uint64_t v = 0;
      const std::string s = env;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError("TT_SEED is not an unsigned integer: '" + s + "'");
      return v;
    }
    return 0;
  }

  unsigned resolved_threads() const {
    if (threads) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

void add_seed(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Master seed (default: $TT_SEED, else 0)");
}

void add_common(CLI::App* cmd, Common& c, bool trials, bool format) {
  add_seed(cmd, c);
  if (trials)
    cmd->add_option("--trials", c.trials, "Number of trials")
        ->capture_default_str()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  cmd->add_option("--out", c.out, "Output path ('-' or omitted: stdout)");
  if (format)
    cmd->add_option("--format", c.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
}

// Writes either CSV (config comment, header, rows, trailing comments) or one
// JSON document with config, rows and summary.
class Table {
 public:
  Table(ordered_json config, std::vector<std::string> columns)
      : config_(std::move(config)), columns_(std::move(columns)) {}

  void row(std::vector<std::string> cells, ordered_json json_row) {
    csv_rows_.push_back(join(cells));
    json_rows_.push_back(std::move(json_row));
  }
  void extra_row(std::vector<std::string> cells) { csv_rows_.push_back(join(cells)); }
  void comment(const std::string& text) { comments_.push_back(text); }
  ordered_json& summary() { return summary_; }

  void write(Output& out, const std::string& format) const {
    if (format == "json") {
      ordered_json doc;
      doc["config"] = config_;
      doc["rows"] = json_rows_;
      if (!summary_.is_null()) doc["summary"] = summary_;
      out.line(doc.dump(2));
    } else {
      out.line("# config " + config_.dump());
      out.line(join(columns_));
      for (const auto& r : csv_rows_) out.line(r);
      for (const auto& c : comments_) out.line("# " + c);
    }
    out.finish();
  }

 private:
  ordered_json config_;
  std::vector<std::string> columns_;
  std::vector<std::string> csv_rows_;
  ordered_json json_rows_ = ordered_json::array();
  std::vector<std::string> comments_;
  ordered_json summary_;
};

ordered_json base_config(const char* command, const Common& c) {
  ordered_json cfg;
  cfg["command"] = command;
  cfg["seed"] = c.resolved_seed();
  cfg["rng_derivation_version"] = tg_rng_derivation_version();
  return cfg;
}

struct GraphHandle {
  tg_graph* g = nullptr;
  ~GraphHandle() { tg_graph_free(g); }
};

struct SpannerHandle {
  tg_spanner* s = nullptr;
  ~SpannerHandle() { tg_spanner_free(s); }
};

struct TrajectoryHandle {
  tg_trajectory* t = nullptr;
  ~TrajectoryHandle() { tg_trajectory_free(t); }
};

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  Common common;
  std::string model = "fnp";
  std::size_t n = 0;
  double p = 1.0;
  std::uint64_t stream = 0;
  std::size_t max_complete_n = 0;
};

int run_gen(const GenArgs& a) {
  tg_graph_model model;
  tg_model_parse(a.model.c_str(), &model);
  const std::uint64_t seed = a.common.resolved_seed();
  GraphHandle g;
  check(tg_graph_sample(model, a.n, a.p, seed, a.stream, a.max_complete_n, &g.g));
  ordered_json cfg = base_config("gen", a.common);
  cfg["model"] = a.model;
  cfg["n"] = a.n;
  cfg["p"] = model == TG_MODEL_COMPLETE ? 1.0 : a.p;
  cfg["stream"] = a.stream;
  Output out(a.common.out);
  out.line("# config " + cfg.dump());
  check(tg_graph_write(g.g, out.get()));
  return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  Common common;
  std::string property;
  std::string model = "fnp";
  std::size_t n = 0;
  std::vector<double> factors;
  std::vector<double> p_abs;
  bool coupled = false;
};

int run_sweep(const SweepArgs& a) {
  tg_property property;
  tg_graph_model model;
  tg_property_parse(a.property.c_str(), &property);
  tg_model_parse(a.model.c_str(), &model);
  const std::uint64_t seed = a.common.resolved_seed();
  const unsigned threads = a.common.resolved_threads();
  if (a.factors.empty() == a.p_abs.empty())
    throw UsageError("exactly one of --factors and --p-abs is required");
  if (a.coupled && !a.p_abs.empty())
    throw UsageError("--coupled needs a --factors grid");

  std::vector<tg_experiment_row> rows;
  if (!a.factors.empty()) {
    rows.resize(a.factors.size());
    check(tg_threshold_sweep(property, model, a.n, a.factors.data(), a.factors.size(),
                             a.common.trials, seed, threads, a.coupled, rows.data()));
  } else {
    for (std::size_t i = 0; i < a.p_abs.size(); ++i) {
      tg_experiment_row r{};
      check(tg_estimate_probability(property, model, a.n, a.p_abs[i], a.common.trials,
                                    tg_sweep_row_seed(seed, i), 0, threads, &r));
      rows.push_back(r);
    }
  }

  ordered_json cfg = base_config("sweep", a.common);
  cfg["property"] = a.property;
  cfg["model"] = a.model;
  cfg["n"] = a.n;
  if (!a.factors.empty()) cfg["factors"] = a.factors;
  else cfg["p_abs"] = a.p_abs;
  cfg["trials"] = a.common.trials;
  cfg["coupled"] = a.coupled;

  Table table(cfg, {"property", "model", "n", "p", "factor", "trials", "successes",
                    "estimate", "seed"});
  for (const auto& r : rows) {
    table.row({a.property, a.model, num(r.n), num(r.p), num(r.factor), num(r.trials),
               num(r.successes), num(r.estimate), num(r.seed)},
              {{"property", a.property},
               {"model", a.model},
               {"n", r.n},
               {"p", r.p},
               {"factor", r.factor},
               {"trials", r.trials},
               {"successes", r.successes},
               {"estimate", r.estimate},
               {"seed", r.seed}});
    const double half = 1.96 * std::sqrt(r.estimate * (1 - r.estimate) /
                                         static_cast<double>(r.trials));
    table.comment("wald95 factor=" + num(r.factor) + " lo=" +
                  num(std::max(0.0, r.estimate - half)) + " hi=" +
                  num(std::min(1.0, r.estimate + half)));
  }
  double crossing = 0, interpolated = 0;
  if (tg_crossing_point(rows.data(), rows.size(), &crossing, &interpolated)) {
    table.comment("crossing factor=" + num(crossing) + " interpolated=" + num(interpolated));
    table.summary()["crossing_factor"] = crossing;
    table.summary()["crossing_interpolated"] = interpolated;
  } else {
    table.comment("crossing none");
    table.summary()["crossing_factor"] = nullptr;
  }
  Output out(a.common.out);
  table.write(out, a.common.format);
  return 0;
}

// ---- gossip ----------------------------------------------------------------

struct GossipArgs {
  Common common;
  std::string model = "co";
  std::size_t n = 0;
  std::uint64_t call_cap = 0;
  bool diagnostics = false;
};

int run_gossip(const GossipArgs& a) {
  const tg_gossip_model model = a.model == "co" ? TG_GOSSIP_CO : TG_GOSSIP_ANY;
  const std::uint64_t seed = a.common.resolved_seed();
  ordered_json cfg = base_config("gossip", a.common);
  cfg["model"] = a.model;
  cfg["n"] = a.n;
  cfg["trials"] = a.common.trials;
  if (model == TG_GOSSIP_ANY) cfg["call_cap"] = a.call_cap;
  cfg["diagnostics"] = a.diagnostics;

  std::vector<std::string> columns = {"trial", "pair_exchange", "first_expert",
                                      "fixed_expert", "all_experts"};
  if (a.diagnostics) columns.push_back("pair_one_way");
  Table table(cfg, columns);

  auto cell = [](std::int64_t m) { return m < 0 ? std::string() : num(m); };
  auto jcell = [](std::int64_t m) { return m < 0 ? ordered_json(nullptr) : ordered_json(m); };

  double sums[4] = {0, 0, 0, 0};
  std::uint64_t counts[4] = {0, 0, 0, 0};
  std::uint64_t incomplete = 0;
  for (std::uint64_t t = 0; t < a.common.trials; ++t) {
    tg_milestones m{};
    check(tg_gossip_run(model, a.n, seed, t, a.call_cap, &m));
    const std::int64_t vals[4] = {m.pair_exchange, m.first_expert, m.fixed_expert,
                                  m.all_experts};
    for (int i = 0; i < 4; ++i) {
      if (vals[i] < 0) continue;
      sums[i] += static_cast<double>(vals[i]);
      ++counts[i];
    }
    if (m.all_experts < 0) ++incomplete;
    std::vector<std::string> cells = {num(t), cell(m.pair_exchange), cell(m.first_expert),
                                      cell(m.fixed_expert), cell(m.all_experts)};
    ordered_json jr = {{"trial", t},
                       {"pair_exchange", jcell(m.pair_exchange)},
                       {"first_expert", jcell(m.first_expert)},
                       {"fixed_expert", jcell(m.fixed_expert)},
                       {"all_experts", jcell(m.all_experts)}};
    if (a.diagnostics) {
      cells.push_back(cell(m.pair_one_way));
      jr["pair_one_way"] = jcell(m.pair_one_way);
    }
    table.row(cells, jr);
  }

  const double nn = static_cast<double>(a.n);
  const double nlogn = nn * std::log(nn);
  const double refs[4] = {0.5 * nlogn, nlogn, nlogn, 1.5 * nlogn};
  std::vector<std::string> mean_row = {"mean"}, ref_row = {"reference"};
  ordered_json means = ordered_json::object(), references = ordered_json::object();
  const char* names[4] = {"pair_exchange", "first_expert", "fixed_expert", "all_experts"};
  for (int i = 0; i < 4; ++i) {
    const double mean = counts[i] ? sums[i] / static_cast<double>(counts[i]) : NAN;
    mean_row.push_back(counts[i] ? num(mean) : std::string());
    ref_row.push_back(num(refs[i]));
    means[names[i]] = counts[i] ? ordered_json(mean) : ordered_json(nullptr);
    references[names[i]] = refs[i];
  }
  if (a.diagnostics) {
    mean_row.emplace_back();
    ref_row.emplace_back();
  }
  table.extra_row(mean_row);
  table.extra_row(ref_row);
  if (incomplete) table.comment("runs stopped at the call cap: " + num(incomplete));
  table.summary()["mean"] = means;
  table.summary()["reference"] = references;
  table.summary()["capped_runs"] = incomplete;
  Output out(a.common.out);
  table.write(out, a.common.format);
  return 0;
}

// ---- spanner ---------------------------------------------------------------

struct SpannerArgs {
  Common common;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> factor;
  std::string input;
  std::string certificate;
  std::size_t cap = 0;
  bool require_success = false;
};

int run_spanner(const SpannerArgs& a) {
  const std::uint64_t seed = a.common.resolved_seed();
  const bool from_file = !a.input.empty();
  if (!from_file && a.n == 0) throw UsageError("--n is required without --input");
  if (!from_file && !a.p && !a.factor) throw UsageError("one of --p and --factor is required");

  ordered_json cfg = base_config("spanner", a.common);

  std::vector<tg_spanner_summary> results;
  std::vector<std::size_t> ns;
  double p = 0;
  bool certificate_written = false;

  auto run_one = [&](const tg_graph* g) {
    SpannerHandle s;
    tg_spanner_summary summary{};
    const tg_status st = tg_spanner_build(g, p, a.cap, &s.s, &summary);
    if (st != TG_ERR_NO_GOOD_SQUARE) check(st);
    if (summary.found && !a.certificate.empty() && !certificate_written) {
      Output cert(a.certificate);
      check(tg_spanner_write(s.s, cert.get()));
      certificate_written = true;
    }
    results.push_back(summary);
    ns.push_back(tg_graph_vertex_count(g));
  };

  if (from_file) {
    GraphHandle g;
    check(tg_graph_read(a.input.c_str(), &g.g));
    p = a.p ? *a.p
            : a.factor ? tg_p_from_factor(tg_graph_vertex_count(g.g), *a.factor)
                       : tg_graph_window_end(g.g);
    cfg["input"] = a.input;
    run_one(g.g);
  } else {
    p = a.p ? *a.p : tg_p_from_factor(a.n, *a.factor);
    cfg["n"] = a.n;
    cfg["trials"] = a.common.trials;
    for (std::uint64_t t = 0; t < a.common.trials; ++t) {
      GraphHandle g;
      check(tg_graph_sample(TG_MODEL_FNP, a.n, p, seed, t, 0, &g.g));
      run_one(g.g);
    }
  }
  cfg["p"] = p;
  cfg["cap"] = a.cap;

  Table table(cfg, {"trial", "found", "square_w", "square_x", "square_y", "square_z",
                    "size", "verified"});
  std::size_t found = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const auto& r = results[t];
    found += r.found != 0;
    auto v = [&](std::uint32_t x) { return r.found ? num(x) : std::string(); };
    auto jv = [&](std::uint32_t x) { return r.found ? ordered_json(x) : ordered_json(nullptr); };
    table.row({num(t), num(r.found), v(r.w), v(r.x), v(r.y), v(r.z),
               num(r.found ? r.size : 0), num(r.verified)},
              {{"trial", t},
               {"found", r.found != 0},
               {"square_w", jv(r.w)},
               {"square_x", jv(r.x)},
               {"square_y", jv(r.y)},
               {"square_z", jv(r.z)},
               {"size", r.found ? r.size : 0},
               {"verified", r.verified != 0},
               {"squares_tested", r.squares_tested}});
  }
  table.comment("found " + num(found) + "/" + num(results.size()));
  if (!ns.empty()) table.comment("optimal size 2n-4 = " + num(2 * ns.front() - 4));
  table.summary()["found"] = found;
  table.summary()["trials"] = results.size();
  Output out(a.common.out);
  table.write(out, a.common.format);
  if (a.require_success && found < results.size())
    throw RuntimeFailure("no good square in " + num(results.size() - found) + " of " +
                         num(results.size()) + " runs");
  return 0;
}

// ---- trajectory ------------------------------------------------------------

struct TrajectoryArgs {
  Common common;
  std::size_t n = 0;
  std::size_t stride = 1;
  std::size_t max_complete_n = 0;
};

int run_trajectory(const TrajectoryArgs& a) {
  const std::uint64_t seed = a.common.resolved_seed();
  ordered_json cfg = base_config("trajectory", a.common);
  cfg["n"] = a.n;
  cfg["trials"] = a.common.trials;
  cfg["stride"] = a.stride;
  Table table(cfg, {"trial", "k", "y", "y_hat", "ref"});
  ordered_json stats = ordered_json::array();
  for (std::uint64_t t = 0; t < a.common.trials; ++t) {
    TrajectoryHandle h;
    check(tg_trajectory_run(a.n, seed, t, a.max_complete_n, &h.t));
    const std::size_t steps = tg_trajectory_steps(h.t);
    for (std::size_t k = 1; k <= steps; ++k) {
      if ((k - 1) % a.stride != 0 && k != steps) continue;
      double y, y_hat, ref;
      check(tg_trajectory_point(h.t, k, &y, &y_hat, &ref));
      table.row({num(t), num(k), num(y), num(y_hat), num(ref)},
                {{"trial", t}, {"k", k}, {"y", y}, {"y_hat", y_hat}, {"ref", ref}});
    }
    tg_trajectory_stats s{};
    tg_trajectory_stats_get(h.t, &s);
    table.comment("trial=" + num(t) + " deviation=" + num(s.deviation) +
                  " last_error=" + num(s.last_error) + " exact=" + num(s.exact) +
                  " below=" + num(s.below));
    stats.push_back({{"trial", t},
                     {"deviation", s.deviation},
                     {"last_error", s.last_error},
                     {"exact", s.exact != 0},
                     {"below", s.below != 0}});
  }
  table.summary()["trials"] = stats;
  Output out(a.common.out);
  table.write(out, a.common.format);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string input;
  std::string spanner;
};

int run_verify(const VerifyArgs& a) {
  GraphHandle g;
  check(tg_graph_read(a.input.c_str(), &g.g));
  int verified = 0;
  check(tg_verify_spanner_file(g.g, a.spanner.c_str(), &verified));
  Output out(a.common.out);
  out.line(verified ? "verified" : "not verified");
  out.finish();
  return verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random temporal graphs: reachability thresholds, foremost trees, "
               "optimal spanners and gossip"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a temporal graph in the text format");
  add_common(gen_cmd, gen.common, false, false);
  gen_cmd->add_option("--model", gen.model, "Graph model")
      ->capture_default_str()
      ->check(CLI::IsMember({"fnp", "complete", "poisson"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "Lifetime / edge probability")->capture_default_str();
  gen_cmd->add_option("--stream", gen.stream, "RNG stream id")->capture_default_str();
  gen_cmd->add_option("--max-complete-n", gen.max_complete_n,
                      "Largest n accepted by the complete model (0: library default)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate a property over a grid of p values");
  add_common(sweep_cmd, sweep.common, true, true);
  sweep_cmd->add_option("--property", sweep.property, "Property to estimate")
      ->required()
      ->transform(CLI::IsMember({"p2p", "first_source", "source", "connectivity",
                             "optimal_spanner", "two_hop_source"},
                            CLI::ignore_case));
  sweep_cmd->add_option("--model", sweep.model, "Graph model")
      ->capture_default_str()
      ->check(CLI::IsMember({"fnp", "poisson"}));
  sweep_cmd->add_option("--n", sweep.n, "Vertex count")->required();
  auto* factors = sweep_cmd->add_option("--factors", sweep.factors,
                                        "Comma-separated p values in units of ln n / n")
                      ->delimiter(',');
  auto* p_abs = sweep_cmd->add_option("--p-abs", sweep.p_abs, "Comma-separated absolute p values")
                    ->delimiter(',');
  factors->excludes(p_abs);
  sweep_cmd->add_flag("--coupled", sweep.coupled,
                      "Sample once per trial at the largest p and restrict to each grid point");
  sweep_cmd->add_option("--threads", sweep.common.threads,
                        "Worker threads (0: hardware concurrency)");

  GossipArgs gossip;
  auto* gossip_cmd = app.add_subcommand("gossip", "Gossip milestones under CO or ANY calls");
  add_common(gossip_cmd, gossip.common, true, true);
  gossip_cmd->add_option("--model", gossip.model, "Call model")
      ->capture_default_str()
      ->check(CLI::IsMember({"co", "any"}));
  gossip_cmd->add_option("--n", gossip.n, "Number of agents")->required();
  gossip_cmd->add_option("--call-cap", gossip.call_cap,
                         "Call cap for the ANY model (0: 10 n ln n)");
  gossip_cmd->add_flag("--diagnostics", gossip.diagnostics,
                       "Add the pair_one_way column");

  SpannerArgs spanner;
  auto* spanner_cmd = app.add_subcommand("spanner", "Build optimal temporal spanners");
  add_common(spanner_cmd, spanner.common, true, true);
  spanner_cmd->add_option("--n", spanner.n, "Vertex count for sampled F(n,p) graphs");
  auto* sp_p = spanner_cmd->add_option("--p", spanner.p, "Absolute p");
  auto* sp_f = spanner_cmd->add_option("--factor", spanner.factor, "p in units of ln n / n");
  sp_p->excludes(sp_f);
  spanner_cmd->add_option("--input", spanner.input, "Graph file in the text format")
      ->check(CLI::ExistingFile);
  spanner_cmd->add_option("--certificate", spanner.certificate,
                          "Write the first spanner found to this path");
  spanner_cmd->add_option("--cap", spanner.cap, "Candidate square cap (0: default)");
  spanner_cmd->add_flag("--require-success", spanner.require_success,
                        "Exit 1 if any run finds no good square");

  TrajectoryArgs traj;
  auto* traj_cmd = app.add_subcommand("trajectory", "Foremost-tree label trajectories on F(n,1)");
  add_common(traj_cmd, traj.common, true, true);
  traj_cmd->add_option("--n", traj.n, "Vertex count")->required();
  traj_cmd->add_option("--stride", traj.stride, "Emit every stride-th step")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  traj_cmd->add_option("--max-complete-n", traj.max_complete_n,
                       "Largest n accepted (0: library default)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a spanner file connects a graph");
  verify_cmd->add_option("--input", verify.input, "Graph file")->required();
  verify_cmd->add_option("--spanner", verify.spanner, "Spanner appearance file")->required();
  verify_cmd->add_option("--out", verify.common.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "tgraph: %s\n", e.what());
    return 2;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*gossip_cmd) return run_gossip(gossip);
    if (*spanner_cmd) return run_spanner(spanner);
    if (*traj_cmd) return run_trajectory(traj);
    if (*verify_cmd) return run_verify(verify);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "tgraph: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tgraph: %s\n", e.what());
    return 1;
  }
  return 2;
}
