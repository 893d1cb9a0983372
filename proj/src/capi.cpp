#include "tgraph/tgraph.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include "tgraph/core.hpp"
#include "tgraph/foremost.hpp"
#include "tgraph/gen.hpp"
#include "tgraph/gossip.hpp"
#include "tgraph/harness.hpp"
#include "tgraph/spanner.hpp"
#include "tgraph/text_io.hpp"

struct tg_graph {
  tgraph::TemporalGraph graph;
};

struct tg_spanner {
  std::size_t n;
  tgraph::SpannerCertificate certificate;
};

struct tg_trajectory {
  tgraph::Trajectory trajectory;
  std::vector<double> reference;
  tgraph::TrajectoryTrialStats stats;
};

namespace {

thread_local std::string last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

tg_status fail(tg_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename Body>
tg_status guarded(Body&& body) {
  try {
    body();
    return TG_OK;
  } catch (const tgraph::ContractError& e) {
    return fail(TG_ERR_CONTRACT, e.what());
  } catch (const tgraph::ResourceError& e) {
    return fail(TG_ERR_RESOURCE, e.what());
  } catch (const tgraph::NotSourceError& e) {
    return fail(TG_ERR_NOT_SOURCE, e.what());
  } catch (const tgraph::NoGoodSquareError& e) {
    return fail(TG_ERR_NO_GOOD_SQUARE, e.what());
  } catch (const tgraph::ParseError& e) {
    return fail(TG_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(TG_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TG_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(TG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TG_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw tgraph::ContractError(what);
}

tgraph::Property to_property(tg_property p) {
  require(p >= TG_PROP_P2P && p <= TG_PROP_TWO_HOP_SOURCE, "unknown property");
  return static_cast<tgraph::Property>(p);
}

tgraph::GraphModel to_sweep_model(tg_graph_model m) {
  if (m == TG_MODEL_FNP) return tgraph::GraphModel::kFnp;
  if (m == TG_MODEL_POISSON) return tgraph::GraphModel::kPoisson;
  throw tgraph::ContractError("sweeps support the fnp and poisson models");
}

tg_experiment_row to_row(const tgraph::ExperimentRow& r) {
  tg_experiment_row out{};
  out.property = static_cast<tg_property>(r.property);
  out.model = r.model == tgraph::GraphModel::kFnp ? TG_MODEL_FNP : TG_MODEL_POISSON;
  out.n = r.n;
  out.p = r.p;
  out.factor = r.factor;
  out.trials = r.trials;
  out.successes = r.successes;
  out.estimate = r.estimate;
  out.seed = r.seed;
  out.wall_time_ms = r.wall_time_ms;
  return out;
}

// Formats into a string and hands it to stdio in large chunks.
template <typename Writer>
void write_to(FILE* out, Writer&& write) {
  require(out != nullptr, "null FILE*");
  std::ostringstream os;
  write(os);
  const std::string text = os.str();
  if (std::fwrite(text.data(), 1, text.size(), out) != text.size() ||
      std::fflush(out) != 0)
    throw IoError("write failed");
}

std::ifstream open_input(const char* path) {
  require(path != nullptr, "null path");
  std::ifstream in(path);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  return in;
}

std::int64_t milestone(const std::optional<std::uint64_t>& m) {
  return m ? static_cast<std::int64_t>(*m) : -1;
}

}  // namespace

extern "C" {

const char* tg_last_error(void) { return last_error.c_str(); }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_ERR_CONTRACT: return "contract violation";
    case TG_ERR_RESOURCE: return "resource limit";
    case TG_ERR_NOT_SOURCE: return "not a temporal source";
    case TG_ERR_NO_GOOD_SQUARE: return "no good square";
    case TG_ERR_PARSE: return "parse error";
    case TG_ERR_IO: return "i/o error";
    case TG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int tg_rng_derivation_version(void) { return tgraph::kRngDerivationVersion; }

int tg_property_parse(const char* name, tg_property* out) {
  if (!name || !out) return -1;
  auto p = tgraph::parse_property(name);
  if (!p) return -1;
  *out = static_cast<tg_property>(*p);
  return 0;
}

const char* tg_property_name(tg_property property) {
  if (property < TG_PROP_P2P || property > TG_PROP_TWO_HOP_SOURCE) return "unknown";
  return tgraph::to_string(static_cast<tgraph::Property>(property)).data();
}

int tg_model_parse(const char* name, tg_graph_model* out) {
  if (!name || !out) return -1;
  const std::string s = name;
  if (s == "fnp") *out = TG_MODEL_FNP;
  else if (s == "complete") *out = TG_MODEL_COMPLETE;
  else if (s == "poisson") *out = TG_MODEL_POISSON;
  else return -1;
  return 0;
}

const char* tg_model_name(tg_graph_model model) {
  switch (model) {
    case TG_MODEL_FNP: return "fnp";
    case TG_MODEL_COMPLETE: return "complete";
    case TG_MODEL_POISSON: return "poisson";
  }
  return "unknown";
}

double tg_p_from_factor(size_t n, double factor) {
  return tgraph::p_from_factor(n, factor);
}

tg_status tg_graph_sample(tg_graph_model model, size_t n, double p,
                          uint64_t seed, uint64_t stream, size_t complete_cap,
                          tg_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    tgraph::RngStream rng(seed, stream);
    tgraph::TemporalGraph g;
    switch (model) {
      case TG_MODEL_FNP: g = tgraph::sample_fnp(n, p, rng); break;
      case TG_MODEL_COMPLETE:
        g = tgraph::sample_complete(
            n, rng, complete_cap ? complete_cap : tgraph::kDefaultCompleteCap);
        break;
      case TG_MODEL_POISSON: g = tgraph::sample_poisson(n, p, rng); break;
      default: throw tgraph::ContractError("unknown graph model");
    }
    *out = new tg_graph{std::move(g)};
  });
}

tg_status tg_graph_read(const char* path, tg_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    auto in = open_input(path);
    *out = new tg_graph{tgraph::read_graph(in)};
  });
}

tg_status tg_graph_write(const tg_graph* g, FILE* out) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    write_to(out, [&](std::ostream& os) { tgraph::write_graph(os, g->graph); });
  });
}

void tg_graph_free(tg_graph* g) { delete g; }

size_t tg_graph_vertex_count(const tg_graph* g) { return g ? g->graph.n() : 0; }
size_t tg_graph_edge_count(const tg_graph* g) { return g ? g->graph.edge_count() : 0; }
size_t tg_graph_appearance_count(const tg_graph* g) {
  return g ? g->graph.appearance_count() : 0;
}
double tg_graph_window_end(const tg_graph* g) { return g ? g->graph.window().end : 0.0; }

tg_status tg_graph_is_source(const tg_graph* g, uint32_t v, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = tgraph::is_temporal_source(g->graph, v);
  });
}

tg_status tg_graph_is_sink(const tg_graph* g, uint32_t v, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = tgraph::is_temporal_sink(g->graph, v);
  });
}

tg_status tg_graph_is_connected(const tg_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = tgraph::is_temporally_connected(g->graph);
  });
}

tg_status tg_verify_spanner_file(const tg_graph* g, const char* spanner_path,
                                 int* verified) {
  return guarded([&] {
    require(g && verified, "null argument");
    auto in = open_input(spanner_path);
    const auto appearances = tgraph::read_appearances(in);
    *verified = tgraph::verify_spanner(g->graph, appearances);
  });
}

tg_status tg_spanner_build(const tg_graph* g, double p, size_t cap,
                           tg_spanner** out, tg_spanner_summary* summary) {
  return guarded([&] {
    require(g && out && summary, "null argument");
    *out = nullptr;
    *summary = tg_spanner_summary{};
    try {
      auto cert = tgraph::build_optimal_spanner(
          g->graph, p, cap ? cap : tgraph::kDefaultSquareCap);
      summary->found = 1;
      summary->w = cert.pivot.w;
      summary->x = cert.pivot.x;
      summary->y = cert.pivot.y;
      summary->z = cert.pivot.z;
      summary->p1 = cert.windows.p1;
      summary->p2 = cert.windows.p2;
      summary->p3 = cert.windows.p3;
      summary->size = cert.appearances.size();
      summary->verified = cert.verified;
      summary->squares_tested = cert.squares_tested;
      *out = new tg_spanner{g->graph.n(), std::move(cert)};
    } catch (const tgraph::NoGoodSquareError& e) {
      summary->squares_tested = e.squares_tested();
      summary->cap_hit = e.cap_hit();
      throw;
    }
  });
}

tg_status tg_spanner_write(const tg_spanner* s, FILE* out) {
  return guarded([&] {
    require(s != nullptr, "null spanner");
    write_to(out, [&](std::ostream& os) {
      tgraph::write_appearances(os, s->n, s->certificate.appearances);
    });
  });
}

void tg_spanner_free(tg_spanner* s) { delete s; }

tg_status tg_gossip_run(tg_gossip_model model, size_t n, uint64_t seed,
                        uint64_t trial, uint64_t call_cap, tg_milestones* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(n >= 2, "gossip needs at least 2 agents");
    tgraph::RngStream rng(seed, trial);
    tgraph::GossipMilestones m;
    if (model == TG_GOSSIP_CO) {
      m = tgraph::co_milestones(n, rng);
    } else if (model == TG_GOSSIP_ANY) {
      m = tgraph::any_milestones(n, rng,
                                 call_cap ? call_cap : tgraph::default_call_cap(n));
    } else {
      throw tgraph::ContractError("unknown gossip model");
    }
    *out = tg_milestones{milestone(m.pair_exchange), milestone(m.pair_one_way),
                         milestone(m.first_expert),  milestone(m.fixed_expert),
                         milestone(m.all_experts),   m.calls};
  });
}

tg_status tg_estimate_probability(tg_property property, tg_graph_model model,
                                  size_t n, double p, uint64_t trials,
                                  uint64_t seed, uint64_t first_trial,
                                  unsigned threads, tg_experiment_row* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = to_row(tgraph::estimate_probability(to_property(property),
                                               to_sweep_model(model), n, p, trials,
                                               seed, first_trial, threads));
  });
}

tg_status tg_threshold_sweep(tg_property property, tg_graph_model model,
                             size_t n, const double* factors, size_t count,
                             uint64_t trials, uint64_t seed, unsigned threads,
                             int coupled, tg_experiment_row* rows_out) {
  return guarded([&] {
    require(factors && rows_out && count > 0, "empty sweep grid");
    tgraph::SweepGrid grid{std::vector<double>(factors, factors + count)};
    const auto rows =
        tgraph::threshold_sweep(to_property(property), to_sweep_model(model), n,
                                grid, trials, seed, threads, coupled != 0);
    for (std::size_t i = 0; i < rows.size(); ++i) rows_out[i] = to_row(rows[i]);
  });
}

uint64_t tg_sweep_row_seed(uint64_t seed, size_t index) {
  return tgraph::sweep_row_seed(seed, index);
}

int tg_crossing_point(const tg_experiment_row* rows, size_t count,
                      double* factor, double* interpolated) {
  if (!rows || !factor || !interpolated) return 0;
  std::vector<tgraph::ExperimentRow> copy(count);
  for (std::size_t i = 0; i < count; ++i) {
    copy[i].factor = rows[i].factor;
    copy[i].estimate = rows[i].estimate;
  }
  const auto c = tgraph::crossing_point(copy);
  if (!c.factor) return 0;
  *factor = *c.factor;
  *interpolated = *c.interpolated;
  return 1;
}

tg_status tg_trajectory_run(size_t n, uint64_t seed, uint64_t trial, size_t cap,
                            tg_trajectory** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    require(n >= 3, "trajectories need n >= 3");
    auto t = tgraph::trajectory_trial(n, seed, trial,
                                      cap ? cap : tgraph::kDefaultCompleteCap);
    std::vector<double> ref(t.y.size());
    double sum = 0.0;
    const double nn = static_cast<double>(n);
    for (std::size_t k = 1; k <= ref.size(); ++k) {
      const double kk = static_cast<double>(k);
      sum += 1.0 / (kk * (nn - kk) + 1.0);
      ref[k - 1] = sum;
    }
    auto stats = tgraph::trajectory_stats(t);
    *out = new tg_trajectory{std::move(t), std::move(ref), stats};
  });
}

size_t tg_trajectory_steps(const tg_trajectory* t) {
  return t ? t->trajectory.y.size() : 0;
}

tg_status tg_trajectory_point(const tg_trajectory* t, size_t k, double* y,
                              double* y_hat, double* ref) {
  return guarded([&] {
    require(t && y && y_hat && ref, "null argument");
    require(k >= 1 && k <= t->trajectory.y.size(), "step out of range");
    *y = t->trajectory.y[k - 1];
    *y_hat = t->trajectory.y_hat[k - 1];
    *ref = t->reference[k - 1];
  });
}

void tg_trajectory_stats_get(const tg_trajectory* t, tg_trajectory_stats* out) {
  if (!t || !out) return;
  *out = tg_trajectory_stats{t->stats.deviation, t->stats.last_error,
                             t->stats.exact ? 1 : 0, t->stats.below ? 1 : 0};
}

void tg_trajectory_free(tg_trajectory* t) { delete t; }

}  // extern "C"
