/*
 * C interface to the tgraph library: random temporal graphs, foremost trees,
 * optimal temporal spanners, gossip simulation and Monte Carlo sweeps.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a tg_status; on failure tg_last_error() holds a
 * one-line message for the calling thread until its next failing call.
 */
#ifndef TGRAPH_H
#define TGRAPH_H

#include <stddef.h>
#include <stdint.h>
#include <stdio.h>

#if defined(_WIN32)
#  if defined(TGRAPH_BUILDING)
#    define TG_API __declspec(dllexport)
#  else
#    define TG_API __declspec(dllimport)
#  endif
#else
#  define TG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_CONTRACT = 1,       /* precondition or argument out of range */
  TG_ERR_RESOURCE = 2,       /* size cap exceeded */
  TG_ERR_NOT_SOURCE = 3,     /* tree root is not a temporal source / sink */
  TG_ERR_NO_GOOD_SQUARE = 4, /* optimal spanner search failed */
  TG_ERR_PARSE = 5,          /* malformed text input */
  TG_ERR_IO = 6,             /* file could not be opened or written */
  TG_ERR_INTERNAL = 7
} tg_status;

typedef enum tg_graph_model {
  TG_MODEL_FNP = 0,      /* F(n,p): Bernoulli(p) edges, one uniform label on [0,p] */
  TG_MODEL_COMPLETE = 1, /* F(n,1) */
  TG_MODEL_POISSON = 2   /* H(n,p): rate-1 Poisson labels on every pair, [0,p] */
} tg_graph_model;

typedef enum tg_property {
  TG_PROP_P2P = 0,
  TG_PROP_FIRST_SOURCE = 1,
  TG_PROP_SOURCE = 2,
  TG_PROP_CONNECTIVITY = 3,
  TG_PROP_OPTIMAL_SPANNER = 4,
  TG_PROP_TWO_HOP_SOURCE = 5
} tg_property;

typedef enum tg_gossip_model { TG_GOSSIP_CO = 0, TG_GOSSIP_ANY = 1 } tg_gossip_model;

typedef struct tg_graph tg_graph;
typedef struct tg_spanner tg_spanner;
typedef struct tg_trajectory tg_trajectory;

TG_API const char* tg_last_error(void);
TG_API const char* tg_status_name(tg_status status);
TG_API int tg_rng_derivation_version(void);
/* 0 on success, -1 for an unknown name. */
TG_API int tg_property_parse(const char* name, tg_property* out);
TG_API const char* tg_property_name(tg_property property);
TG_API int tg_model_parse(const char* name, tg_graph_model* out);
TG_API const char* tg_model_name(tg_graph_model model);
/* factor * ln n / n */
TG_API double tg_p_from_factor(size_t n, double factor);

/* ---- graphs ------------------------------------------------------------ */

/* complete_cap bounds n for TG_MODEL_COMPLETE; 0 selects the default. */
TG_API tg_status tg_graph_sample(tg_graph_model model, size_t n, double p,
                                 uint64_t seed, uint64_t stream,
                                 size_t complete_cap, tg_graph** out);
TG_API tg_status tg_graph_read(const char* path, tg_graph** out);
/* Writes the `n <count>` / `u v t` text form. */
TG_API tg_status tg_graph_write(const tg_graph* g, FILE* out);
TG_API void tg_graph_free(tg_graph* g);

TG_API size_t tg_graph_vertex_count(const tg_graph* g);
TG_API size_t tg_graph_edge_count(const tg_graph* g);
TG_API size_t tg_graph_appearance_count(const tg_graph* g);
TG_API double tg_graph_window_end(const tg_graph* g);

TG_API tg_status tg_graph_is_source(const tg_graph* g, uint32_t v, int* out);
TG_API tg_status tg_graph_is_sink(const tg_graph* g, uint32_t v, int* out);
TG_API tg_status tg_graph_is_connected(const tg_graph* g, int* out);

/* Reads `u v t` appearances from spanner_path and checks that they alone
 * temporally connect g. Appearances missing from g give TG_ERR_CONTRACT. */
TG_API tg_status tg_verify_spanner_file(const tg_graph* g,
                                        const char* spanner_path,
                                        int* verified);

/* ---- optimal spanner --------------------------------------------------- */

typedef struct tg_spanner_summary {
  int found;
  uint32_t w, x, y, z;
  double p1, p2, p3;
  size_t size;
  int verified;
  size_t squares_tested;
  int cap_hit;
} tg_spanner_summary;

/* On TG_ERR_NO_GOOD_SQUARE the summary is filled with found = 0 and *out is
 * left NULL. cap 0 selects the default candidate cap. */
TG_API tg_status tg_spanner_build(const tg_graph* g, double p, size_t cap,
                                  tg_spanner** out, tg_spanner_summary* summary);
/* Certificate appearances in the graph text form. */
TG_API tg_status tg_spanner_write(const tg_spanner* s, FILE* out);
TG_API void tg_spanner_free(tg_spanner* s);

/* ---- gossip ------------------------------------------------------------ */

typedef struct tg_milestones {
  /* 1-based call indices, -1 when not reached */
  int64_t pair_exchange;
  int64_t pair_one_way;
  int64_t first_expert;
  int64_t fixed_expert;
  int64_t all_experts;
  uint64_t calls;
} tg_milestones;

/* One run on stream (seed, trial). call_cap applies to TG_GOSSIP_ANY;
 * 0 selects 10 n ln n. */
TG_API tg_status tg_gossip_run(tg_gossip_model model, size_t n, uint64_t seed,
                               uint64_t trial, uint64_t call_cap,
                               tg_milestones* out);

/* ---- Monte Carlo harness ----------------------------------------------- */

typedef struct tg_experiment_row {
  tg_property property;
  tg_graph_model model;
  size_t n;
  double p;
  double factor;
  uint64_t trials;
  uint64_t successes;
  double estimate;
  uint64_t seed;
  int64_t wall_time_ms;
} tg_experiment_row;

TG_API tg_status tg_estimate_probability(tg_property property,
                                         tg_graph_model model, size_t n,
                                         double p, uint64_t trials,
                                         uint64_t seed, uint64_t first_trial,
                                         unsigned threads,
                                         tg_experiment_row* out);

/* rows_out must hold `count` rows. */
TG_API tg_status tg_threshold_sweep(tg_property property, tg_graph_model model,
                                    size_t n, const double* factors,
                                    size_t count, uint64_t trials,
                                    uint64_t seed, unsigned threads,
                                    int coupled, tg_experiment_row* rows_out);
TG_API uint64_t tg_sweep_row_seed(uint64_t seed, size_t index);
/* Smallest factor with estimate >= 0.5 and its linear interpolation between
 * the bracketing rows. Returns 0 when no row reaches 0.5. */
TG_API int tg_crossing_point(const tg_experiment_row* rows, size_t count,
                             double* factor, double* interpolated);

/* ---- foremost-tree trajectories ---------------------------------------- */

typedef struct tg_trajectory_stats {
  double deviation;
  double last_error;
  int exact;
  int below;
} tg_trajectory_stats;

/* cap 0 selects the default complete-graph cap. */
TG_API tg_status tg_trajectory_run(size_t n, uint64_t seed, uint64_t trial,
                                   size_t cap, tg_trajectory** out);
/* n - 1 */
TG_API size_t tg_trajectory_steps(const tg_trajectory* t);
/* k in 1..steps */
TG_API tg_status tg_trajectory_point(const tg_trajectory* t, size_t k,
                                     double* y, double* y_hat, double* ref);
TG_API void tg_trajectory_stats_get(const tg_trajectory* t,
                                    tg_trajectory_stats* out);
TG_API void tg_trajectory_free(tg_trajectory* t);

#ifdef __cplusplus
}
#endif

#endif /* TGRAPH_H */
