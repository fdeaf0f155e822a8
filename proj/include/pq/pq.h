/* C interface to the pq library. All results are returned as JSON documents in
 * strings owned by the caller (release with pq_string_free); rationals appear
 * as "num/den" strings. Functions return PQ_OK or an error code and leave a
 * message in pq_last_error() for the calling thread. */
#ifndef PQ_PQ_H
#define PQ_PQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef PQ_BUILDING_LIBRARY
#    define PQ_API __declspec(dllexport)
#  else
#    define PQ_API __declspec(dllimport)
#  endif
#else
#  define PQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pq_family pq_family;
typedef struct pq_points pq_points;

typedef enum pq_status {
  PQ_OK = 0,
  PQ_ERR_INVALID_ARGUMENT = 1,
  PQ_ERR_PARSE = 2,
  PQ_ERR_PRECONDITION = 3,
  PQ_ERR_BUDGET = 4,
  PQ_ERR_VERIFICATION = 5,
  PQ_ERR_IO = 6,
  PQ_ERR_INTERNAL = 7
} pq_status;

typedef struct pq_options {
  uint64_t max_subsets; /* cap on enumerated subfamilies */
  uint64_t max_work;    /* cap on other search nodes */
  unsigned repair_cap;  /* weak-net repair iterations */
  unsigned threads;
} pq_options;

/* Counters of the last budgeted call; either pointer argument may be NULL. */
typedef struct pq_usage {
  uint64_t subsets_used;
  uint64_t work_used;
} pq_usage;

typedef struct pq_gen_spec {
  const char* kind; /* crossing-segments, disjoint, concentric, segments-plus-boxes,
                       random-polygons, disc-polygons, grid-points */
  int n;
  int p;
  int q;
  int grid;
  int vertices;
  int radius;
  int max_weight;
  int strips;
  uint64_t seed;
} pq_gen_spec;

typedef enum pq_pierce_mode {
  PQ_PIERCE_EXACT = 0,
  PQ_PIERCE_GREEDY = 1,
  PQ_PIERCE_PIPELINE = 2
} pq_pierce_mode;

PQ_API const char* pq_version(void);
PQ_API const char* pq_last_error(void);
PQ_API const char* pq_status_name(pq_status status);
PQ_API void pq_options_default(pq_options* out);
PQ_API void pq_gen_spec_default(pq_gen_spec* out);
PQ_API void pq_string_free(char* s);

/* Families and point sets (file formats "pq-family" and "pq-points"). */
PQ_API pq_status pq_family_load(const char* path, pq_family** out);
PQ_API pq_status pq_family_parse(const char* text, size_t len, pq_family** out);
PQ_API void pq_family_free(pq_family* f);
PQ_API size_t pq_family_size(const pq_family* f);
PQ_API pq_status pq_family_to_json(const pq_family* f, char** out);

PQ_API pq_status pq_points_load(const char* path, pq_points** out);
PQ_API pq_status pq_points_parse(const char* text, size_t len, pq_points** out);
PQ_API void pq_points_free(pq_points* p);
PQ_API size_t pq_points_size(const pq_points* p);
PQ_API pq_status pq_points_to_json(const pq_points* p, char** out);

/* Emits a family or points file. */
PQ_API pq_status pq_gen(const pq_gen_spec* spec, char** out_file);

/* Intersection graph and k-tuple counts for k = 1..k_max (0: all). */
PQ_API pq_status pq_analyze(const pq_family* f, int k_max, const pq_options* opt, char** out,
                            pq_usage* usage);
PQ_API pq_status pq_pq_check(const pq_family* f, int p, int q, const pq_options* opt, char** out,
                             pq_usage* usage);
PQ_API pq_status pq_dichotomy(const pq_family* f, int p, int q, int p_small, int q_small,
                              const pq_options* opt, char** out, pq_usage* usage);
/* p and q are used by the pipeline only. */
PQ_API pq_status pq_pierce(const pq_family* f, pq_pierce_mode mode, int p, int q,
                           const pq_options* opt, char** out, pq_usage* usage);
PQ_API pq_status pq_lp(const pq_family* f, char** out);
/* eps is a rational string such as "1/3". */
PQ_API pq_status pq_net(const pq_points* pts, const char* eps, const pq_options* opt, char** out,
                        pq_usage* usage);
/* eps may be NULL; it enables the large-q regime test. */
PQ_API pq_status pq_bounds(int p, int q, int d, const char* eps, char** out);
PQ_API pq_status pq_maxclique(const pq_family* f, int compute_exact, char** out);
/* Union complexity; with k >= 3 also the union condition over k-subfamilies. */
PQ_API pq_status pq_union(const pq_family* f, int k, const pq_options* opt, char** out,
                          pq_usage* usage);
PQ_API pq_status pq_exactly_two_union(const pq_family* f, const pq_options* opt, char** out,
                            pq_usage* usage);
PQ_API pq_status pq_triple_forcing(const pq_family* f, int p, int k, const pq_options* opt, char** out,
                            pq_usage* usage);

/* Acceptance suite; criterion 0 runs all. Result has "all_passed". */
PQ_API pq_status pq_verify_all(int criterion, const pq_options* opt, char** out);

/* Lowercase hex SHA-256 of the bytes. */
PQ_API pq_status pq_digest(const void* data, size_t len, char** out_hex);

#ifdef __cplusplus
}
#endif

#endif /* PQ_PQ_H */
