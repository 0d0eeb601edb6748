/* C interface to the rankforge rating engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions that can fail return an rf_status; the
 * message for the most recent failure on the calling thread is available from
 * rf_last_error(). Status values double as the CLI exit codes. */
#ifndef RANKFORGE_RANKFORGE_H
#define RANKFORGE_RANKFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RANKFORGE_BUILDING)
#define RF_API __declspec(dllexport)
#else
#define RF_API __declspec(dllimport)
#endif
#else
#define RF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_INTERNAL = 1,
  RF_ERR_PARSE = 2,
  RF_ERR_DISCONNECTED = 3,
  RF_ERR_NO_CONVERGENCE = 4,
  RF_ERR_INVALID_CONFIG = 5
} rf_status;

typedef struct rf_match_list rf_match_list;
typedef struct rf_digraph rf_digraph;
typedef struct rf_config rf_config;
typedef struct rf_report rf_report;

RF_API const char* rf_version(void);
RF_API const char* rf_last_error(void);
/* Name of the library error behind the last failure, e.g. "DisconnectedGraph". */
RF_API const char* rf_last_error_kind(void);

/* Match lists: CSV with header day,team_a,team_b,score_a,score_b. */
RF_API rf_status rf_match_list_parse_csv(const char* text, rf_match_list** out);
RF_API void rf_match_list_free(rf_match_list* list);
RF_API size_t rf_match_list_team_count(const rf_match_list* list);
RF_API size_t rf_match_list_match_count(const rf_match_list* list);
/* Borrowed pointer, valid while the list lives; NULL when out of range. */
RF_API const char* rf_match_list_team_name(const rf_match_list* list, size_t index);
RF_API rf_status rf_match_list_to_csv(const rf_match_list* list, char** out);

/* Weighted digraphs: CSV with header source,target,weight. */
RF_API rf_status rf_digraph_parse_csv(const char* text, rf_digraph** out);
RF_API void rf_digraph_free(rf_digraph* graph);
RF_API size_t rf_digraph_node_count(const rf_digraph* graph);
RF_API size_t rf_digraph_edge_count(const rf_digraph* graph);
RF_API size_t rf_digraph_self_loops_dropped(const rf_digraph* graph);

/* Configuration. Keys: method, smoothing, tol, max-iter, kappa, zeta,
 * init-rating, output, seed, input. Bad keys or values give
 * RF_ERR_INVALID_CONFIG. */
RF_API rf_config* rf_config_new(void);
RF_API void rf_config_free(rf_config* config);
RF_API rf_status rf_config_set(rf_config* config, const char* key, const char* value);
/* Borrowed; "json", "csv" or "table". */
RF_API const char* rf_config_output(const rf_config* config);

RF_API rf_status rf_rate(const rf_match_list* list, const rf_config* config,
                         rf_report** out);
RF_API rf_status rf_graph_check(const rf_match_list* list, rf_report** out);
RF_API rf_status rf_network_rate(const rf_digraph* graph, const rf_config* config,
                                 rf_report** out);
/* Uses the config's seed when set. */
RF_API rf_status rf_simulate(size_t teams, size_t trials, const rf_config* config,
                             rf_report** out);

RF_API void rf_report_free(rf_report* report);
RF_API size_t rf_report_team_count(const rf_report* report);
/* Copies column `name` (rating, r1, r2, o, d) into buf[0..len). */
RF_API rf_status rf_report_vector(const rf_report* report, const char* name,
                                  double* buf, size_t len);
RF_API rf_status rf_report_scalar(const rf_report* report, const char* name,
                                  double* out);
/* format: "json", "csv" or "table". Release *out with rf_string_free. */
RF_API rf_status rf_report_render(const rf_report* report, const char* format,
                                  char** out);
RF_API void rf_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* RANKFORGE_RANKFORGE_H */
