/* C interface to the lagpath library. All strings are UTF-8 and
 * NUL-terminated. Strings returned through `char**` are owned by the caller
 * and released with lp_string_free. Handles are released with their *_free
 * function; passing NULL to a *_free function is a no-op. */
#ifndef LAGPATH_H
#define LAGPATH_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LAGPATH_BUILDING)
#    define LP_API __declspec(dllexport)
#  else
#    define LP_API __declspec(dllimport)
#  endif
#else
#  define LP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
  LP_OK = 0,
  LP_ERR_PARSE = 1,
  LP_ERR_DOMAIN = 2,
  LP_ERR_SHAPE = 3,
  LP_ERR_RESOURCE = 4,
  LP_ERR_ARITHMETIC = 5,
  LP_VERIFY_FAILED = 6, /* the report was produced but a check failed */
  LP_ERR_INVALID_ARG = 7,
  LP_ERR_INTERNAL = 8,
  LP_END = 9 /* enumeration exhausted */
} lp_status;

typedef enum lp_format { LP_FORMAT_JSON = 0, LP_FORMAT_CSV = 1 } lp_format;
typedef enum lp_order { LP_ORDER_M = 0, LP_ORDER_L = 1 } lp_order;

typedef struct lp_config lp_config;
typedef struct lp_path lp_path;
typedef struct lp_enum lp_enum;

/* Message of the last failed call on this thread; "" if none. */
LP_API const char* lp_last_error(void);
LP_API const char* lp_status_name(lp_status status);
LP_API const char* lp_version(void);
LP_API void lp_string_free(char* s);

/* Report settings. Defaults: JSON, 12 digits, 1 job, 1000000 paths,
 * canonical Lagrange route. */
LP_API lp_status lp_config_new(lp_config** out);
LP_API void lp_config_free(lp_config* cfg);
LP_API lp_status lp_config_set_format(lp_config* cfg, lp_format format);
LP_API lp_status lp_config_set_digits(lp_config* cfg, int digits);
LP_API lp_status lp_config_set_jobs(lp_config* cfg, unsigned jobs);
LP_API lp_status lp_config_set_max_paths(lp_config* cfg,
                                         unsigned long long max_paths);
/* Nonzero selects the shift-maximum route for Lagrange numbers. */
LP_API lp_status lp_config_set_direct(lp_config* cfg, int direct);

LP_API lp_status lp_path_parse(const char* text, lp_path** out);
LP_API lp_status lp_path_christoffel(int a, int b, lp_path** out);
LP_API void lp_path_free(lp_path* path);
LP_API lp_status lp_path_word(const lp_path* path, char** out);
LP_API lp_status lp_path_endpoint(const lp_path* path, int* a, int* b);
LP_API lp_status lp_path_is_below_diagonal(const lp_path* path, int* out);
LP_API lp_status lp_path_block_count(const lp_path* path, size_t* out);
LP_API lp_status lp_path_exchange(const lp_path* path, size_t block_index,
                                  lp_path** out);
/* Decimal string of M(w). */
LP_API lp_status lp_path_matching_number(const lp_path* path, char** out);
/* L(w) = sqrt(disc) / q as decimal strings. */
LP_API lp_status lp_path_lagrange(const lp_path* path, char** disc, char** q);
LP_API lp_status lp_path_snake_matchings(const lp_path* path, char** out);
/* *out is -1, 0 or 1. */
LP_API lp_status lp_path_compare(const lp_path* lhs, const lp_path* rhs,
                                 lp_order order, int* out);

/* Lexicographic stream over the below-diagonal paths to (a, b). */
LP_API lp_status lp_enum_open(int a, int b, lp_enum** out);
/* LP_END once exhausted, in which case *out is left untouched. */
LP_API lp_status lp_enum_next(lp_enum* it, lp_path** out);
LP_API void lp_enum_free(lp_enum* it);

/* Reports. cfg may be NULL for defaults. On LP_OK or LP_VERIFY_FAILED,
 * *out holds the rendered text. */
LP_API lp_status lp_report_path(const lp_config* cfg, const char* word,
                                char** out);
LP_API lp_status lp_report_enumerate(const lp_config* cfg, int a, int b,
                                     char** out);
LP_API lp_status lp_report_verify_max(const lp_config* cfg, int a, int b,
                                      char** out);
LP_API lp_status lp_report_hasse(const lp_config* cfg, int a, int b,
                                 lp_order order, int dot, char** out);
LP_API lp_status lp_report_snake(const lp_config* cfg, const char* word,
                                 int dot, char** out);
LP_API lp_status lp_report_markov_tree(const lp_config* cfg, int depth,
                                       char** out);
LP_API lp_status lp_report_markov_number(const lp_config* cfg, int a, int b,
                                         int depth, char** out);
LP_API lp_status lp_report_markov_identity(const lp_config* cfg, int a, int b,
                                           char** out);
LP_API lp_status lp_report_markov_slope(const lp_config* cfg, int a, int b,
                                        int a2, int b2, char** out);
LP_API lp_status lp_report_suplag(const lp_config* cfg, int n_max, char** out);
LP_API lp_status lp_report_classify(const lp_config* cfg, const char* w1,
                                    const char* w2, char** out);
LP_API lp_status lp_report_scan_classes(const lp_config* cfg, int a, int b,
                                        char** out);
/* block_index < 0 checks every applicable position. */
LP_API lp_status lp_report_exchange(const lp_config* cfg, const char* word,
                                    long block_index, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LAGPATH_H */
