#ifndef F2V_F2V_H
#define F2V_F2V_H

/* C interface to the F2 eight-vertex library.
 *
 * Handles are opaque. Every function returns an f2v_status; on failure
 * f2v_last_error() describes the problem for the calling thread. Strings
 * returned through char** outputs are owned by the caller and released with
 * f2v_string_free. Probabilities are reported exactly as numerator / 2^exp. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(F2V_BUILDING_LIBRARY)
#    define F2V_API __declspec(dllexport)
#  else
#    define F2V_API __declspec(dllimport)
#  endif
#else
#  define F2V_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum f2v_status {
  F2V_OK = 0,
  F2V_ERR_INVALID_ARGUMENT = 1,
  F2V_ERR_PARSE = 2,
  F2V_ERR_SHAPE = 3,
  F2V_ERR_SINGULAR = 4,
  F2V_ERR_INVALID_MODEL = 5,
  F2V_ERR_CAP_EXCEEDED = 6,
  F2V_ERR_DUPLICATE_EDGE = 7,
  F2V_ERR_OUT_OF_RANGE = 8,
  F2V_ERR_INTERNAL = 9
} f2v_status;

typedef struct f2v_model f2v_model;
typedef struct f2v_engine f2v_engine;

typedef struct f2v_edge {
  uint32_t b2;
  uint32_t b3;
} f2v_edge;

typedef struct f2v_probability {
  int64_t numerator;
  uint32_t log2_denominator;
} f2v_probability;

F2V_API const char* f2v_version(void);
F2V_API const char* f2v_last_error(void);
F2V_API const char* f2v_status_name(f2v_status status);
F2V_API void f2v_string_free(char* s);

/* encoding: nine '0'/'1' characters, row-major a11..a33. */
F2V_API f2v_status f2v_model_create(const char* encoding, f2v_model** out);
F2V_API void f2v_model_destroy(f2v_model* model);
/* Writes the class tag (TwelveClass, TwentySixClass, Other, DeltaZero). */
F2V_API f2v_status f2v_model_class(const f2v_model* model, char** out);
F2V_API f2v_status f2v_model_analyze_json(const f2v_model* model, char** out);
F2V_API f2v_status f2v_model_transform_json(const f2v_model* model, unsigned n, unsigned max_n, char** out);

/* Engine for face-1 correlation queries at level n; requires a valid model.
 * A max_n of 0 selects the default level cap here and below. */
F2V_API f2v_status f2v_engine_create(const f2v_model* model, unsigned n, unsigned max_n, f2v_engine** out);
F2V_API void f2v_engine_destroy(f2v_engine* engine);
F2V_API f2v_status f2v_correlate(const f2v_engine* engine, const f2v_edge* edges, size_t count, f2v_probability* out);

F2V_API f2v_status f2v_oracle_probability(const f2v_model* model, unsigned n, unsigned max_n, const f2v_edge* edges,
                                          size_t count, f2v_probability* out);
F2V_API f2v_status f2v_predict(unsigned n, const f2v_edge* edges, size_t count, f2v_probability* out);

/* n_min / n_max of 0 select the suite default. *passed is 1 iff every check passed. */
F2V_API f2v_status f2v_verify_suite(const char* suite, unsigned n_min, unsigned n_max, unsigned jobs,
                                    const char* matrix, unsigned max_n, int* passed, char** report_json);
F2V_API f2v_status f2v_scan(const char* class_name, unsigned n, unsigned jobs, unsigned max_n, int* passed,
                            char** report_json);

#ifdef __cplusplus
}
#endif

#endif
