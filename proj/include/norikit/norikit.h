#ifndef NORIKIT_NORIKIT_H
#define NORIKIT_NORIKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NK_API __declspec(dllexport)
#else
#define NK_API __attribute__((visibility("default")))
#endif

typedef enum nk_status {
  NK_OK = 0,
  NK_CHECK_FAILED = 1, /* a computation ran but an invariant failed */
  NK_ERR_INPUT = 2,    /* parse, validation or argument error */
  NK_ERR_IO = 3,
  NK_ERR_INTERNAL = 4
} nk_status;

typedef struct nk_representation nk_representation;

/* Message for the last failing call on this thread; never NULL. */
NK_API const char* nk_last_error(void);
NK_API const char* nk_version(void);

/* Strings returned through char** out parameters are owned by the caller. */
NK_API void nk_string_free(char* s);

NK_API nk_status nk_representation_parse(const char* json, nk_representation** out);
NK_API void nk_representation_free(nk_representation* rep);
NK_API size_t nk_representation_vertex_count(const nk_representation* rep);

NK_API nk_status nk_snf(const char* matrix_text, int json, char** out);
NK_API nk_status nk_end_algebra(const nk_representation* rep, int json, char** out);
NK_API nk_status nk_end_dimension(const nk_representation* rep, size_t* out);
NK_API nk_status nk_coalgebra(const nk_representation* rep, char** out);
NK_API nk_status nk_comodule(const nk_representation* rep, const char* module_json, int json,
                             char** out);
/* Returns NK_CHECK_FAILED (with the report in *out) when a check fails. */
NK_API nk_status nk_check(const nk_representation* rep, const char* suite, size_t size_bound,
                          int json, char** out);
NK_API nk_status nk_colimit(const char* chain_json, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif
