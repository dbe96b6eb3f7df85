#ifndef AMAP_AMAP_H
#define AMAP_AMAP_H

/*
 * C interface to the a-map library.  All objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Every call that can fail returns an amap_status; on failure the message is
 * available from amap_last_error() on the same thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(AMAP_BUILDING)
#define AMAP_API __attribute__((visibility("default")))
#else
#define AMAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amap_status {
    AMAP_OK = 0,
    AMAP_ERR_INVALID_ARGUMENT = 1,
    AMAP_ERR_PARSE = 2,
    AMAP_ERR_NOT_COPRIME = 3,
    AMAP_ERR_SIZE_LIMIT = 4,
    AMAP_ERR_INTERNAL = 5
} amap_status;

typedef struct amap_instance amap_instance;
typedef struct amap_report amap_report;

#define AMAP_DEFAULT_MAX_NODES 1000000u

AMAP_API const char * amap_version(void);
AMAP_API const char * amap_last_error(void);
AMAP_API const char * amap_status_name(amap_status s);

/* Instance from a JSON document {"domain": ..., "a": ..., "n": ...}. */
AMAP_API amap_status amap_instance_from_json(const char * json, amap_instance ** out);
/* Instance from command-line strings: domain "Z" | "poly:p[:k]" | "quad:d",
 * a and n as comma-separated integers, n_gens as "x,y;x,y" (quad only).
 * Unused arguments may be NULL. */
AMAP_API amap_status amap_instance_from_args(const char * domain, const char * a, const char * n,
                                             const char * n_gens, amap_instance ** out);
AMAP_API void amap_instance_free(amap_instance * inst);

/* Predicted graph.  With with_dot != 0 the report also carries DOT text. */
AMAP_API amap_status amap_predict(const amap_instance * inst, uint64_t max_nodes, int with_dot,
                                  amap_report ** out);
/* Brute-force graph of x -> a*x over all residues. */
AMAP_API amap_status amap_brute(const amap_instance * inst, uint64_t max_nodes, int with_dot,
                                amap_report ** out);
/* Both, compared by canonical code.  corrupt != 0 perturbs the prediction. */
AMAP_API amap_status amap_verify(const amap_instance * inst, uint64_t max_nodes, int corrupt,
                                 amap_report ** out);

AMAP_API amap_status amap_redei(uint64_t q, uint64_t n, uint64_t a, uint64_t max_nodes,
                                amap_report ** out);
AMAP_API amap_status amap_chebyshev(uint64_t q, uint64_t n, uint64_t max_nodes, amap_report ** out);
/* f given by coefficients (constant first) encoded as elements of F_q. */
AMAP_API amap_status amap_linearized(uint64_t q, uint64_t n, const int64_t * coeffs, size_t len,
                                     uint64_t max_nodes, amap_report ** out);
/* Generic trees from <pi^n - 1> and <pi^n + 1> in the order of Q(sqrt(d)). */
AMAP_API amap_status amap_ec_trees(int64_t d, int64_t ax, int64_t ay, int64_t pix, int64_t piy,
                                   unsigned n, amap_report ** out);
/* Elementary tree of a non-increasing sequence. */
AMAP_API amap_status amap_tree(const uint64_t * nu, size_t len, amap_report ** out);

/* Report JSON text; valid until the report is freed. */
AMAP_API const char * amap_report_json(const amap_report * r);
/* DOT text, or NULL when none was requested. */
AMAP_API const char * amap_report_dot(const amap_report * r);
/* 1 if the report's check passed (always 1 for predict, brute and tree). */
AMAP_API int amap_report_ok(const amap_report * r);
AMAP_API void amap_report_free(amap_report * r);

#ifdef __cplusplus
}
#endif

#endif
