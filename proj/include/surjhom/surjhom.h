#ifndef SURJHOM_H
#define SURJHOM_H

#include <stddef.h>

#if defined(__GNUC__)
#define SH_API __attribute__((visibility("default")))
#else
#define SH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sh_digraph sh_digraph;

typedef enum {
    SH_OK = 0,
    SH_NO_WITNESS = 1,
    SH_INVALID_INPUT = 2,
    SH_SIZE_BOUND = 3,
    SH_PRECONDITION = 4,
    SH_INTERNAL = 5
} sh_status;

/* Message of the last failing call on this thread ("" if none). */
SH_API const char * sh_last_error(void);

/* Every char ** out result is a NUL-terminated JSON document owned by the
   caller; release it with sh_string_free. On failure *out is NULL. */
SH_API void sh_string_free(char * s);

/* source: a file path (JSON or plain text) or "bundled:<name>". */
SH_API sh_status sh_digraph_load(const char * source, sh_digraph ** out);
/* JSON or plain-text digraph held in memory. */
SH_API sh_status sh_digraph_parse(const char * text, sh_digraph ** out);
SH_API void sh_digraph_free(sh_digraph * g);
SH_API size_t sh_digraph_size(const sh_digraph * g);
SH_API sh_status sh_digraph_json(const sh_digraph * g, char ** out);
SH_API sh_status sh_digraph_dot(const sh_digraph * g, char ** out);
SH_API sh_status sh_bundled_names(char ** out);

/* Size bounds: materialised objects and solver instance vertices. */
SH_API sh_status sh_set_size_bound(size_t bound);
SH_API sh_status sh_set_solver_bound(size_t bound);

SH_API sh_status sh_analyze(const sh_digraph * h, char ** out);

/* kind: "hom", "surj", "retract", "compact", "compact-strict" or "list".
   extra: JSON embedding array for "retract", array of lists for "list",
   otherwise NULL. Returns SH_NO_WITNESS (with a report) when none exists. */
SH_API sh_status sh_solve(const char * kind, const sh_digraph * h, const sh_digraph * g, const char * extra, char ** out);

/* mode: "enumerate", "wnu", "majority" or "essentially-unary". */
SH_API sh_status sh_poly(const sh_digraph * h, size_t arity, const char * mode, char ** out);

/* Cyl_m with vertex provenance; with_dagger adds the top-copy map check. */
SH_API sh_status sh_gadget_cyl(size_t m, int with_dagger, char ** out);

/* sub and cycle are JSON vertex arrays; cycle may be NULL (a Hamilton
   cycle of the induced subtournament is used). */
SH_API sh_status sh_spill(const sh_digraph * h, const char * sub, const char * cycle, char ** out);

/* construction: "base1", "base2", "gen1", "gen2", "components" or
   "connectify". options is a JSON object with the fields the construction
   needs: "embedding", "sub", "cycle", "levels", "component". */
SH_API sh_status sh_reduce(const char * construction, const sh_digraph * h, const sh_digraph * g, const char * options,
    char ** out);

SH_API sh_status sh_classify(const sh_digraph * h, char ** out);

/* Runs the bundled self-check suite. SH_NO_WITNESS if any item fails. */
SH_API sh_status sh_run_suite(char ** out);

SH_API sh_status sh_search_figures(char ** out);

#ifdef __cplusplus
}
#endif

#endif
