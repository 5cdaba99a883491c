#ifndef DAVIS_RIGIDITY_H
#define DAVIS_RIGIDITY_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum DrStatus {
  DrStatus_Ok = 0,
  DrStatus_NullPointer = 1,
  DrStatus_InvalidUtf8 = 2,
  DrStatus_Json = 3,
  DrStatus_InvalidGraph = 4,
  DrStatus_InvalidCover = 5,
  DrStatus_InvalidHat = 6,
  DrStatus_Generator = 7,
  DrStatus_Internal = 8,
} DrStatus;

/*
 A validated cover of the singular set.
 */
typedef struct DrCover DrCover;

/*
 A cycle of generalized theta graphs.
 */
typedef struct DrGraph DrGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failure on this thread, or NULL. Owned by the
 library; valid until the next call on this thread.
 */
const char *dr_last_error(void);

/*
 Frees a string returned by this library.

 # Safety
 `s` must be NULL or a string returned by this library and not yet freed.
 */
void dr_string_free(char *s);

/*
 Parses a graph file body, e.g. `{"thetas": [[3,3],[3,5],[4],[3,4]]}`.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DrStatus dr_graph_from_json(const char *json, struct DrGraph **out);

/*
 # Safety
 `graph` must be NULL or a handle from [`dr_graph_from_json`] not yet freed.
 */
void dr_graph_free(struct DrGraph *graph);

/*
 Number of thetas `N`.

 # Safety
 `graph` must be a live handle; `out` must be writable.
 */
enum DrStatus dr_graph_len(const struct DrGraph *graph, uintptr_t *out);

/*
 Parses and validates a cover file body, against `graph` unless it is NULL.

 # Safety
 `json` must be a NUL-terminated string; `graph` NULL or a live handle;
 `out` writable.
 */
enum DrStatus dr_cover_from_json(const char *json,
                                 const struct DrGraph *graph,
                                 struct DrCover **out);

/*
 # Safety
 `cover` must be NULL or a handle from this library not yet freed.
 */
void dr_cover_free(struct DrCover *cover);

/*
 Number of sheets `d`.

 # Safety
 `cover` must be a live handle; `out` must be writable.
 */
enum DrStatus dr_cover_degree(const struct DrCover *cover, uintptr_t *out);

/*
 Canonical cover file body. Free with [`dr_string_free`].

 # Safety
 `cover` must be a live handle; `out` must be writable.
 */
enum DrStatus dr_cover_to_json(const struct DrCover *cover, char **out);

/*
 Cone points of the jester hat covering an orbifold with `r` reflection
 edges in degree `d`.

 # Safety
 `out` must be writable.
 */
enum DrStatus dr_jester_hat_cover(uint64_t r, uint64_t d, uint64_t *out);

/*
 Homotopy certificate of `cover` over `graph` as JSON.

 # Safety
 Handles must be live; `out` must be writable.
 */
enum DrStatus dr_certificate_json(const struct DrGraph *graph,
                                  const struct DrCover *cover,
                                  char **out);

/*
 Cycle count vectors of `cover` as JSON.

 # Safety
 `cover` must be a live handle; `out` must be writable.
 */
enum DrStatus dr_cycle_vectors_json(const struct DrCover *cover, char **out);

/*
 Whether two covers have a label-preserving isomorphism.

 # Safety
 Handles must be live; `out` must be writable.
 */
enum DrStatus dr_label_isomorphic(const struct DrCover *a, const struct DrCover *b, bool *out);

/*
 Compares two orbicomplex covers: equal homotopy certificates and homeomorphism.

 # Safety
 Handles must be live; the output pointers must be writable.
 */
enum DrStatus dr_compare(const struct DrGraph *graph_a,
                         const struct DrCover *cover_a,
                         const struct DrGraph *graph_b,
                         const struct DrCover *cover_b,
                         bool *certificates_equal,
                         bool *homeomorphic);

/*
 Homotopic, non-homeomorphic pair over a strongly repetitive graph, from
 its first strong witness.

 # Safety
 `graph` must be a live handle; `out_a` and `out_b` must be writable.
 */
enum DrStatus dr_gen_repetitive_pair(const struct DrGraph *graph,
                                     struct DrCover **out_a,
                                     struct DrCover **out_b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DAVIS_RIGIDITY_H */
