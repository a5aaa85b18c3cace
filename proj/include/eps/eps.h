/* C interface to the eps library: weighted infinitesimal bialgebras on
 * decorated planar rooted forests and companion algebras. */
#ifndef EPS_EPS_H
#define EPS_EPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EPS_API __declspec(dllexport)
#else
#define EPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eps_status {
  EPS_OK = 0,
  EPS_ERR_PARSE = 1,        /* malformed text or JSON input */
  EPS_ERR_INVALID = 2,      /* bad argument: unknown label, instance, suite, target... */
  EPS_ERR_PRECONDITION = 3, /* operation undefined for this instance */
  EPS_ERR_INTERNAL = 4
} eps_status;

typedef enum eps_format { EPS_FORMAT_TEXT = 0, EPS_FORMAT_JSON = 1 } eps_format;

/* An instance together with its label alphabets. */
typedef struct eps_session eps_session;
/* An element or a tensor of a session's algebra. Tied to its session. */
typedef struct eps_value eps_value;

/* Message of the last failed call on this thread; never NULL. */
EPS_API const char* eps_last_error(void);
/* Line and column of the last parse error on this thread, 0 if none. */
EPS_API size_t eps_last_error_line(void);
EPS_API size_t eps_last_error_column(void);

/* instance: forest | poly:LAMBDA | divdiff | quiver[:FILE] | foissy | trivial.
 * x_labels, omega_labels: comma-separated; NULL selects x,y,z and a,b,w. */
EPS_API eps_status eps_session_new(const char* instance, const char* x_labels, const char* omega_labels,
                                   eps_session** out);
EPS_API void eps_session_free(eps_session* s);

/* Text form of an element, or of a tensor when the text contains '#'. */
EPS_API eps_status eps_parse(const eps_session* s, const char* text, eps_value** out);
EPS_API eps_status eps_parse_json(const eps_session* s, const char* json, eps_value** out);
EPS_API void eps_value_free(eps_value* v);
EPS_API int eps_value_is_tensor(const eps_value* v);

/* Canonical rendering; release with eps_string_free. */
EPS_API eps_status eps_value_to_string(const eps_value* v, eps_format format, char** out);
EPS_API void eps_string_free(char* str);

EPS_API eps_status eps_coproduct(const eps_session* s, const eps_value* a, eps_value** out);
/* D = m∘Δ */
EPS_API eps_status eps_derivation(const eps_session* s, const eps_value* a, eps_value** out);
EPS_API eps_status eps_antipode(const eps_session* s, const eps_value* a, eps_value** out);
EPS_API eps_status eps_antipode_inverse(const eps_session* s, const eps_value* a, eps_value** out);
EPS_API eps_status eps_prelie(const eps_session* s, const eps_value* a, const eps_value* b, eps_value** out);
EPS_API eps_status eps_bracket(const eps_session* s, const eps_value* a, const eps_value* b, eps_value** out);

/* Forest sessions: the proper biideals of a single forest, one per line. */
EPS_API eps_status eps_biideals(const eps_session* s, const eps_value* a, eps_format format, char** out);
/* Forest sessions: the morphism into identity | relabel:x=y,... | collapse | broken. */
EPS_API eps_status eps_evaluate(const eps_session* s, const eps_value* a, const char* target, eps_value** out);

/* Runs a check suite (or "all"). threads = 0 means 1. *passed is 1 iff every
 * applicable suite passed; a property failure still returns EPS_OK. */
EPS_API eps_status eps_check(const eps_session* s, const char* suite, uint64_t seed, size_t samples,
                             size_t max_vertices, unsigned threads, eps_format format, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* EPS_EPS_H */
