#ifndef CMALG_H
#define CMALG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CMALG_API __declspec(dllexport)
#else
#define CMALG_API __attribute__((visibility("default")))
#endif

typedef enum cmalg_status {
  CMALG_OK = 0,
  CMALG_ERR_PARSE = 1,     /* malformed source text or module expression */
  CMALG_ERR_ARGUMENT = 2,  /* invalid argument, unknown name or violated precondition */
  CMALG_ERR_RUNTIME = 3,   /* computation failed */
  CMALG_ERR_MEMORY = 4
} cmalg_status;

/* Outcome of a statement check. */
typedef enum cmalg_verdict {
  CMALG_HOLDS = 0,
  CMALG_NOT_APPLICABLE = 2,
  CMALG_VIOLATED = 3
} cmalg_verdict;

/* A parsed ring with named ideals. */
typedef struct cmalg_session cmalg_session;

typedef struct cmalg_check_params {
  const char* A; /* module expressions, e.g. "S/I"; NULL selects the first ideal */
  const char* B; /* NULL means the same as A */
  int j, k, p, q, t, s, d;
  unsigned long long seed;
  int power_cap;
  int reduction_cap;
} cmalg_check_params;

typedef struct cmalg_fuzz_params {
  unsigned long long seed;
  int count;
  int n_min, n_max;
  int d_min, d_max;
  int jobs;
  int conjectures;             /* nonzero runs the conjecture checks */
  int linearly_presented_only; /* nonzero restricts to linearly presented m-primary forms */
  const char* only;            /* comma-separated statement ids, or NULL for all */
} cmalg_fuzz_params;

CMALG_API const char* cmalg_version(void);
/* Message for the most recent failure on the calling thread. */
CMALG_API const char* cmalg_last_error(void);
CMALG_API void cmalg_string_free(char* s);

CMALG_API void cmalg_check_params_init(cmalg_check_params* p);
CMALG_API void cmalg_fuzz_params_init(cmalg_fuzz_params* p);

CMALG_API cmalg_status cmalg_session_new(const char* source, cmalg_session** out);
CMALG_API void cmalg_session_free(cmalg_session* s);
/* Canonical source text of the session. */
CMALG_API cmalg_status cmalg_session_source(const cmalg_session* s, char** out);

/* Every result is a newly allocated string, plain text or JSON when json is nonzero.
   Ideal arguments name an ideal of the session; NULL selects the first one. */
CMALG_API cmalg_status cmalg_gb(const cmalg_session* s, const char* ideal, const char* order, int json, char** out);
CMALG_API cmalg_status cmalg_initial(const cmalg_session* s, const char* ideal, const char* order, int json,
                                     char** out);
CMALG_API cmalg_status cmalg_betti(const cmalg_session* s, const char* module, int json, char** out);
CMALG_API cmalg_status cmalg_reg(const cmalg_session* s, const char* module, int json, char** out);
CMALG_API cmalg_status cmalg_dim(const cmalg_session* s, const char* module, int json, char** out);
CMALG_API cmalg_status cmalg_tor(const cmalg_session* s, const char* A, const char* B, int k, int json, char** out);
CMALG_API cmalg_status cmalg_ext(const cmalg_session* s, const char* module, int k, int json, char** out);
CMALG_API cmalg_status cmalg_power_check(const cmalg_session* s, const char* ideal, int cap, int json, char** out);
CMALG_API cmalg_status cmalg_torsion(const cmalg_session* s, const char* ideal, int t, int json, char** out);
CMALG_API cmalg_status cmalg_eliminate(const cmalg_session* s, const char* ideal, int json, char** out);
/* J names an ideal of the session, or NULL for n seeded general combinations of the generators of I. */
CMALG_API cmalg_status cmalg_reduction(const cmalg_session* s, const char* ideal, const char* J,
                                       unsigned long long seed, int cap, int json, char** out);

/* Newline-separated statement ids. */
CMALG_API cmalg_status cmalg_check_ids(char** out);
CMALG_API cmalg_status cmalg_check(const cmalg_session* s, const char* id, const cmalg_check_params* p, int json,
                                   char** out, cmalg_verdict* verdict);
/* theorem_violations receives the number of violated theorem instances. */
CMALG_API cmalg_status cmalg_fuzz(const cmalg_fuzz_params* p, int json, char** out, int* theorem_violations);

/* Newline-separated example names. */
CMALG_API cmalg_status cmalg_example_names(char** out);
/* Source text for a named example; param is its size parameter, 0 for the default. */
CMALG_API cmalg_status cmalg_example(const char* name, int param, char** out);

#ifdef __cplusplus
}
#endif

#endif
