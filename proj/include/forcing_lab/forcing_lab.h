#ifndef FORCING_LAB_H
#define FORCING_LAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FLAB_API __declspec(dllexport)
#else
#define FLAB_API __attribute__((visibility("default")))
#endif

typedef enum flab_status {
    FLAB_OK = 0,
    FLAB_INVALID_ARGUMENT = 1,
    FLAB_INVALID_CONDITION = 2,
    FLAB_PARSE_ERROR = 3,
    FLAB_CAP_EXCEEDED = 4,
    FLAB_BUDGET_EXCEEDED = 5,
    FLAB_INVARIANT_VIOLATION = 6,
    FLAB_CONTRACT_BREACH = 7,
    FLAB_SEARCH_EXHAUSTED = 8,
    FLAB_INTERNAL = 9
} flab_status;

typedef struct flab_condition flab_condition;
typedef struct flab_tree flab_tree;
typedef struct flab_array flab_array;
typedef struct flab_program flab_program;

/* Message of the last failed call on this thread; empty after a success. Owned by the library. */
FLAB_API const char * flab_last_error(void);
FLAB_API const char * flab_status_name(flab_status status);
FLAB_API const char * flab_version(void);

/* Every char ** output is a NUL-terminated string allocated by the library. */
FLAB_API void flab_string_free(char * s);

/* Conditions */
FLAB_API flab_status flab_condition_new(const uint32_t * seq, size_t length, flab_condition ** out);
FLAB_API flab_status flab_condition_from_json(const char * json, flab_condition ** out);
FLAB_API flab_status flab_condition_to_json(const flab_condition * c, char ** out);
FLAB_API size_t flab_condition_length(const flab_condition * c);
FLAB_API flab_status flab_extends(const flab_condition * strong, const flab_condition * weak, int * out);
/* {"compatible": true, "merged": [...]} or {"compatible": false, "conflict": [a, b]} */
FLAB_API flab_status flab_compatible(const flab_condition * a, const flab_condition * b, char ** witness_json);
FLAB_API void flab_condition_free(flab_condition * c);

/* MIN-trees */
FLAB_API flab_status flab_tree_uniform(const flab_condition * root, size_t depth, size_t n, size_t length_cap, flab_tree ** out);
FLAB_API flab_status flab_tree_from_json(const char * json, flab_tree ** out);
FLAB_API flab_status flab_tree_to_json(const flab_tree * t, char ** out);
FLAB_API size_t flab_tree_leaf_count(const flab_tree * t);
FLAB_API flab_status flab_tree_validate(const flab_tree * t, size_t n, size_t length_cap, char ** report_json, int * passed);
FLAB_API void flab_tree_free(flab_tree * t);

/* PHP-arrays */
FLAB_API flab_status flab_array_from_json(const char * json, flab_array ** out);
FLAB_API flab_status flab_array_to_json(const flab_array * a, char ** out);
FLAB_API flab_status flab_array_validate(const flab_array * a, size_t n, size_t length_cap, char ** report_json, int * passed);
/* depth < 0 selects the smallest feasible depth. The report holds the stage records and checks. */
FLAB_API flab_status flab_array_uniformize(const flab_array * a, size_t n, size_t length_cap, long depth, flab_array ** out,
    char ** report_json);
FLAB_API flab_status flab_array_search(const char * base_json, size_t p, size_t h, size_t max_length, size_t n, size_t length_cap,
    uint64_t node_budget, char ** result_json, int * exists);
FLAB_API void flab_array_free(flab_array * a);

/* Oracle decision-tree programs */
FLAB_API flab_status flab_program_from_json(const char * json, flab_program ** out);
/* name: constant-accept, constant-reject, modular, identity, comparator */
FLAB_API flab_status flab_program_generate(const char * name, size_t p, size_t h, flab_program ** out);
FLAB_API flab_status flab_program_random(size_t p, size_t h, size_t n, size_t depth, uint64_t seed, flab_program ** out);
FLAB_API flab_status flab_program_to_json(const flab_program * prog, char ** out);
FLAB_API flab_status flab_program_evaluate(const flab_program * prog, size_t a, size_t b, const flab_condition * order, int * out);
/* {"base", "p", "h", "plus": array, "minus": array} */
FLAB_API flab_status flab_program_compile(const flab_program * prog, const flab_condition * base, size_t p, size_t h, size_t n,
    size_t length_cap, char ** family_json);
FLAB_API flab_status flab_php_check(const flab_program * prog, size_t p, size_t h, const flab_condition * order, char ** verdict_json);
/* Compiles over base and runs the single-step search; starving extensions up to length_cap. */
FLAB_API flab_status flab_single_step(const flab_program * prog, const flab_condition * base, size_t p, size_t h, size_t n,
    size_t length_cap, char ** alternative_json);
FLAB_API void flab_program_free(flab_program * prog);

/* Whole-run entry points. Configs and results are JSON. */
FLAB_API flab_status flab_verify(const char * config_json, char ** report_json, int * passed);
/* On a contract breach or cap error the partial transcript is still written to transcript_json. */
FLAB_API flab_status flab_run_game(const char * config_json, uint64_t node_budget, char ** transcript_json, int * passed);
/* frame: order, tournament or partialfn. m is the universe (pigeons for partialfn). */
FLAB_API flab_status flab_counts(const char * frame, size_t m, size_t base_size, size_t depth, uint64_t node_budget, char ** table_json);

#ifdef __cplusplus
}
#endif

#endif
