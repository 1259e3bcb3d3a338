#include "forcing_lab/forcing_lab.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                                   \
    do {                                                                               \
        if (!(cond)) {                                                                 \
            fprintf(stderr, "%s:%d: FAIL %s (%s)\n", __FILE__, __LINE__, #cond,         \
                flab_last_error());                                                    \
            ++failures;                                                                \
        }                                                                              \
    } while (0)

static int contains(const char * haystack, const char * needle)
{
    return haystack && strstr(haystack, needle) != NULL;
}

static void conditions(void)
{
    uint32_t seq[] = {3, 0, 1};
    flab_condition * a = NULL;
    flab_condition * b = NULL;
    char * text = NULL;
    int yes = 0;

    EXPECT(flab_condition_new(seq, 3, &a) == FLAB_OK);
    EXPECT(flab_condition_length(a) == 3);
    EXPECT(flab_condition_from_json("[0, 1]", &b) == FLAB_OK);
    EXPECT(flab_extends(a, b, &yes) == FLAB_OK && yes == 1);
    EXPECT(flab_extends(b, a, &yes) == FLAB_OK && yes == 0);

    EXPECT(flab_condition_to_json(a, &text) == FLAB_OK);
    EXPECT(text && strcmp(text, "[3,0,1]") == 0);
    flab_string_free(text);

    EXPECT(flab_compatible(a, b, &text) == FLAB_OK);
    EXPECT(contains(text, "\"compatible\":true"));
    flab_string_free(text);
    flab_condition_free(b);

    EXPECT(flab_condition_from_json("[1, 0]", &b) == FLAB_OK);
    EXPECT(flab_compatible(a, b, &text) == FLAB_OK);
    EXPECT(contains(text, "\"conflict\":[0,1]"));
    flab_string_free(text);
    flab_condition_free(b);
    flab_condition_free(a);

    uint32_t dup[] = {1, 1};
    a = NULL;
    EXPECT(flab_condition_new(dup, 2, &a) == FLAB_INVALID_CONDITION);
    EXPECT(a == NULL);
    EXPECT(strlen(flab_last_error()) > 0);
    EXPECT(flab_condition_from_json("[0, ", &a) == FLAB_PARSE_ERROR);
    EXPECT(flab_condition_from_json("{\"x\": 1}", &a) == FLAB_PARSE_ERROR);
    EXPECT(flab_extends(NULL, NULL, &yes) == FLAB_INVALID_ARGUMENT);
}

static void trees(void)
{
    uint32_t root[] = {5};
    flab_condition * o = NULL;
    flab_tree * t = NULL;
    char * report = NULL;
    int passed = 0;

    EXPECT(flab_condition_new(root, 1, &o) == FLAB_OK);
    EXPECT(flab_tree_uniform(o, 2, 6, 6, &t) == FLAB_OK);
    EXPECT(flab_tree_leaf_count(t) == 6);
    EXPECT(flab_tree_validate(t, 6, 6, &report, &passed) == FLAB_OK && passed == 1);
    EXPECT(contains(report, "\"equality\":true"));
    flab_string_free(report);
    flab_tree_free(t);

    EXPECT(flab_tree_uniform(o, 6, 6, 6, &t) == FLAB_CAP_EXCEEDED);
    flab_condition_free(o);

    EXPECT(flab_tree_from_json("{\"root\":[0],\"leaves\":[[0,1],[0,2]],\"depth\":1}", &t) == FLAB_OK);
    EXPECT(flab_tree_validate(t, 3, 3, &report, &passed) == FLAB_OK && passed == 0);
    EXPECT(contains(report, "pairwise_incompatible"));
    flab_string_free(report);
    flab_tree_free(t);
}

static void arrays(void)
{
    flab_array * a = NULL;
    flab_array * out = NULL;
    char * text = NULL;
    int passed = 0;
    int exists = 1;

    EXPECT(flab_array_from_json("{\"base\":[],\"p\":1,\"h\":2,\"cells\":[[[[0,1]],[[1,0]]]]}", &a) == FLAB_OK);
    EXPECT(flab_array_validate(a, 3, 3, &text, &passed) == FLAB_OK && passed == 1);
    flab_string_free(text);
    EXPECT(flab_array_uniformize(a, 3, 3, 3, &out, &text) == FLAB_OK);
    EXPECT(contains(text, "\"size\":\"6\""));
    flab_string_free(text);
    EXPECT(flab_array_validate(out, 3, 3, &text, &passed) == FLAB_OK && passed == 1);
    flab_string_free(text);
    flab_array_free(out);
    EXPECT(flab_array_uniformize(a, 3, 3, 1, &out, &text) == FLAB_INVALID_ARGUMENT);
    flab_array_free(a);

    EXPECT(flab_array_from_json("{\"base\":[],\"p\":2,\"h\":1,\"cells\":[[[]]]}", &a) == FLAB_PARSE_ERROR);

    EXPECT(flab_array_search("[]", 2, 1, 3, 3, 3, 0, &text, &exists) == FLAB_OK && exists == 0);
    flab_string_free(text);
    EXPECT(flab_array_search("[0]", 2, 2, 3, 4, 4, 0, &text, &exists) == FLAB_OK && exists == 1);
    EXPECT(contains(text, "\"witness_valid\":true"));
    flab_string_free(text);
    EXPECT(flab_array_search("[]", 3, 2, 3, 4, 4, 5, &text, &exists) == FLAB_BUDGET_EXCEEDED);
}

static void programs(void)
{
    flab_program * prog = NULL;
    flab_condition * o = NULL;
    char * text = NULL;
    int accept = -1;

    EXPECT(flab_program_generate("modular", 3, 2, &prog) == FLAB_OK);
    EXPECT(flab_condition_from_json("[]", &o) == FLAB_OK);
    EXPECT(flab_php_check(prog, 3, 2, o, &text) == FLAB_OK);
    EXPECT(contains(text, "\"kind\":\"collision\""));
    EXPECT(contains(text, "\"pigeons\":[0,2]"));
    flab_string_free(text);
    EXPECT(flab_single_step(prog, o, 3, 2, 4, 4, &text) == FLAB_OK);
    EXPECT(contains(text, "row-collision"));
    flab_string_free(text);
    flab_program_free(prog);

    EXPECT(flab_program_from_json("{\"depth_cap\":1,\"table\":{\"0,0\":{\"query\":[0,1],\"yes\":{\"leaf\":true},\"no\":{\"leaf\":false}}}}", &prog) == FLAB_OK);
    EXPECT(flab_program_compile(prog, o, 1, 1, 3, 3, &text) == FLAB_OK);
    EXPECT(contains(text, "\"plus\":{\"base\":[],\"cells\":[[[[0,1]]]]"));
    flab_string_free(text);
    flab_condition_free(o);
    EXPECT(flab_condition_from_json("[1,0]", &o) == FLAB_OK);
    EXPECT(flab_program_evaluate(prog, 0, 0, o, &accept) == FLAB_OK && accept == 0);
    flab_program_free(prog);

    EXPECT(flab_program_random(2, 2, 4, 2, 7, &prog) == FLAB_OK);
    EXPECT(flab_program_to_json(prog, &text) == FLAB_OK);
    EXPECT(contains(text, "\"depth_cap\":2"));
    flab_string_free(text);
    flab_program_free(prog);

    EXPECT(flab_program_generate("nonsense", 3, 2, &prog) == FLAB_PARSE_ERROR);
    EXPECT(flab_program_from_json("{\"depth_cap\":1,\"table\":{\"0;0\":{\"leaf\":true}}}", &prog) == FLAB_PARSE_ERROR);
    flab_condition_free(o);
}

static void runs(void)
{
    char * text = NULL;
    int passed = 0;

    EXPECT(flab_verify("{\"suite\":\"upper-bound\",\"m\":5}", &text, &passed) == FLAB_OK && passed == 1);
    EXPECT(contains(text, "\"digest\":"));
    flab_string_free(text);
    EXPECT(flab_verify("{\"suite\":\"nope\"}", &text, &passed) == FLAB_INVALID_ARGUMENT);
    EXPECT(flab_verify("{\"suite\":\"upper-bound\",\"m\":7,\"budget\":{\"max_nodes\":10}}", &text, &passed) == FLAB_BUDGET_EXCEEDED);

    EXPECT(flab_run_game("{\"universe\":{\"n\":5},\"schedule\":[\"MIN\"],\"rounds\":0}", 0, &text, &passed) == FLAB_OK);
    EXPECT(passed == 1);
    EXPECT(contains(text, "\"final\":[]"));
    flab_string_free(text);

    EXPECT(flab_run_game("{\"universe\":{\"n\":3,\"length_cap\":2},\"schedule\":[\"GROW\"],\"rounds\":3}", 0, &text, &passed)
        == FLAB_CAP_EXCEEDED);
    EXPECT(passed == 0);
    EXPECT(contains(text, "\"rounds\":[{"));
    flab_string_free(text);

    EXPECT(flab_counts("order", 4, 1, 2, 0, &text) == FLAB_OK);
    EXPECT(contains(text, "\"formula\":\"6\""));
    EXPECT(contains(text, "\"max_antichain\":6"));
    flab_string_free(text);
    EXPECT(flab_counts("partialfn", 2, 0, 1, 0, &text) == FLAB_OK);
    EXPECT(contains(text, "\"tree_size\":4"));
    flab_string_free(text);
}

int main(void)
{
    EXPECT(strcmp(flab_status_name(FLAB_BUDGET_EXCEEDED), "budget exceeded") == 0);
    EXPECT(strlen(flab_version()) > 0);
    conditions();
    trees();
    arrays();
    programs();
    runs();
    if (failures)
        fprintf(stderr, "%d failures\n", failures);
    else
        printf("capi: all checks passed\n");
    return failures ? 1 : 0;
}
