/* C interface to the coxhyp library.
 *
 * The library computes Cox ring presentations of hypersurfaces in P^1 x Z
 * from the Cox ring of Z, certifies the machine-checkable hypotheses and
 * proof steps on concrete instances, and reports the birational-geometry
 * data (degeneracy matrices, small-modification maps, Eff/Mov/Nef cones).
 *
 * All functions are thread-safe on distinct handles. Strings returned
 * through out-parameters are owned by the caller and must be released with
 * coxhyp_string_free.
 */
#ifndef COXHYP_H
#define COXHYP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; also the CLI exit codes. */
#define COXHYP_OK 0             /* success */
#define COXHYP_FAIL 1           /* a mathematical check failed */
#define COXHYP_INPUT_ERROR 2    /* malformed input */
#define COXHYP_RESOURCE_LIMIT 3 /* step budget exceeded */

#define COXHYP_FORMAT_TEXT 0
#define COXHYP_FORMAT_JSON 1

#define COXHYP_DIR_FORWARD 0
#define COXHYP_DIR_INVERSE 1

typedef struct coxhyp_instance coxhyp_instance;

const char* coxhyp_version(void);
const char* coxhyp_status_name(int status);

/* Parses and validates an instance document (see the schema in README.md).
 * On success *out receives a handle to be released with
 * coxhyp_instance_free. On failure, *error_message (when non-NULL) receives
 * the error text. */
int coxhyp_instance_parse(const char* json_text, coxhyp_instance** out, char** error_message);
void coxhyp_instance_free(coxhyp_instance* instance);

/* Runners write the rendered report (or error text) to *out and return a
 * status code. budget = 0 selects the default cap of 1000000 S-pair
 * reductions per run. */
int coxhyp_check(const coxhyp_instance* instance, int format, unsigned long long budget,
                 char** out);
int coxhyp_present(const coxhyp_instance* instance, int format, unsigned long long budget,
                   char** out);
int coxhyp_verify(const coxhyp_instance* instance, int format, unsigned long long budget,
                  char** out);

/* Cone case analysis for degree d in P^1 and dim Z = m >= 3, 1 <= d <= m. */
int coxhyp_cones(int d, int m, int format, char** out);

/* Evaluates the small-modification map at a rational point. The point is
 * taken from the instance's points section (point_index) unless point_json
 * is non-NULL, in which case it is parsed from that object. */
int coxhyp_map(const coxhyp_instance* instance, int direction, int point_index,
               const char* point_json, int format, char** out);

void coxhyp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* COXHYP_H */
