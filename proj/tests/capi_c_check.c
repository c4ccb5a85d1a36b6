/* Compile-only check that the public header is valid C. */
#include <coxhyp.h>

const char* coxhyp_header_compiles_as_c(void) { return coxhyp_version(); }
