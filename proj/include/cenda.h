/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C API of the cenda shared library: exact symbolic computation in the
 * matrix model of conformal endomorphism algebras.
 *
 * Conventions:
 *   - Objects are opaque handles created by *_parse and released by *_free.
 *   - Every function returns a cenda_status; on any nonzero status,
 *     cenda_last_error() describes the failure (thread-local storage).
 *   - Batch commands (cenda_cmd_*) return the full textual report through a
 *     malloc'd string; release it with cenda_string_free. Their status value
 *     doubles as the CLI exit code: 0 success/true, 1 checked-false,
 *     2 invalid input, 3 resource cap, 4 internal error.
 *   - Textual formats: elements are "N=<size>" plus "[i,j]: <poly>" lines;
 *     univariate matrices are "rows=<r>", "cols=<c>" plus entry lines in the
 *     variable y; polynomials are sums of terms like "3/2*D^2*x".
 */

#ifndef CENDA_H
#define CENDA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cenda_status {
    CENDA_OK = 0,
    CENDA_CHECK_FAILED = 1,
    CENDA_INVALID_INPUT = 2,
    CENDA_RESOURCE_LIMIT = 3,
    CENDA_INTERNAL_ERROR = 4
} cenda_status;

typedef struct cenda_elem cenda_elem;
typedef struct cenda_pmat cenda_pmat;

const char* cenda_version(void);

/* Last failure message of the calling thread; valid until the next call. */
const char* cenda_last_error(void);

void cenda_string_free(char* s);

/* ----------------------------------------------------------- handles */

cenda_status cenda_elem_parse(const char* text, cenda_elem** out);
cenda_status cenda_elem_print(const cenda_elem* e, char** out);
cenda_status cenda_elem_size(const cenda_elem* e, size_t* out);
void cenda_elem_free(cenda_elem* e);

cenda_status cenda_pmat_parse(const char* text, cenda_pmat** out);
cenda_status cenda_pmat_print(const cenda_pmat* m, char** out);
void cenda_pmat_free(cenda_pmat* m);

/* n-th product of two elements of equal size. */
cenda_status cenda_elem_product(const cenda_elem* a, const cenda_elem* b, unsigned n, cenda_elem** out);

/* Least bound with all higher products zero. */
cenda_status cenda_elem_locality(const cenda_elem* a, const cenda_elem* b, unsigned* bound);

/* ----------------------------------------------------------- commands */

/*
 * element_texts: one or two element streams (two elements total).
 * kv != 0 selects flat key=value output.
 */
cenda_status cenda_cmd_product(const char* const* element_texts, size_t n_texts, unsigned n, int kv, char** report);

/*
 * identity: one of C2, C3, conf-ass, conf-ass1, eq2.2.1, eq2.2.2, eq2.2.3,
 * eq2.2.4, anti-iso, commutativity.
 */
cenda_status cenda_cmd_check_random(const char* identity, uint64_t seed, unsigned count, unsigned size_cap,
                                    unsigned deg_cap, int kv, char** report);
cenda_status cenda_cmd_check_elems(const char* identity, const char* elems_text, int kv, char** report);

/*
 * spec: "cend N" | "curr N" | "cendq N <matrix-file>"; the matrix file is
 * resolved against the current working directory.
 */
cenda_status cenda_cmd_gk_spec(const char* spec, unsigned n_max, int kv, char** report);
cenda_status cenda_cmd_gk_gens(const char* gens_text, unsigned n_max, int kv, char** report);

cenda_status cenda_cmd_iso(const char* p_text, const char* q_text, int kv, char** report);
cenda_status cenda_cmd_member(const char* spec, const char* elem_text, int kv, char** report);

/* probes_text may be NULL: the default generator probes are used. */
cenda_status cenda_cmd_unit(const char* elem_text, const char* probes_text, int kv, char** report);
cenda_status cenda_cmd_idem(const char* elem_text, int kv, char** report);
cenda_status cenda_cmd_snf(const char* mat_text, int kv, char** report);
cenda_status cenda_cmd_oracle(uint64_t seed, unsigned count, unsigned size_cap, unsigned deg_cap, int kv,
                              char** report);

#ifdef __cplusplus
}
#endif

#endif /* CENDA_H */
