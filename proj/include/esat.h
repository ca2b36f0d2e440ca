/*
 * esat — a conflict-driven SAT solver that tracks per-clause derivation
 * metadata and uses it to emit extra implied clauses (gliding shifts of
 * arithmetic-progression clauses, multiplicative scaling of Pythagorean
 * triple clauses, and images under user-supplied symmetry generators).
 *
 * All functions returning int use ESAT_OK / negative error codes unless
 * documented otherwise; the message for the most recent error on the
 * calling thread is available via esat_last_error().
 */
#ifndef ESAT_H
#define ESAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ESAT_OK 0
#define ESAT_ERROR (-1)

/* Solve outcomes; the command-line tool also uses them as exit codes. */
#define ESAT_TIMEOUT 0
#define ESAT_SAT 10
#define ESAT_UNSAT 20

/* Results of esat_check_implied. */
#define ESAT_NOT_IMPLIED 0
#define ESAT_IMPLIED 1
#define ESAT_UNKNOWN 2

typedef struct esat_formula esat_formula;
typedef struct esat_solver esat_solver;

const char *esat_version(void);
const char *esat_last_error(void);
void esat_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Formulas                                                            */
/* ------------------------------------------------------------------ */

esat_formula *esat_formula_new(void);
void esat_formula_free(esat_formula *f);

int esat_formula_parse_dimacs(esat_formula *f, const char *text);
int esat_formula_read_dimacs(esat_formula *f, const char *path);
int esat_formula_write_dimacs(const esat_formula *f, const char *path);
/* Caller frees the returned string with esat_string_free; NULL on error. */
char *esat_formula_to_dimacs(const esat_formula *f);

/* Metadata sidecar: one row per clause ("g <toward-zero> <away>",
 * "p <gcd> <maxvar>", or "-" for a non-symmetric clause). */
int esat_formula_load_sidecar(esat_formula *f, const char *path);
int esat_formula_write_sidecar(const esat_formula *f, const char *path);

/* Appends headerless DIMACS clause lines, every clause marked
 * non-symmetric (excluded from extra-clause reasoning). */
int esat_formula_append_nonsym(esat_formula *f, const char *path);

int esat_formula_num_vars(const esat_formula *f);
int64_t esat_formula_num_clauses(const esat_formula *f);

/* Replace the contents of f with a generated instance (the exact metadata
 * sidecar is generated along with the clauses). */
int esat_generate_waerden(esat_formula *f, int j, int k, int n);
int esat_generate_pythagorean(esat_formula *f, int n);

/* ------------------------------------------------------------------ */
/* Solver                                                              */
/* ------------------------------------------------------------------ */

esat_solver *esat_solver_new(void);
void esat_solver_free(esat_solver *s);

/* "none", "gliding", or "pythagorean". */
int esat_solver_set_plugin(esat_solver *s, const char *name);

/* Enables the dynamic-symmetry source; the file holds one permutation per
 * line in cycle form, e.g. "[ 1 7 ] [ 2 6 ] [ 3 5 ]". */
int esat_solver_load_generators(esat_solver *s, const char *path);

/* Numeric options: seed, timeout (seconds), max_conflicts, restart_base,
 * filter_x, lbd_cap, size_cap, max_eclauses, examine_cap, eclause_activity,
 * deletion_ratio, no_filtering (0/1), local_reduce_interval,
 * tier2_interval, tier2_untouched, bin_res_minimize (0/1),
 * debug_checks (0/1). */
int esat_solver_set_option(esat_solver *s, const char *name, double value);

/* Returns ESAT_SAT, ESAT_UNSAT, or ESAT_TIMEOUT; negative on error. */
int esat_solver_solve(esat_solver *s, const esat_formula *f);

/* Copies the model (one signed literal per variable) into lits; returns the
 * number of literals, 0 if the last solve was not SAT, negative on error. */
int esat_solver_model(const esat_solver *s, int32_t *lits, int capacity);

/* Counters: conflicts, decisions, propagations, restarts, reductions,
 * tier2_scans, eclauses_generated, eclauses_filtered, eclauses_added,
 * eclauses_live, eclauses_family, conflict_clauses_live, tainted_level0,
 * debug_taint_violations, debug_fold_gaps, ended_at_conflict (0/1). */
int64_t esat_solver_stat(const esat_solver *s, const char *name);

/* Seconds: "total" or "overhead" (time spent in extra-clause machinery). */
double esat_solver_stat_time(const esat_solver *s, const char *name);

/* ------------------------------------------------------------------ */
/* Verification                                                        */
/* ------------------------------------------------------------------ */

/* 1 if the total assignment satisfies f, 0 if not, negative on error. */
int esat_check_model(const esat_formula *f, const int32_t *lits, int count);

/* ESAT_IMPLIED / ESAT_NOT_IMPLIED / ESAT_UNKNOWN (budget exhausted);
 * negative on error. */
int esat_check_implied(const esat_formula *f, const int32_t *lits, int count,
                       int64_t max_conflicts);

/* Truth-table decision for formulas of at most 24 variables:
 * ESAT_SAT or ESAT_UNSAT; negative on error. */
int esat_brute_force(const esat_formula *f);

/* Audits every clause carrying gliding bounds: shifts within the bounds
 * must land on clauses of f and one step past either bound must not.
 * Returns the number of violations (0 = all bounds exactly maximal);
 * negative on error. If report is non-null it receives a description of
 * each violation (free with esat_string_free). */
int esat_glide_check(const esat_formula *f, char **report);

#ifdef __cplusplus
}
#endif

#endif /* ESAT_H */
