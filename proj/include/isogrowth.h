#ifndef ISOGROWTH_H
#define ISOGROWTH_H

/*
 * C interface to the isogeny-growth core.
 *
 * All numbers cross this boundary as strings: exact rationals as "n/d" (or
 * a plain integer string), real numbers as decimal strings, aggregates as
 * JSON objects.  Every function returns a status code; on failure the
 * thread-local message from isogrowth_last_error() describes the problem.
 * Strings produced by the library must be released with isogrowth_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ISOGROWTH_OK = 0,
    ISOGROWTH_ERR_ARGUMENT = 1, /* unusable argument or parse failure */
    ISOGROWTH_ERR_DOMAIN = 2,   /* arithmetic or domain error */
    ISOGROWTH_ERR_INTERNAL = 3
} isogrowth_status;

typedef struct isogrowth_curve isogrowth_curve;
typedef struct isogrowth_pair isogrowth_pair;
typedef struct isogrowth_tower isogrowth_tower;

const char* isogrowth_last_error(void);
void isogrowth_free(char* s);

/* ---- curves ---------------------------------------------------------- */

/* from the five Weierstrass coefficients, each a rational string */
isogrowth_status isogrowth_curve_new(const char* a1, const char* a2,
                                     const char* a3, const char* a4,
                                     const char* a6, isogrowth_curve** out);

/* from the bundled table, e.g. "75a2" */
isogrowth_status isogrowth_curve_by_label(const char* label,
                                          isogrowth_curve** out);

void isogrowth_curve_release(isogrowth_curve* c);

/* "c4" | "c6" | "disc" | "j" | "conductor" | "torsion" of the minimal
 * model, as a rational string */
isogrowth_status isogrowth_curve_invariant(const isogrowth_curve* c,
                                           const char* name, char** out);

/* reduction data at p: JSON with kodaira type, delta, m, c, f, reduction,
 * potential, tame, eth, split */
isogrowth_status isogrowth_local_data(const isogrowth_curve* c, const char* p,
                                      char** out);

/* JSON {omega, omega_star, components} at the requested precision */
isogrowth_status isogrowth_periods(const isogrowth_curve* c, long digits,
                                   char** out);

/* ---- isogenous pairs -------------------------------------------------- */

/* two bundled labels joined by the table's prime-degree chains */
isogrowth_status isogrowth_pair_by_labels(const char* from, const char* to,
                                          isogrowth_pair** out);

/* explicit pair with a stated degree (no chain) */
isogrowth_status isogrowth_pair_new(const isogrowth_curve* from,
                                    const isogrowth_curve* to,
                                    const char* degree, isogrowth_pair** out);

void isogrowth_pair_release(isogrowth_pair* pr);

/* degree of the pair as an integer string */
isogrowth_status isogrowth_pair_degree(const isogrowth_pair* pr, char** out);

/* consistency checks (conductor, traces up to the bound, period support);
 * JSON {ok, failures[]} */
isogrowth_status isogrowth_pair_validate(const isogrowth_pair* pr,
                                         long good_prime_bound, char** out);

/* JSON {omega_quotient, omega_star_quotient, omega_ord, omega_star_ord}
 * with the quotients target-over-source */
isogrowth_status isogrowth_period_quotients(const isogrowth_pair* pr,
                                            const char* p, long digits,
                                            char** out);

/* Omega_phi at the place above q for ramification degree e:
 * JSON {exact, value | center+halfwidth, notes[]} */
isogrowth_status isogrowth_omega_phi(const isogrowth_pair* pr, const char* q,
                                     const char* e, char** out);

/* ---- towers ------------------------------------------------------------ */

/* "cyclotomic:<l>" | "false-tate:<l>:<m>" | "z5sq-qi" |
 * "anticyclotomic-qi[:<l>]" */
isogrowth_status isogrowth_tower_by_name(const char* name,
                                         isogrowth_tower** out);
isogrowth_status isogrowth_tower_from_json(const char* text,
                                           isogrowth_tower** out);
void isogrowth_tower_release(isogrowth_tower* t);
isogrowth_status isogrowth_tower_to_json(const isogrowth_tower* t, char** out);

/* decomposition above a place at layer n: JSON [{e, f, count}] */
isogrowth_status isogrowth_tower_place(const isogrowth_tower* t,
                                       const char* place, long layer,
                                       char** out);

/* ---- growth ------------------------------------------------------------ */

/* full growth report over layers [n_lo, n_hi] as canonical JSON;
 * rk_p >= 0 is the asserted p-corank bound */
isogrowth_status isogrowth_growth_report(const isogrowth_pair* pr,
                                         const isogrowth_tower* t,
                                         const char* p, long n_lo, long n_hi,
                                         long rk_p, int torsion_exact,
                                         long digits, char** out);

/* parse a report and re-serialize it canonically (round-trip check) */
isogrowth_status isogrowth_report_roundtrip(const char* report_json,
                                            char** out);

/* stable conductor ceiling at residue characteristic l (rational string) */
isogrowth_status isogrowth_conductor_ceiling(const char* l, long v_l,
                                             const char* e_stable, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ISOGROWTH_H */
