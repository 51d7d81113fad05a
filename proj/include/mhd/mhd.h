#ifndef MHD_H
#define MHD_H

#ifdef __cplusplus
extern "C" {
#endif

/* return codes */
#define MHD_OK 0
#define MHD_ERR 1          /* internal failure */
#define MHD_EINVAL 2       /* bad configuration or argument */
#define MHD_EREGULARITY 3  /* a window evaluation never stabilized */

typedef struct mhd_verifier mhd_verifier;

/* Builds a verifier from a JSON configuration object. Keys:
 *   instance      "group" | "qtaft"            (default "group")
 *   group         "zn:<n>" | "sym:<n>" | "dihedral:<n>" | "z"
 *   field         "rational" | "fq:<p>"
 *   taft_m, taft_i  integers                   (qtaft only)
 *   taft_lambda   scalar literal; derived from (m, i, field) when absent
 *   window        positive integer truncation window
 *   samples       tuple count; <= 0 selects exhaustive or per-check defaults
 *   seed          unsigned integer
 *   suite         array of check names; empty runs everything
 *   corrupt       "" | "drop_antipode" | "delta_not_cop" |
 *                 "swap_coaction_b" | "trivial_braiding"
 * On success *out owns the verifier; release it with mhd_verifier_destroy. */
int mhd_verifier_create(const char* config_json, mhd_verifier** out);

/* Runs every configured check. */
int mhd_verifier_run(mhd_verifier* v);

/* Reports are available after a successful run. The returned string is
 * owned by the caller; release it with mhd_string_free. */
int mhd_verifier_report_json(mhd_verifier* v, char** out);
int mhd_verifier_report_text(mhd_verifier* v, char** out);

/* Sets *out to 1 when every check passed, 0 otherwise. */
int mhd_verifier_all_passed(mhd_verifier* v, int* out);

void mhd_verifier_destroy(mhd_verifier* v);
void mhd_string_free(char* s);

/* Message for the most recent failure on this thread. */
const char* mhd_last_error(void);

const char* mhd_version(void);

#ifdef __cplusplus
}
#endif

#endif
