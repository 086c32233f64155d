/* knotfiber C API
 *
 * Decides whether an oriented knot in a tame open oriented 3-manifold can be
 * realized as a fiber of a submersion to the plane, and exposes the
 * supporting machinery: triangulation validation, homology over Z and Z/2,
 * knot exteriors with meridian/longitude data, preferred-framing offsets,
 * and sigma-framing arithmetic.
 *
 * The open manifold is always presented as the interior of a compact
 * triangulated 3-manifold with boundary (a "tame" end structure); locally
 * finite homology is computed relative to that boundary.  Wild open
 * manifolds are out of scope.
 *
 * All functions returning kf_status set a thread-local error message
 * retrievable with kf_last_error() on failure.  Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function.  Handles are opaque; one document may be used from
 * several threads as long as it is not freed concurrently.
 */

#ifndef KNOTFIBER_H
#define KNOTFIBER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
  KF_OK = 0,
  KF_ERROR_IO = 1,
  KF_ERROR_PARSE = 2,       /* malformed document */
  KF_ERROR_INVALID = 3,     /* complex fails manifold validation */
  KF_ERROR_ARGUMENT = 4,    /* precondition violated by the caller */
  KF_ERROR_NOT_FOUND = 5,   /* named knot missing */
  KF_ERROR_INTERNAL = 6
} kf_status;

/* Triangulation document: one manifold model plus named knots. */
typedef struct kf_document kf_document;

/* Rendered result: deterministic text and JSON views plus a success flag
 * (used by validation, where a well-formed document may still fail). */
typedef struct kf_result kf_result;

unsigned kf_version(void);
const char* kf_status_name(kf_status s);
const char* kf_last_error(void);

/* --- documents ------------------------------------------------------- */

kf_status kf_document_read(const char* path, kf_document** out);
kf_status kf_document_parse(const char* text, kf_document** out);
kf_status kf_document_write(const kf_document* doc, const char* path);
/* Serialized document; free with kf_string_free. */
kf_status kf_document_to_string(const kf_document* doc, char** out);
void kf_document_free(kf_document* doc);
void kf_string_free(char* s);

/* Catalog fixture generator.  Families: ball, solid_torus, thickened_torus,
 * handlebody, lens_punctured, s1xs2_punctured.  Knots: core, core_power,
 * contractible, torsion_generator, handle_core (NULL picks the family
 * default).  Parameters, in order:
 *   solid_torus + core_power:   n            (|n| <= 4, n != 0)
 *   handlebody + handle_core:   genus, index (genus <= 4)
 *   lens_punctured:             p, q         (2 <= p <= 7, gcd(p, q) = 1)
 */
kf_status kf_generate(const char* family, const char* knot,
                      const long* params, size_t nparams, kf_document** out);

/* --- operations ------------------------------------------------------ */

kf_status kf_validate(const kf_document* doc, kf_result** out);
kf_status kf_homology(const kf_document* doc, int degree, int mod2,
                      int rel_boundary, kf_result** out);
kf_status kf_decide(const kf_document* doc, const char* knot, int cross_check,
                    kf_result** out);
kf_status kf_exterior(const kf_document* doc, const char* knot,
                      kf_result** out);

const char* kf_result_text(const kf_result* r);
const char* kf_result_json(const kf_result* r);
int kf_result_ok(const kf_result* r);
void kf_result_free(kf_result* r);

/* --- sigma-framing arithmetic in pi_1(SO(3)) = Z/2 -------------------- */

/* Class after n full meridional twists: (sigma + n) mod 2. */
int kf_framing_twist(int sigma, long n);
/* Revolution framing class of the (2,1)-cable: (2 sigma + 1) mod 2 = 1. */
int kf_framing_cable(int sigma);

/* Does some functional phi on H1(M; Z2) satisfy phi(kappa2) = target?
 * kappa2_bits holds dim coordinates (each 0/1); may be NULL when dim = 0. */
kf_status kf_extension_exists(const unsigned char* kappa2_bits, size_t dim,
                              int target, int* out_exists);
/* Writes a functional with phi(kappa2) = 1 into phi_out (dim bytes).
 * Fails with KF_ERROR_ARGUMENT when the class is zero. */
kf_status kf_construct_extension(const unsigned char* kappa2_bits, size_t dim,
                                 unsigned char* phi_out);

#ifdef __cplusplus
}
#endif

#endif /* KNOTFIBER_H */
