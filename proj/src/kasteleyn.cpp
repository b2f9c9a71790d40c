#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "polyfault/series.hpp"

namespace polyfault {

// 4^(ab) * prod_{j<=a} prod_{k<=b} (cos^2(j pi/(2a+1)) + cos^2(k pi/(2b+1)))
// evaluated at the given precision; returns false when the result is not
// within 1e-3 of an integer.
static bool eval_product(int a, int b, mpfr_prec_t prec, mpz_class& out) {
    mpfr_t pi, ca, cb, term, product, tmp;
    mpfr_inits2(prec, pi, ca, cb, term, product, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);

    mpfr_set_ui(product, 1, MPFR_RNDN);
    for (int j = 1; j <= a; ++j) {
        mpfr_mul_ui(ca, pi, static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_div_ui(ca, ca, static_cast<unsigned long>(2 * a + 1), MPFR_RNDN);
        mpfr_cos(ca, ca, MPFR_RNDN);
        mpfr_sqr(ca, ca, MPFR_RNDN);
        for (int k = 1; k <= b; ++k) {
            mpfr_mul_ui(cb, pi, static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_div_ui(cb, cb, static_cast<unsigned long>(2 * b + 1), MPFR_RNDN);
            mpfr_cos(cb, cb, MPFR_RNDN);
            mpfr_sqr(cb, cb, MPFR_RNDN);
            mpfr_add(term, ca, cb, MPFR_RNDN);
            mpfr_mul(product, product, term, MPFR_RNDN);
        }
    }
    mpfr_set_ui(tmp, 4, MPFR_RNDN);
    mpfr_pow_ui(tmp, tmp, static_cast<unsigned long>(a) * b, MPFR_RNDN);
    mpfr_mul(product, product, tmp, MPFR_RNDN);

    mpfr_t rounded;
    mpfr_init2(rounded, prec);
    mpfr_round(rounded, product);
    mpfr_sub(tmp, product, rounded, MPFR_RNDN);
    mpfr_abs(tmp, tmp, MPFR_RNDN);
    const bool ok = mpfr_cmp_d(tmp, 1e-3) <= 0;
    if (ok) {
        mpz_class v;
        mpfr_get_z(v.get_mpz_t(), rounded, MPFR_RNDN);
        out = v;
    }
    mpfr_clears(pi, ca, cb, term, product, tmp, rounded, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

mpz_class kasteleyn(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    mpz_class out;
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2)
        if (eval_product(a, b, prec, out)) return out;
    throw std::runtime_error("kasteleyn product would not round unambiguously for a=" +
                             std::to_string(a) + ", b=" + std::to_string(b));
}

}  // namespace polyfault
