#ifndef RIGI_BIGINT_HPP
#define RIGI_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>

namespace rigi {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial coefficient that must fit a 64-bit step cost.
inline std::int64_t binomial_i64(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class r = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_slong_p())
        throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(r.get_si());
}

inline mpz_class pow2(unsigned long e) {
    mpz_class r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

inline mpz_class pow_mpz(const mpz_class &base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Natural log of a positive big integer without overflowing double range.
inline double log_mpz(const mpz_class &v) {
    if (v <= 0)
        throw std::domain_error("log of non-positive value");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

inline double log_binomial(unsigned long n, unsigned long k) {
    return log_mpz(binomial(n, k));
}

} // namespace rigi

#endif // RIGI_BIGINT_HPP
