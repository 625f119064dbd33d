#ifndef SCHUBERT_BIGINT_HPP
#define SCHUBERT_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "schubert/errors.hpp"

namespace schubert {

// Every count n_alpha, k_alpha, q^delta and signed intermediate sum is held
// exactly; GMP does the heavy lifting.
using BigInt = mpz_class;

inline BigInt big_from_ull(unsigned long long v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Exact quotient; throws if b does not divide a. Used where a formula
// guarantees integrality (a failure indicates a transcription bug).
inline BigInt big_divexact(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("expected exact division: " + a.get_str() +
                               " / " + b.get_str());
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_ll(const BigInt& v) { return v.fits_slong_p(); }

inline long long to_ll(const BigInt& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("BigInt does not fit in long long: " + v.get_str());
    return static_cast<long long>(v.get_si());
}

}  // namespace schubert

#endif
