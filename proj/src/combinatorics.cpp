#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <utility>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_q(const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
}

}  // namespace

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt gaussian_binomial(long u, long v, const BigInt& q) {
    require_q(q);
    if (v < 0 || v > u) return 0;
    BigInt num = 1, den = 1;
    BigInt qu = big_pow(q, static_cast<unsigned long>(u));
    BigInt qv = big_pow(q, static_cast<unsigned long>(v));
    BigInt qi = 1;
    for (long i = 0; i < v; ++i) {
        num *= qu - qi;
        den *= qv - qi;
        qi *= q;
    }
    return big_divexact(num, den);
}

QPolynomial gaussian_binomial_poly(long u, long v) {
    if (v < 0 || u < 0 || v > u) return QPolynomial();
    if (v == 0) return QPolynomial::constant(1);
    // row[j] = [i j]_q while sweeping i = 0..u
    std::vector<QPolynomial> row(static_cast<size_t>(v) + 1);
    row[0] = QPolynomial::constant(1);
    for (long i = 1; i <= u; ++i) {
        for (long j = std::min(i, v); j >= 1; --j)
            row[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)].shifted(static_cast<int>(j));
    }
    return row[static_cast<size_t>(v)];
}

BigInt lambda_count(long a, long b, long s, long t, const BigInt& q) {
    require_q(q);
    BigInt acc = 0;
    for (long r = s; r <= t; ++r) {
        BigInt term = big_pow(q, static_cast<unsigned long>(to_ll(binomial(r - s, 2)))) *
                      gaussian_binomial(a - s, r - s, q) * gaussian_binomial(b - r, t - r, q);
        if ((r - s) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

QPolynomial lambda_poly(long a, long b, long s, long t) {
    QPolynomial acc;
    for (long r = s; r <= t; ++r) {
        QPolynomial term =
            (gaussian_binomial_poly(a - s, r - s) * gaussian_binomial_poly(b - r, t - r))
                .shifted(static_cast<int>(to_ll(binomial(r - s, 2))));
        if ((r - s) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

IntMatrix::IntMatrix(int order) : order_(order) {
    if (order < 1) throw InvalidInput("matrix order must be >= 1");
    entries_.assign(static_cast<size_t>(order) * order, BigInt(0));
}

IntMatrix::IntMatrix(int order, std::vector<BigInt> entries) : order_(order), entries_(std::move(entries)) {
    if (order < 1) throw InvalidInput("matrix order must be >= 1");
    if (entries_.size() != static_cast<size_t>(order) * order)
        throw InvalidInput("matrix entry count does not match order");
}

BigInt bareiss_determinant(const IntMatrix& m) {
    const int n = m.order();
    IntMatrix a = m;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = big_divexact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

}  // namespace schubert
