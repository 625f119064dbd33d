#ifndef SCHUBERT_COMBINATORICS_HPP
#define SCHUBERT_COMBINATORICS_HPP

#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/qpolynomial.hpp"

namespace schubert {

// Binomial coefficient C(n, k). Zero when k < 0, when n >= 0 and k > n, and
// for every n < 0 (callers that need the negative-upper-index identity spell
// it out themselves).
BigInt binomial(long n, long k);

// Gaussian binomial [u v]_q as an exact integer, computed from the product
//   (q^u - 1)(q^u - q) ... (q^u - q^{v-1}) / (q^v - 1)(q^v - q) ... (q^v - q^{v-1}).
// Zero unless 0 <= v <= u. Requires q >= 2.
BigInt gaussian_binomial(long u, long v, const BigInt& q);

// [u v]_q as a polynomial in q, built from the q-Pascal recurrence
//   [u v] = [u-1 v-1] + q^v [u-1 v]
// so that it is an independent route from the integer product formula.
// Evaluating at 1 gives C(u, v); out-of-range (u, v) gives the zero polynomial.
QPolynomial gaussian_binomial_poly(long u, long v);

// lambda(a, b; s, t) = sum_{r=s}^{t} (-1)^{r-s} q^C(r-s,2) [a-s r-s]_q [b-r t-r]_q.
// Counts the t-dimensional subspaces T of a b-dimensional space with
// T /\ A = S for fixed nested subspaces S <= A of dimensions s <= a.
// Requires q >= 2; empty sum (t < s) gives 0.
BigInt lambda_count(long a, long b, long s, long t, const BigInt& q);

// The same alternating sum as a polynomial in q. Its value at 1 is C(b-a, t-s).
QPolynomial lambda_poly(long a, long b, long s, long t);

// Square matrix of exact integers, order >= 1.
class IntMatrix {
   public:
    explicit IntMatrix(int order);
    IntMatrix(int order, std::vector<BigInt> entries);

    int order() const { return order_; }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }
    const BigInt& at(int i, int j) const { return entries_[static_cast<size_t>(i) * order_ + j]; }

   private:
    int order_;
    std::vector<BigInt> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination; every division
// in the sweep is exact. Row swaps handle zero pivots.
BigInt bareiss_determinant(const IntMatrix& m);

}  // namespace schubert

#endif
