#ifndef SCHUBERT_FORMULAS_HPP
#define SCHUBERT_FORMULAS_HPP

#include <optional>
#include <tuple>

#include "schubert/bigint.hpp"
#include "schubert/index_tuple.hpp"
#include "schubert/qpolynomial.hpp"

namespace schubert {

// Three independent routes to the code length n_alpha. They must agree for
// every alpha and q; the identity suite sweeps that.

// Cell decomposition: n_alpha = sum over beta <= alpha of q^{delta_beta}.
BigInt length_via_cells(const IndexTuple& alpha, const BigInt& q);

// Nested block sum: with consecutive blocks ending at p_1 < ... < p_u,
//   n_alpha = sum_{s_1=p_1}^{alpha_{p_1}} ... sum_{s_u=p_u}^{alpha_{p_u}}
//             prod_{i=0}^{u} lambda(alpha_{p_i}, alpha_{p_{i+1}}; s_i, s_{i+1})
// with s_0 = p_0 = 0, s_{u+1} = p_{u+1} = l, alpha_0 = 0.
BigInt length_via_nested_sums(const IndexTuple& alpha, const BigInt& q);

// Flag-count sum: over tuples (k_1, ..., k_{l-1}) with i <= k_i <= alpha_i
// and k_i <= k_{i+1},
//   n_alpha = sum prod_{i=0}^{l-1} [alpha_{i+1}-alpha_i, k_{i+1}-k_i]_q
//             * q^{(alpha_i-k_i)(k_{i+1}-k_i)}
// with alpha_0 = k_0 = 0 and k_l = l.
BigInt length_via_gv(const IndexTuple& alpha, const BigInt& q);

// n_alpha as a polynomial in q: monic of degree delta_alpha, and its value
// at 1 is k_alpha.
QPolynomial length_poly(const IndexTuple& alpha);

// Two routes to the dimension k_alpha (a third where applicable).

// Determinant of the l x l matrix with (i, j) entry C(alpha_j - j + 1, i - j + 1).
BigInt dimension_via_determinant(const IndexTuple& alpha);

// The q -> 1 limit of the nested block sum: products of binomials
// C(alpha_{p_{i+1}} - alpha_{p_i}, s_{i+1} - s_i) over the same index set.
BigInt dimension_via_limit_sums(const IndexTuple& alpha);

// Closed form when alpha is an arithmetic progression alpha_i = c(i-1) + d:
// k_alpha = (alpha_1 / alpha_{l+1}) C(alpha_{l+1}, l) with alpha_{l+1} = c l + d.
// nullopt when the entries are not in arithmetic progression.
std::optional<BigInt> dimension_arith_progression(const IndexTuple& alpha);

// Parameters of the two-row code with alpha = (m-h-1, m): n by the explicit
// double-subtraction formula, k = m(m-1)/2 - h(h+1)/2, and the proven
// minimum distance q^{2m-h-4}. Requires 0 <= h <= m-3.
struct ChenParameters {
    BigInt n, k, d;
};
ChenParameters chen_parameters(int m, int h, const BigInt& q);

// Lower bound for the minimum distance:
//   q^{alpha_1} (q^{alpha_2} - q^{alpha_1}) ... (q^{alpha_l} - q^{alpha_{l-1}})
//     / q^{1+2+...+l}.
// The quotient is rational (and below 1 for tuples near the minimum), so the
// exact form keeps numerator and denominator. It satisfies
// num/den >= q^{delta_alpha - l}.
struct GvBound {
    BigInt num, den;  // den = q^{l(l+1)/2}, num > 0
    BigInt ceil() const { return (num + den - 1) / den; }
};
GvBound gv_lower_bound_exact(const IndexTuple& alpha, const BigInt& q);

// Ceiling of the exact bound: the best integer lower bound it yields for d.
BigInt gv_lower_bound(const IndexTuple& alpha, const BigInt& q);

// Higher weights of the Schubert divisor code:
//   d_r = q^{delta-1} + ... + q^{delta-r},  delta = l(m-l),
// proven for 1 <= r <= max{l, m-l}. Requires 1 < l < m.
BigInt divisor_higher_weight(int l, int m, const BigInt& q, int r);

// Grassmann code reference values: n = [m l]_q, k = C(m, l),
// d = q^{l(m-l)}, d_r = q^delta + ... + q^{delta-r+1} for
// 1 <= r <= max{l, m-l} + 1.
struct GrassmannParameters {
    BigInt n, k, d, d_r;
};
GrassmannParameters grassmann_reference(int l, int m, const BigInt& q, int r);

// Length of the Schubert divisor code: [m l]_q - q^{l(m-l)}. Requires 1 < l < m.
BigInt schubert_divisor_length(int l, int m, const BigInt& q);

// Every formula variant for one code, for cross-validation and reporting.
struct ParameterBundle {
    IndexTuple alpha;
    BigInt q;
    int delta;
    BigInt n_cells, n_nested_sums, n_gv;
    BigInt k_determinant, k_limit_sums, k_downset;
    std::optional<BigInt> k_arith_progression;
    QPolynomial poly;
    GvBound d_lower;
    BigInt d_upper;  // q^delta

    bool lengths_agree() const { return n_cells == n_nested_sums && n_cells == n_gv; }
    bool dimensions_agree() const {
        return k_determinant == k_limit_sums && k_determinant == k_downset &&
               (!k_arith_progression || *k_arith_progression == k_determinant);
    }
    bool poly_facts_hold() const {
        return poly.is_monic() && poly.degree() == delta && poly.evaluate(1) == k_determinant;
    }
    // d_lower <= d_upper as exact rationals
    bool bounds_ordered() const { return d_lower.num <= d_upper * d_lower.den; }
    bool consistent() const {
        return lengths_agree() && dimensions_agree() && poly_facts_hold() && bounds_ordered();
    }
};

ParameterBundle compute_parameter_bundle(const IndexTuple& alpha, const BigInt& q);

}  // namespace schubert

#endif
