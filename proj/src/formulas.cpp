#include "schubert/formulas.hpp"

#include <algorithm>
#include <functional>

#include "schubert/combinatorics.hpp"

namespace schubert {

BigInt length_via_cells(const IndexTuple& alpha, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    BigInt total = 0;
    for (const IndexTuple& beta : alpha.downset())
        total += big_pow(q, static_cast<unsigned long>(beta.delta()));
    return total;
}

namespace {

// Shared skeleton of the nested block sum and its q -> 1 limit: iterate
// s_i = p_i .. alpha_{p_i} for i = 1..u with s_0 = 0, s_{u+1} = l, and
// apply `factor(alpha_{p_i}, alpha_{p_{i+1}}, s_i, s_{i+1})` across the
// u+1 blocks.
BigInt nested_block_sum(const IndexTuple& alpha,
                        const std::function<BigInt(long, long, long, long)>& factor) {
    const int l = alpha.l();
    const std::vector<int>& p = alpha.blocks().boundaries;
    const int u = static_cast<int>(p.size());

    auto alpha_at = [&](int pos) -> long { return pos == 0 ? 0 : alpha.at(pos); };
    auto p_at = [&](int i) -> int {
        if (i == 0) return 0;
        if (i == u + 1) return l;
        return p[static_cast<size_t>(i) - 1];
    };

    std::vector<long> s(static_cast<size_t>(u) + 2);
    s[0] = 0;
    s[static_cast<size_t>(u) + 1] = l;
    BigInt total = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == u + 1) {
            BigInt prod = 1;
            for (int b = 0; b <= u && prod != 0; ++b)
                prod *= factor(alpha_at(p_at(b)), alpha_at(p_at(b + 1)), s[static_cast<size_t>(b)],
                               s[static_cast<size_t>(b) + 1]);
            total += prod;
            return;
        }
        for (long v = p_at(i); v <= alpha_at(p_at(i)); ++v) {
            s[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return total;
}

}  // namespace

BigInt length_via_nested_sums(const IndexTuple& alpha, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    return nested_block_sum(alpha, [&](long a, long b, long s, long t) {
        return lambda_count(a, b, s, t, q);
    });
}

BigInt dimension_via_limit_sums(const IndexTuple& alpha) {
    return nested_block_sum(alpha, [](long a, long b, long s, long t) {
        return binomial(b - a, t - s);
    });
}

BigInt length_via_gv(const IndexTuple& alpha, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    const int l = alpha.l();
    auto alpha_at = [&](int i) -> long { return i == 0 ? 0 : alpha.at(i); };

    // k[0] = 0, k[l] = l; free indices k[1..l-1] with i <= k_i <= alpha_i
    // and k_i <= k_{i+1}.
    std::vector<long> kk(static_cast<size_t>(l) + 1);
    kk[0] = 0;
    kk[static_cast<size_t>(l)] = l;
    BigInt total = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            BigInt prod = 1;
            for (int b = 0; b < l && prod != 0; ++b) {
                long gap = kk[static_cast<size_t>(b) + 1] - kk[static_cast<size_t>(b)];
                prod *= gaussian_binomial(alpha_at(b + 1) - alpha_at(b), gap, q) *
                        big_pow(q, static_cast<unsigned long>((alpha_at(b) - kk[static_cast<size_t>(b)]) * gap));
            }
            total += prod;
            return;
        }
        // chained monotonicity ends at k_l = l, so every k_i is capped by l
        long lo = std::max<long>(i, kk[static_cast<size_t>(i) - 1]);
        long hi = std::min<long>(alpha_at(i), l);
        for (long v = lo; v <= hi; ++v) {
            kk[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return total;
}

QPolynomial length_poly(const IndexTuple& alpha) {
    QPolynomial total;
    for (const IndexTuple& beta : alpha.downset())
        total += QPolynomial::monomial(1, beta.delta());
    return total;
}

BigInt dimension_via_determinant(const IndexTuple& alpha) {
    const int l = alpha.l();
    IntMatrix m(l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) m.at(i - 1, j - 1) = binomial(alpha.at(j) - j + 1, i - j + 1);
    return bareiss_determinant(m);
}

std::optional<BigInt> dimension_arith_progression(const IndexTuple& alpha) {
    const int l = alpha.l();
    const long d = alpha.at(1);
    const long c = l >= 2 ? alpha.at(2) - alpha.at(1) : 1;
    for (int i = 1; i <= l; ++i)
        if (alpha.at(i) != c * (i - 1) + d) return std::nullopt;
    const long next = c * l + d;  // alpha_{l+1}
    // d / next * C(next, l), evaluated exactly; integrality is guaranteed.
    return big_divexact(BigInt(d) * binomial(next, l), BigInt(next));
}

ChenParameters chen_parameters(int m, int h, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    if (m < 3 || h < 0 || h > m - 3)
        throw RangeError("chen parameters require m >= 3 and 0 <= h <= m-3");
    ChenParameters out;
    BigInt qm = big_pow(q, static_cast<unsigned long>(m));
    BigInt qm1 = big_pow(q, static_cast<unsigned long>(m - 1));
    out.n = big_divexact((qm - 1) * (qm1 - 1), (q * q - 1) * (q - 1));
    for (int j = 1; j <= h; ++j)
        for (int i = 1; i <= j; ++i)
            out.n -= big_pow(q, static_cast<unsigned long>(2 * m - j - 2 - i));
    out.k = BigInt(m) * (m - 1) / 2 - BigInt(h) * (h + 1) / 2;
    out.d = big_pow(q, static_cast<unsigned long>(2 * m - h - 4));
    return out;
}

GvBound gv_lower_bound_exact(const IndexTuple& alpha, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    const int l = alpha.l();
    GvBound b;
    b.num = big_pow(q, static_cast<unsigned long>(alpha.at(1)));
    for (int i = 2; i <= l; ++i)
        b.num *= big_pow(q, static_cast<unsigned long>(alpha.at(i))) -
                 big_pow(q, static_cast<unsigned long>(alpha.at(i - 1)));
    b.den = big_pow(q, static_cast<unsigned long>(l) * (l + 1) / 2);
    return b;
}

BigInt gv_lower_bound(const IndexTuple& alpha, const BigInt& q) {
    return gv_lower_bound_exact(alpha, q).ceil();
}

BigInt divisor_higher_weight(int l, int m, const BigInt& q, int r) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    if (l <= 1 || l >= m) throw RangeError("Schubert divisor requires 1 < l < m");
    if (r < 1 || r > std::max(l, m - l))
        throw RangeError("divisor higher weight proven only for 1 <= r <= max{l, m-l}");
    const int delta = l * (m - l);
    BigInt total = 0;
    for (int i = 1; i <= r; ++i) total += big_pow(q, static_cast<unsigned long>(delta - i));
    return total;
}

GrassmannParameters grassmann_reference(int l, int m, const BigInt& q, int r) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    if (l < 1 || l > m) throw RangeError("Grassmann code requires 1 <= l <= m");
    if (r < 1 || r > std::max(l, m - l) + 1)
        throw RangeError("Grassmann higher weight known only for 1 <= r <= max{l, m-l} + 1");
    const int delta = l * (m - l);
    if (r > delta + 1) throw RangeError("higher weight index exceeds code dimension");
    GrassmannParameters out;
    out.n = gaussian_binomial(m, l, q);
    out.k = binomial(m, l);
    out.d = big_pow(q, static_cast<unsigned long>(delta));
    out.d_r = 0;
    for (int i = 0; i < r; ++i) out.d_r += big_pow(q, static_cast<unsigned long>(delta - i));
    return out;
}

BigInt schubert_divisor_length(int l, int m, const BigInt& q) {
    if (q < 2) throw InvalidInput("q must be >= 2, got " + q.get_str());
    if (l <= 1 || l >= m) throw RangeError("Schubert divisor requires 1 < l < m");
    return gaussian_binomial(m, l, q) - big_pow(q, static_cast<unsigned long>(l) * (m - l));
}

ParameterBundle compute_parameter_bundle(const IndexTuple& alpha, const BigInt& q) {
    ParameterBundle b{alpha,
                      q,
                      alpha.delta(),
                      length_via_cells(alpha, q),
                      length_via_nested_sums(alpha, q),
                      length_via_gv(alpha, q),
                      dimension_via_determinant(alpha),
                      dimension_via_limit_sums(alpha),
                      BigInt(static_cast<long>(alpha.downset().size())),
                      dimension_arith_progression(alpha),
                      length_poly(alpha),
                      gv_lower_bound_exact(alpha, q),
                      big_pow(q, static_cast<unsigned long>(alpha.delta()))};
    return b;
}

}  // namespace schubert
