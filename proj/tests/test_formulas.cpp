#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "schubert/combinatorics.hpp"
#include "schubert/formulas.hpp"

using namespace schubert;

namespace {

BigInt q_pow(long q, int e) { return big_pow(BigInt(q), static_cast<unsigned long>(e)); }

}  // namespace

TEST_CASE("length via cells") {
    CHECK(length_via_cells(IndexTuple({1, 2, 3}, 6), 5) == 1);
    CHECK(length_via_cells(IndexTuple({2, 4}, 4), 2) == 19);
    CHECK(length_via_cells(theta_tuple(2, 4), 2) == 35);
    CHECK(length_via_cells(theta_tuple(2, 4), 2) == gaussian_binomial(4, 2, 2));
}

TEST_CASE("length via nested sums") {
    // consecutive tuple: single lambda factor, a Gaussian binomial
    for (long q : {2L, 3L})
        for (int d = 1; d <= 4; ++d)
            for (int l = 1; l <= 3; ++l) {
                std::vector<int> e;
                for (int i = 0; i < l; ++i) e.push_back(d + i);
                IndexTuple alpha(e, d + l);
                CHECK(length_via_nested_sums(alpha, q) == gaussian_binomial(d + l - 1, l, q));
            }
    CHECK(length_via_nested_sums(IndexTuple({2, 4}, 4), 2) == 19);
    CHECK(length_via_nested_sums(IndexTuple({1, 3, 4, 7}, 7), 2) ==
          length_via_cells(IndexTuple({1, 3, 4, 7}, 7), 2));
}

TEST_CASE("length via flag counts") {
    CHECK(length_via_gv(IndexTuple({1, 2, 3}, 5), 7) == 1);
    CHECK(length_via_gv(IndexTuple({2, 4}, 4), 2) == 19);
    CHECK(length_via_gv(theta_tuple(2, 4), 3) == 130);
}

TEST_CASE("three length formulas agree") {
    for (long q : {2L, 3L})
        for (int m = 1; m <= 6; ++m)
            for (int l = 1; l <= std::min(3, m); ++l)
                for (const auto& alpha : IndexTuple::all(l, m)) {
                    CAPTURE(alpha.str());
                    CAPTURE(q);
                    const BigInt n = length_via_cells(alpha, q);
                    CHECK(n == length_via_nested_sums(alpha, q));
                    CHECK(n == length_via_gv(alpha, q));
                }
}

TEST_CASE("length polynomial") {
    QPolynomial p = length_poly(IndexTuple({2, 4}, 4));
    CHECK(p == QPolynomial({1, 1, 2, 1}));  // 1 + q + 2q^2 + q^3
    CHECK(p.evaluate(1) == 5);
    CHECK(length_poly(IndexTuple({1, 2, 3}, 5)) == QPolynomial::constant(1));

    for (int m = 1; m <= 6; ++m)
        for (int l = 1; l <= std::min(3, m); ++l)
            for (const auto& alpha : IndexTuple::all(l, m)) {
                QPolynomial poly = length_poly(alpha);
                CHECK(poly.is_monic());
                CHECK(poly.degree() == alpha.delta());
                CHECK(poly.evaluate(1) == dimension_via_determinant(alpha));
                for (long q : {2L, 5L}) CHECK(poly.evaluate(q) == length_via_cells(alpha, q));
            }
}

TEST_CASE("dimension via determinant") {
    CHECK(dimension_via_determinant(IndexTuple({2, 4}, 4)) == 5);
    // two-row closed form alpha_1 (2 alpha_2 - alpha_1 - 1) / 2
    for (int m = 2; m <= 7; ++m)
        for (const auto& alpha : IndexTuple::all(2, m)) {
            long a1 = alpha.at(1), a2 = alpha.at(2);
            CHECK(dimension_via_determinant(alpha) == BigInt(a1 * (2 * a2 - a1 - 1) / 2));
        }
    for (int m = 1; m <= 8; ++m)
        for (int l = 1; l <= m; ++l)
            CHECK(dimension_via_determinant(theta_tuple(l, m)) == binomial(m, l));
}

TEST_CASE("dimension via limit sums") {
    // consecutive tuple starting at d: C(d + l - 1, l)
    for (int d = 1; d <= 4; ++d)
        for (int l = 1; l <= 4; ++l) {
            std::vector<int> e;
            for (int i = 0; i < l; ++i) e.push_back(d + i);
            CHECK(dimension_via_limit_sums(IndexTuple(e, d + l)) == binomial(d + l - 1, l));
        }
    CHECK(dimension_via_limit_sums(IndexTuple({2, 4}, 4)) == 5);
    CHECK(dimension_via_limit_sums(IndexTuple({1, 3, 4, 7}, 7)) ==
          dimension_via_determinant(IndexTuple({1, 3, 4, 7}, 7)));
}

TEST_CASE("dimension formulas agree with the downset") {
    for (int m = 1; m <= 7; ++m)
        for (int l = 1; l <= std::min(4, m); ++l)
            for (const auto& alpha : IndexTuple::all(l, m)) {
                CAPTURE(alpha.str());
                const BigInt k = dimension_via_determinant(alpha);
                CHECK(k == dimension_via_limit_sums(alpha));
                CHECK(k == BigInt(static_cast<long>(alpha.downset().size())));
            }
}

TEST_CASE("arithmetic progression dimension") {
    auto k = dimension_arith_progression(IndexTuple({2, 3, 4}, 5));
    REQUIRE(k.has_value());
    CHECK(*k == 4);

    auto minimal = dimension_arith_progression(IndexTuple({1, 2, 3, 4}, 6));
    REQUIRE(minimal.has_value());
    CHECK(*minimal == 1);

    CHECK_FALSE(dimension_arith_progression(IndexTuple({1, 3, 4, 7}, 7)).has_value());

    for (int m = 1; m <= 8; ++m)
        for (int l = 1; l <= std::min(4, m); ++l)
            for (const auto& alpha : IndexTuple::all(l, m))
                if (auto ap = dimension_arith_progression(alpha))
                    CHECK(*ap == dimension_via_determinant(alpha));
}

TEST_CASE("two-row parameters") {
    ChenParameters c = chen_parameters(4, 1, 2);
    CHECK(c.n == 19);
    CHECK(c.k == 5);
    CHECK(c.d == 8);

    for (long q : {2L, 3L}) {
        ChenParameters h0 = chen_parameters(4, 0, q);
        CHECK(h0.n == gaussian_binomial(4, 2, q));
        CHECK(h0.k == 6);
    }
    CHECK(chen_parameters(5, 1, 2).k == 9);

    CHECK_THROWS_AS(chen_parameters(4, 2, 2), RangeError);
    CHECK_THROWS_AS(chen_parameters(4, -1, 2), RangeError);
    CHECK_THROWS_AS(chen_parameters(2, 0, 2), RangeError);
}

TEST_CASE("two-row parameters match the general formulas") {
    for (long q : {2L, 3L})
        for (int m = 3; m <= 7; ++m)
            for (int h = 0; h <= m - 3; ++h) {
                IndexTuple alpha({m - h - 1, m}, m);
                ChenParameters c = chen_parameters(m, h, q);
                CHECK(c.n == length_via_cells(alpha, q));
                CHECK(c.k == dimension_via_determinant(alpha));
                CHECK(c.d == q_pow(q, alpha.delta()));
            }
}

TEST_CASE("distance lower bound") {
    CHECK(gv_lower_bound(IndexTuple({2, 4}, 4), 2) == 6);
    CHECK(gv_lower_bound(IndexTuple({1, 2}, 4), 2) <= 1);
    CHECK(gv_lower_bound(theta_tuple(2, 4), 2) <= 16);
    // exact value for (1,2) is (q-1)/q, strictly below 1
    GvBound tiny = gv_lower_bound_exact(IndexTuple({1, 2}, 4), 2);
    CHECK(tiny.num == 4);   // q (q^2 - q)
    CHECK(tiny.den == 8);   // q^{1+2}
    CHECK(tiny.num < tiny.den);

    for (long q : {2L, 3L, 5L})
        for (int m = 1; m <= 6; ++m)
            for (int l = 1; l <= std::min(3, m); ++l)
                for (const auto& alpha : IndexTuple::all(l, m)) {
                    GvBound b = gv_lower_bound_exact(alpha, q);
                    CHECK(b.num > 0);
                    // num/den >= q^{delta - l}  <=>  num q^l >= den q^delta
                    CHECK(b.num * q_pow(q, l) >= b.den * q_pow(q, alpha.delta()));
                    // num/den <= q^delta
                    CHECK(b.num <= b.den * q_pow(q, alpha.delta()));
                    CHECK(gv_lower_bound(alpha, q) == b.ceil());
                }
}

TEST_CASE("divisor weight formula") {
    CHECK(divisor_higher_weight(2, 4, 2, 1) == 8);
    CHECK(divisor_higher_weight(2, 4, 2, 2) == 12);
    CHECK(divisor_higher_weight(2, 5, 2, 3) == 56);
    CHECK_THROWS_AS(divisor_higher_weight(2, 4, 2, 0), RangeError);
    CHECK_THROWS_AS(divisor_higher_weight(2, 4, 2, 3), RangeError);
    CHECK_THROWS_AS(divisor_higher_weight(1, 4, 2, 1), RangeError);
}

TEST_CASE("grassmann reference values") {
    GrassmannParameters g = grassmann_reference(2, 4, 2, 1);
    CHECK(g.n == 35);
    CHECK(g.k == 6);
    CHECK(g.d == 16);
    CHECK(g.d_r == 16);
    CHECK(grassmann_reference(2, 4, 2, 3).d_r == 28);

    GrassmannParameters point = grassmann_reference(3, 3, 5, 1);
    CHECK(point.n == 1);
    CHECK(point.k == 1);
    CHECK(point.d == 1);
    CHECK(point.d_r == 1);

    CHECK_THROWS_AS(grassmann_reference(2, 4, 2, 4), RangeError);
    CHECK_THROWS_AS(grassmann_reference(3, 3, 5, 2), RangeError);
}

TEST_CASE("parameter bundle is internally consistent") {
    for (long q : {2L, 3L, 5L})
        for (int m = 1; m <= 6; ++m)
            for (int l = 1; l <= std::min(3, m); ++l)
                for (const auto& alpha : IndexTuple::all(l, m)) {
                    ParameterBundle b = compute_parameter_bundle(alpha, q);
                    CAPTURE(alpha.str());
                    CHECK(b.lengths_agree());
                    CHECK(b.dimensions_agree());
                    CHECK(b.poly_facts_hold());
                    CHECK(b.bounds_ordered());
                    CHECK(b.consistent());
                }
    ParameterBundle b = compute_parameter_bundle(IndexTuple({2, 4}, 4), 2);
    CHECK(b.n_cells == 19);
    CHECK(b.k_determinant == 5);
    CHECK(b.d_upper == 8);
    CHECK(b.d_lower.ceil() == 6);
}

TEST_CASE("divisor length") {
    CHECK(schubert_divisor_length(2, 4, 2) == 19);
    CHECK(schubert_divisor_length(2, 5, 2) == 91);
    CHECK(schubert_divisor_length(3, 6, 2) == gaussian_binomial(6, 3, 2) - 512);
    CHECK_THROWS_AS(schubert_divisor_length(1, 4, 2), RangeError);

    for (long q : {2L, 3L})
        for (int m = 3; m <= 6; ++m)
            for (int l = 2; l < m; ++l)
                CHECK(schubert_divisor_length(l, m, q) == length_via_cells(eta_tuple(l, m), q));
}
