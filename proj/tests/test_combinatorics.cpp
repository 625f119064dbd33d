#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schubert/combinatorics.hpp"
#include "schubert/finite_field.hpp"

using namespace schubert;

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 3) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    for (long u = 0; u <= 6; ++u) CHECK(gaussian_binomial(u, 0, 3) == 1);
    CHECK(gaussian_binomial(3, 5, 2) == 0);
    CHECK(gaussian_binomial(3, -1, 2) == 0);
    CHECK_THROWS_AS(gaussian_binomial(4, 2, 1), InvalidInput);
}

TEST_CASE("gaussian binomial counts subspaces") {
    for (long q : {2L, 3L, 4L, 5L}) {
        const FieldSpec field = make_field(q);
        for (int u = 0; u <= 5; ++u)
            for (int v = 0; v <= u; ++v) {
                double work = std::pow(static_cast<double>(q), u * v);
                if (work > 7000) continue;
                CAPTURE(q);
                CAPTURE(u);
                CAPTURE(v);
                CHECK(gaussian_binomial(u, v, q) == oracles::count_subspaces_bruteforce(u, v, field));
            }
    }
    // two heavier spot checks
    CHECK(gaussian_binomial(5, 2, 2) == oracles::count_subspaces_bruteforce(5, 2, make_field(2)));
    CHECK(gaussian_binomial(4, 2, 3) == oracles::count_subspaces_bruteforce(4, 2, make_field(3)));
}

TEST_CASE("gaussian binomial symmetry") {
    for (long q : {2L, 3L, 5L})
        for (long u = 0; u <= 8; ++u)
            for (long v = 0; v <= u; ++v)
                CHECK(gaussian_binomial(u, v, q) == gaussian_binomial(u, u - v, q));
}

TEST_CASE("gaussian binomial polynomial") {
    QPolynomial p21 = gaussian_binomial_poly(2, 1);
    CHECK(p21 == QPolynomial({1, 1}));  // 1 + q
    CHECK(gaussian_binomial_poly(4, 2).evaluate(1) == 6);
    CHECK(gaussian_binomial_poly(3, 5).is_zero());
    CHECK(gaussian_binomial_poly(3, 5).degree() == -1);

    for (long q : {2L, 3L, 4L, 5L, 7L})
        for (long u = 0; u <= 8; ++u)
            for (long v = 0; v <= u; ++v)
                CHECK(gaussian_binomial_poly(u, v).evaluate(q) == gaussian_binomial(u, v, q));

    // value at 1 is the plain binomial
    for (long u = 0; u <= 8; ++u)
        for (long v = 0; v <= u; ++v) CHECK(gaussian_binomial_poly(u, v).evaluate(1) == binomial(u, v));
}

TEST_CASE("lambda special cases") {
    for (long q : {2L, 3L})
        for (long b = 0; b <= 5; ++b)
            for (long t = 0; t <= b; ++t)
                CHECK(lambda_count(0, b, 0, t, q) == gaussian_binomial(b, t, q));
    CHECK(lambda_count(2, 4, 1, 2, 2) == 6);
    CHECK(lambda_count(3, 5, 2, 1, 2) == 0);  // t < s: empty sum
    CHECK_THROWS_AS(lambda_count(2, 4, 1, 2, 1), InvalidInput);
}

TEST_CASE("lambda counts constrained subspaces") {
    // Spot of the full Lemma sweep (acceptance covers b <= 5, q in {2,3}).
    for (long q : {2L, 3L}) {
        const FieldSpec field = make_field(q);
        for (int b = 0; b <= 4; ++b)
            for (int a = 0; a <= b; ++a)
                for (int s = 0; s <= a; ++s)
                    for (int t = s; t <= b; ++t) {
                        CAPTURE(q);
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(s);
                        CAPTURE(t);
                        CHECK(lambda_count(a, b, s, t, q) ==
                              oracles::count_intersection_constrained(a, b, s, t, field));
                    }
    }
    CHECK(lambda_count(2, 4, 1, 2, 2) == oracles::count_intersection_constrained(2, 4, 1, 2, make_field(2)));
}

TEST_CASE("lambda is nonnegative on admissible parameters") {
    for (long q : {2L, 3L})
        for (long b = 0; b <= 5; ++b)
            for (long a = 0; a <= b; ++a)
                for (long s = 0; s <= a; ++s)
                    for (long t = s; t <= b; ++t) CHECK(lambda_count(a, b, s, t, q) >= 0);
}

TEST_CASE("lambda polynomial") {
    CHECK(lambda_poly(0, 3, 0, 1) == gaussian_binomial_poly(3, 1));
    CHECK(lambda_poly(0, 3, 0, 1) == QPolynomial({1, 1, 1}));
    CHECK(lambda_poly(2, 4, 1, 2).evaluate(1) == 2);  // C(2, 1)
    CHECK(lambda_poly(5, 3, 4, 2).is_zero());

    // matches the integer evaluation
    for (long q : {2L, 3L, 5L})
        for (long b = 0; b <= 5; ++b)
            for (long a = 0; a <= b; ++a)
                for (long s = 0; s <= a; ++s)
                    for (long t = s; t <= b; ++t)
                        CHECK(lambda_poly(a, b, s, t).evaluate(q) == lambda_count(a, b, s, t, q));
}

TEST_CASE("lambda polynomial at 1 is a binomial") {
    // Includes parameters with b - a < 0, where the expected value needs the
    // negative-upper-index convention.
    for (long s = 0; s <= 3; ++s)
        for (long t = s; t <= 5; ++t)
            for (long a = s; a <= 6; ++a)
                for (long b = t; b <= 6; ++b) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(s);
                    CAPTURE(t);
                    CHECK(lambda_poly(a, b, s, t).evaluate(1) ==
                          oracles::binomial_with_negative(b - a, t - s));
                }
}

TEST_CASE("bareiss determinant") {
    IntMatrix id3(3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(bareiss_determinant(id3) == 1);

    IntMatrix m2(2, {2, 1, 1, 3});
    CHECK(bareiss_determinant(m2) == 5);

    IntMatrix rep(3, {1, 2, 3, 4, 5, 6, 1, 2, 3});
    CHECK(bareiss_determinant(rep) == 0);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int order = 1; order <= 4; ++order)
        for (int trial = 0; trial < 200; ++trial) {
            IntMatrix m(order);
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) m.at(i, j) = entry(rng);
            CHECK(bareiss_determinant(m) == oracles::cofactor_determinant(m));
        }
}
