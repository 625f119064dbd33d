#ifndef SCHUBERT_QPOLYNOMIAL_HPP
#define SCHUBERT_QPOLYNOMIAL_HPP

#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

// Integer-coefficient polynomial in the indeterminate q, stored densely by
// exponent. Degrees stay small here (at most l*(m-l)), so dense is right.
//
// The zero polynomial has an empty coefficient vector and degree() == -1.
class QPolynomial {
   public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);
    static QPolynomial constant(const BigInt& c);
    static QPolynomial monomial(const BigInt& c, int exponent);

    // -1 marks the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of q^i (zero beyond the degree).
    const BigInt& coeff(int i) const;

    BigInt evaluate(const BigInt& q) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

    // Multiply by q^k.
    QPolynomial shifted(int k) const;

    bool operator==(const QPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    // "1 + q + 2q^2" style, for reports and tests.
    std::string str() const;

   private:
    void strip();
    std::vector<BigInt> coeffs_;  // coeffs_[i] multiplies q^i; no trailing zeros
};

}  // namespace schubert

#endif
