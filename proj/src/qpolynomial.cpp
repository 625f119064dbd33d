#include "schubert/qpolynomial.hpp"

#include <sstream>

namespace schubert {

namespace {
const BigInt kZero = 0;
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

QPolynomial QPolynomial::constant(const BigInt& c) {
    QPolynomial p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

QPolynomial QPolynomial::monomial(const BigInt& c, int exponent) {
    QPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, kZero);
        p.coeffs_.back() = c;
    }
    return p;
}

const BigInt& QPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    strip();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    strip();
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return QPolynomial();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : QPolynomial();
    std::vector<BigInt> out(coeffs_.size() + static_cast<size_t>(k), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
    return QPolynomial(std::move(out));
}

void QPolynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace schubert
