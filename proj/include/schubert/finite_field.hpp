#ifndef SCHUBERT_FINITE_FIELD_HPP
#define SCHUBERT_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

// A field element is its canonical integer encoding: the coefficient vector
// (c_0, ..., c_{e-1}) of the residue class read as sum c_i p^i, so codes run
// 0 .. q-1 with 0 and 1 the additive and multiplicative identities.
using Fq = std::uint16_t;

// GF(p^e) with full arithmetic tables, immutable once built. For e > 1 the
// modulus is the lexicographically smallest monic irreducible polynomial of
// degree e over GF(p), coefficients compared from the constant term upward;
// for e = 1 this convention yields the polynomial x.
class FieldSpec {
   public:
    long p() const { return p_; }
    long e() const { return e_; }
    long q() const { return q_; }
    // Coefficients c_0, ..., c_e with c_e = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
    Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
    Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const {
        if (a == 0) throw DivisionByZero();
        return inv_[a];
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    // All q elements in canonical encoding order: 0, 1, 2, ...
    std::vector<Fq> elements() const;

    // Base-p digits (c_0, ..., c_{e-1}) of an encoding.
    std::vector<int> coeffs(Fq a) const;

    bool operator==(const FieldSpec& rhs) const {
        return p_ == rhs.p_ && e_ == rhs.e_ && modulus_ == rhs.modulus_;
    }

    friend FieldSpec make_field(long q, long max_q);

   private:
    FieldSpec() = default;
    size_t idx(Fq a, Fq b) const { return static_cast<size_t>(a) * q_ + b; }

    long p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

// Builds GF(q) for a prime power q <= max_q. Deterministic: repeated calls
// construct the same modulus and the same tables.
// Throws NotAPrimePower or FieldTooLarge.
FieldSpec make_field(long q, long max_q = 256);

}  // namespace schubert

#endif
