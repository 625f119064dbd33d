#include "schubert/finite_field.hpp"

#include <numeric>

namespace schubert {

namespace {

// Polynomials over GF(p) as coefficient vectors (constant term first),
// trailing zeros stripped. Only used while constructing a FieldSpec.
using Poly = std::vector<int>;

void strip(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, long p) {
    strip(f);
    while (f.size() >= g.size()) {
        int lead = f.back();
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) {
            int& c = f[shift + i];
            c = static_cast<int>(((c - static_cast<long>(lead) * g[i]) % p + p) % p);
        }
        strip(f);
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, long p) { return poly_mod(f, g, p).empty(); }

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of n, most significant digit = constant term. Enumerating n in
// increasing order therefore visits candidates in the required
// constant-term-first lexicographic order.
Poly monic_from_code(long n, int deg, long p) {
    Poly f(static_cast<size_t>(deg) + 1, 0);
    f[static_cast<size_t>(deg)] = 1;
    for (int i = deg - 1; i >= 0; --i) {
        f[static_cast<size_t>(i)] = static_cast<int>(n % p);
        n /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, long p) {
    int deg = static_cast<int>(f.size()) - 1;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long n = 0; n < count; ++n)
            if (divides(monic_from_code(n, d, p), f, p)) return false;
    }
    return true;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<Fq> FieldSpec::elements() const {
    std::vector<Fq> out(static_cast<size_t>(q_));
    std::iota(out.begin(), out.end(), Fq{0});
    return out;
}

std::vector<int> FieldSpec::coeffs(Fq a) const {
    std::vector<int> c(static_cast<size_t>(e_));
    long v = a;
    for (long i = 0; i < e_; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int>(v % p_);
        v /= p_;
    }
    return c;
}

FieldSpec make_field(long q, long max_q) {
    if (q < 2) throw NotAPrimePower(q);
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself is prime
    long e = 0, v = q;
    while (v > 1) {
        if (v % p != 0) throw NotAPrimePower(q);
        v /= p;
        ++e;
    }
    if (!is_prime(p)) throw NotAPrimePower(q);
    if (q > max_q) throw FieldTooLarge(q, max_q);

    FieldSpec F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = q;
    for (long n = 0;; ++n) {
        Poly f = monic_from_code(n, static_cast<int>(e), p);
        if (is_irreducible(f, p)) {
            F.modulus_ = f;
            break;
        }
    }

    // Element code <-> coefficient vector is the base-p expansion; build the
    // tables once from polynomial arithmetic mod the modulus.
    auto decode = [&](long code) {
        Poly c(static_cast<size_t>(e));
        for (long i = 0; i < e; ++i) {
            c[static_cast<size_t>(i)] = static_cast<int>(code % p);
            code /= p;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        long code = 0;
        for (size_t i = c.size(); i-- > 0;) code = code * p + c[i];
        return static_cast<Fq>(code);
    };

    F.add_.resize(static_cast<size_t>(q) * q);
    F.mul_.resize(static_cast<size_t>(q) * q);
    F.neg_.resize(static_cast<size_t>(q));
    F.inv_.assign(static_cast<size_t>(q), 0);
    for (long a = 0; a < q; ++a) {
        Poly ca = decode(a);
        Poly na(static_cast<size_t>(e));
        for (long i = 0; i < e; ++i) na[static_cast<size_t>(i)] = static_cast<int>((p - ca[static_cast<size_t>(i)]) % p);
        F.neg_[static_cast<size_t>(a)] = encode(na);
        for (long b = 0; b < q; ++b) {
            Poly cb = decode(b);
            Poly sum(static_cast<size_t>(e));
            for (long i = 0; i < e; ++i)
                sum[static_cast<size_t>(i)] =
                    static_cast<int>((ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p);
            F.add_[F.idx(static_cast<Fq>(a), static_cast<Fq>(b))] = encode(sum);

            Poly prod(ca.size() + cb.size(), 0);
            for (size_t i = 0; i < ca.size(); ++i)
                for (size_t j = 0; j < cb.size(); ++j)
                    prod[i + j] = static_cast<int>((prod[i + j] +
                                                    static_cast<long>(ca[i]) * cb[j]) %
                                                   p);
            Poly red = poly_mod(std::move(prod), F.modulus_, p);
            red.resize(static_cast<size_t>(e), 0);
            Fq m = encode(red);
            F.mul_[F.idx(static_cast<Fq>(a), static_cast<Fq>(b))] = m;
            if (m == 1) F.inv_[static_cast<size_t>(a)] = static_cast<Fq>(b);
        }
    }
    return F;
}

}  // namespace schubert
