#pragma once

// Exact arithmetic kernel: arbitrary-precision integers/rationals and
// quadratic surd expressions (p + q*sqrt(n))/r with decidable comparison.
// No floating point anywhere; every comparison is an exact integer predicate.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace severi {

using BigInt = mpz_class;
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

struct negative_radicand : error {
    using error::error;
};

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// renders "p" or "p/q" with q > 0
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// floor(a/b), b != 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct IsqrtResult {
    BigInt root;  // floor(sqrt(n))
    bool exact;   // root*root == n
};

inline IsqrtResult isqrt(const BigInt& n) {
    if (n < 0) throw negative_radicand("isqrt of negative value " + to_string(n));
    IsqrtResult res;
    BigInt rem;
    mpz_sqrtrem(res.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    res.exact = (rem == 0);
    return res;
}

// Value (p + q*sqrt(n))/r.  Canonical form after construction:
//   r > 0; n >= 0 and not a perfect square when q != 0; q == 0 implies n == 0;
//   gcd(|p|, |q|, r) == 1.
// Equal values therefore have equal component tuples.
struct SurdExpr {
    BigInt p{0};
    BigInt q{0};
    BigInt n{0};
    BigInt r{1};

    SurdExpr() = default;

    SurdExpr(BigInt p_, BigInt q_, BigInt n_, BigInt r_)
        : p(std::move(p_)), q(std::move(q_)), n(std::move(n_)), r(std::move(r_)) {
        if (r == 0) throw domain_error("surd with zero denominator");
        if (n < 0) throw negative_radicand("surd with negative radicand " + to_string(n));
        if (r < 0) {
            p = -p;
            q = -q;
            r = -r;
        }
        if (q == 0) {
            n = 0;
        } else {
            const IsqrtResult s = isqrt(n);
            if (s.exact) {  // fold q*sqrt(n) into the rational part
                p += q * s.root;
                q = 0;
                n = 0;
            }
        }
        BigInt g = gcd(gcd(abs(p), abs(q)), r);
        if (g > 1) {
            p /= g;
            q /= g;
            r /= g;
        }
    }

    static SurdExpr from_rational(const Rational& x) {
        return SurdExpr(BigInt(x.get_num()), 0, 0, BigInt(x.get_den()));
    }

    bool is_rational() const { return q == 0; }

    // pre: is_rational()
    Rational rational_value() const { return make_rational(p, r); }

    SurdExpr operator-() const {
        SurdExpr e;
        e.p = -p;
        e.q = -q;
        e.n = n;
        e.r = r;
        return e;  // canonical form is preserved under negation
    }

    bool operator==(const SurdExpr&) const = default;
};

namespace detail {

// sign of P + Q*sqrt(n), n >= 0
inline int surd_sign(const BigInt& P, const BigInt& Q, const BigInt& n) {
    if (Q == 0 || n == 0) return sgn(P);
    if (n == 1) return sgn(BigInt(P + Q));
    const int sp = sgn(P);
    const int sq = sgn(Q);
    if (sq > 0 && sp >= 0) return 1;
    if (sq < 0 && sp <= 0) return -1;
    // P and Q*sqrt(n) have strictly opposite signs: compare P^2 against Q^2*n
    const int c = cmp(BigInt(P * P), BigInt(Q * Q * n));
    if (c == 0) return 0;
    return sp > 0 ? c : -c;
}

inline std::strong_ordering ordering_from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace detail

// exact order of e against the rational x
inline std::strong_ordering surd_cmp(const SurdExpr& e, const Rational& x) {
    const BigInt a(x.get_num());
    const BigInt b(x.get_den());  // b > 0 for canonical mpq
    // e - x = (p*b - a*r + q*b*sqrt(n)) / (r*b), denominator positive
    const BigInt P = e.p * b - a * e.r;
    const BigInt Q = e.q * b;
    return detail::ordering_from_sign(detail::surd_sign(P, Q, e.n));
}

// floor of the value of e
inline BigInt surd_floor(const SurdExpr& e) {
    if (e.q == 0) return floor_div(e.p, e.r);
    // |q|*sqrt(n) = sqrt(q^2 n), bracketed by its integer square root:
    // the numerator p + q*sqrt(n) lies in a half-open interval of width 1,
    // so its floor-quotient by r is determined exactly.
    const IsqrtResult s = isqrt(BigInt(e.q * e.q * e.n));
    BigInt num;
    if (e.q > 0) {
        num = e.p + s.root;  // value in [num/r, (num+1)/r), exact when s.exact
    } else {
        num = s.exact ? BigInt(e.p - s.root) : BigInt(e.p - s.root - 1);
    }
    return floor_div(num, e.r);
}

// greatest integer strictly below the value of e
inline BigInt strict_sup_int(const SurdExpr& e) {
    if (e.q != 0) {
        const IsqrtResult s = isqrt(BigInt(e.q * e.q * e.n));
        if (!s.exact) return surd_floor(e);  // irrational value, floor < value
        // q*sqrt(n) rational after all (non-canonical input): fall through
        const BigInt num = e.q > 0 ? BigInt(e.p + s.root) : BigInt(e.p - s.root);
        if (mpz_divisible_p(num.get_mpz_t(), e.r.get_mpz_t()))
            return BigInt(num / e.r - 1);
        return floor_div(num, e.r);
    }
    if (mpz_divisible_p(e.p.get_mpz_t(), e.r.get_mpz_t()))
        return BigInt(e.p / e.r - 1);
    return floor_div(e.p, e.r);
}

inline BigInt surd_ceil(const SurdExpr& e) { return -surd_floor(-e); }

inline std::string to_string(const SurdExpr& e) {
    if (e.q == 0) {
        if (e.r == 1) return to_string(e.p);
        return to_string(e.p) + "/" + to_string(e.r);
    }
    std::string root = "sqrt(" + to_string(e.n) + ")";
    if (abs(e.q) != 1) root = to_string(BigInt(abs(e.q))) + "*" + root;
    std::string core;
    if (e.p == 0) {
        core = (e.q < 0 ? "-" : "") + root;
        if (e.r == 1) return core;
        return core + "/" + to_string(e.r);
    }
    core = to_string(e.p) + (e.q < 0 ? " - " : " + ") + root;
    if (e.r == 1) return "(" + core + ")";
    return "(" + core + ")/" + to_string(e.r);
}

}  // namespace severi
