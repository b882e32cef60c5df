#pragma once

// Internal helpers shared by the catalog builders and the engine.

#include "qtails/catalog.hpp"

namespace qtails::detail {

using S = TruncatedSeries;
using PV = ParamValue;

inline PV mono(Rational r, int m) { return PV::monomial(std::move(r), m); }
inline PV mono_q() { return PV::monomial(1, 1); }
inline PV rat(Rational r) { return PV::rational(std::move(r)); }

inline S one(int order) { return S::one(order); }

// (q; q)_n and friends
inline S poch_q(int n, int order) { return pochhammer(mono_q(), 1, n, order); }
inline S inv_poch_q(int n, int order) { return inv_pochhammer(mono_q(), 1, n, order); }
inline S euler_inf(int order) { return pochhammer_inf(mono_q(), 1, order); } // (q)_inf
inline S inv_euler_inf(int order) { return inv_pochhammer_inf(mono_q(), 1, order); }

// (q^a; q)_len with a >= 1
inline S poch_shift(int a, int len, int order) { return pochhammer(mono(1, a), 1, len, order); }
inline S poch_shift_inf(int a, int order) { return pochhammer_inf(mono(1, a), 1, order); }

// prod_{j=0}^{n-1} (x - y q^j): the Laurent-free form of (y/x)_n x^n.
inline S ratio_poch(const PV& x, const PV& y, int n, int order) {
    S acc = one(order);
    for (int j = 0; j < n; ++j) {
        S f(order);
        if (x.exponent() <= order) f.add_term(x.coeff(), x.exponent());
        if (y.exponent() + j <= order) f.add_term(-y.coeff(), y.exponent() + j);
        acc *= f;
        if (acc.is_zero()) break;
    }
    return acc;
}

// Gaussian binomial [n, k] as (q^{n-k+1})_k / (q)_k; equal to the Pascal-form
// gaussian_binomial (property-tested) and cheaper for large n, small k.
inline S gauss_quot(int n, int k, int order) {
    if (k < 0 || k > n) return S(order);
    return poch_shift(n - k + 1, k, order) * inv_poch_q(k, order);
}

// Triangular number n(n+1)/2 as int (throws far beyond any usable order).
inline int tri(long long n) { return static_cast<int>(n * (n + 1) / 2); }

// sum_{i=0}^{e-1} c^i
inline Rational power_partial_sum(const Rational& c, int e) {
    Rational acc = 0, p = 1;
    for (int i = 0; i < e; ++i) {
        acc += p;
        p *= c;
    }
    return acc;
}

inline Rational binom_rational(long long top, long long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    Rational acc = 1;
    for (long long i = 1; i <= bottom; ++i) acc *= Rational(BigInt(top - bottom + i), BigInt(i));
    return acc;
}

// sigma(q) = sum q^{n(n+1)/2} / (-q; q)_n
inline S sigma_canonical(int order) {
    S acc(order), inv = one(order);
    for (long long n = 0; tri(n) <= order; ++n) {
        if (n > 0) inv.div_binomial(1, static_cast<int>(n));
        acc.add_scaled_shift(inv, 1, tri(n));
    }
    return acc;
}

// delta(q) = sum_{n>=0} q^{n^2} / (-q; q^2)_n
inline S delta_by_quotients(int order) {
    S acc(order), inv = one(order);
    for (long long n = 0; n * n <= order; ++n) {
        if (n > 0) inv.div_binomial(1, static_cast<int>(2 * n - 1));
        acc.add_scaled_shift(inv, 1, static_cast<int>(n * n));
    }
    return acc;
}

// delta(q) = 1 + sum_{n>=1} (-1)^{n-1} q^n (q^2; q^2)_{n-1}
inline S delta_by_tails(int order) {
    S acc = one(order);
    S prod = one(order); // (q^2; q^2)_{n-1}
    for (int n = 1; n <= order; ++n) {
        if (n >= 2 && 2 * (n - 1) <= order) prod.mul_binomial(-1, 2 * (n - 1));
        acc.add_scaled_shift(prod, n % 2 == 1 ? 1 : -1, n);
    }
    return acc;
}

// -sum_{n>=1} (-c)^n q^{n(n+1)/2} / ((q)_n (1 - q^n)): middle of the FFW chain.
inline S ffw_middle_sum(const Rational& c, int order) {
    S acc(order), inv = one(order);
    Rational pw = 1; // (-c)^n
    for (long long n = 1; tri(n) <= order; ++n) {
        inv.div_binomial(-1, static_cast<int>(n));
        pw *= -c;
        S term = inv;
        term.div_binomial(-1, static_cast<int>(n));
        acc.add_scaled_shift(term, -pw, tri(n));
    }
    return acc;
}

// sum q^n/(1-q^n) - sum (c)_n q^n/(1-q^n): right end of the FFW chain.
inline S ffw_right_sum(const Rational& c, int order) {
    S acc = lambert_sum(LambertFlavor::minus_denominator, order);
    S poch_c = one(order); // (c; q)_n
    for (int n = 1; n <= order; ++n) {
        poch_c.mul_binomial(-c, n - 1);
        if (poch_c.is_zero()) break; // c = 1 kills every later term
        S term = poch_c;
        term.div_binomial(-1, n);
        acc.add_scaled_shift(term, -1, n);
    }
    return acc;
}

// eta(24z) as a q-series: q * (q^24; q^24)_inf (exponents == 1 mod 24).
inline S eta24(int order) {
    return pochhammer_inf(mono(1, 24), 24, order).shifted_up(1);
}

} // namespace qtails::detail
