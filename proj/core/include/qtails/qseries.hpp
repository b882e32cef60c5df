#pragma once

#include "qtails/param.hpp"
#include "qtails/series.hpp"

namespace qtails {

// q-series building blocks. Everything is exact; `order` is the truncation.
//
// Pochhammer convention: (a; q^k)_n = prod_{j=0}^{n-1} (1 - a q^{k j}),
// (a; q^k)_inf the corresponding infinite product, cut at the first factor
// that is 1 + O(q^{order+1}).

TruncatedSeries pochhammer(const TruncatedSeries& a, int step, int n, int order);
TruncatedSeries pochhammer_inf(const TruncatedSeries& a, int step, int order);

// Fast paths for rational/monomial parameters (every factor is a binomial).
TruncatedSeries pochhammer(const ParamValue& a, int step, int n, int order);
TruncatedSeries pochhammer_inf(const ParamValue& a, int step, int order);
TruncatedSeries inv_pochhammer(const ParamValue& a, int step, int n, int order);
TruncatedSeries inv_pochhammer_inf(const ParamValue& a, int step, int order);

// Gaussian binomial [N, n]: palindromic polynomial of degree n(N-n) with
// nonnegative integer coefficients. Computed by the Pascal recurrence
// [N, n] = [N-1, n-1] + q^n [N-1, n], so no division is involved.
TruncatedSeries gaussian_binomial(int big_n, int n, int order);

// prod_{j=0}^{k-1} (q^N - q^j): the Laurent-free form of (q^{-N})_k q^{Nk}.
// Zero for k > N (the j = N factor vanishes).
TruncatedSeries rising_power_product(int big_n, int k, int order);

// 1 / (1 - c q^m) expanded exactly; PoleError at m = 0 with c = 1.
TruncatedSeries geometric_fraction(const ParamValue& c, int m, int order);

enum class LambertFlavor {
    minus_denominator, // sum q^n / (1 - q^n): divisor-count coefficients
    plus_denominator,  // sum q^n / (1 + q^n)
    odd_exponents,     // sum q^{2n-1} / (1 + q^{2n-1})
    custom_start,      // plus_denominator flavor summed from `start` (start = 0 contributes 1/2)
};
TruncatedSeries lambert_sum(LambertFlavor flavor, int order, int start = 1);

// Substitution x := r q^m into s = sum s_j x^j, m >= 1 (SubstitutionError at
// m = 0). Exact for exponents <= min(order, m*order(s) + m - 1).
TruncatedSeries eval_at_monomial(const TruncatedSeries& s, const Rational& r, int m, int order);

} // namespace qtails
