#include "qtails/qseries.hpp"

#include <algorithm>

namespace qtails {

TruncatedSeries pochhammer(const TruncatedSeries& a, int step, int n, int order) {
    if (step < 1) throw ArityError("pochhammer: step must be >= 1");
    if (n < 0) throw ArityError("pochhammer: negative length");
    TruncatedSeries acc = TruncatedSeries::one(order);
    const auto v = a.valuation();
    if (!v.has_value()) return acc; // (0; q^k)_n = 1
    for (int j = 0; j < n; ++j) {
        const long long shift = static_cast<long long>(step) * j;
        if (*v + shift > order) break; // remaining factors are 1 + O(q^{order+1})
        acc -= (acc * a).shifted_up(static_cast<int>(shift));
    }
    return acc;
}

TruncatedSeries pochhammer_inf(const TruncatedSeries& a, int step, int order) {
    if (step < 1) throw ArityError("pochhammer_inf: step must be >= 1");
    const auto v = a.valuation();
    if (!v.has_value()) return TruncatedSeries::one(order);
    // Factors with v + step*j > order are identity; this bound is exact.
    const int last = std::max(0, (order - *v) / step);
    return pochhammer(a, step, last + 1, order);
}

TruncatedSeries pochhammer(const ParamValue& a, int step, int n, int order) {
    if (step < 1) throw ArityError("pochhammer: step must be >= 1");
    if (n < 0) throw ArityError("pochhammer: negative length");
    TruncatedSeries acc = TruncatedSeries::one(order);
    if (a.coeff().is_zero()) return acc;
    const Rational neg = -a.coeff();
    for (int j = 0; j < n; ++j) {
        const long long e = a.exponent() + static_cast<long long>(step) * j;
        if (e > order) break;
        acc.mul_binomial(neg, static_cast<int>(e));
    }
    return acc;
}

TruncatedSeries pochhammer_inf(const ParamValue& a, int step, int order) {
    if (a.coeff().is_zero()) return TruncatedSeries::one(order);
    const int last = std::max(0, (order - a.exponent()) / step);
    return pochhammer(a, step, last + 1, order);
}

TruncatedSeries inv_pochhammer(const ParamValue& a, int step, int n, int order) {
    TruncatedSeries acc = TruncatedSeries::one(order);
    if (a.coeff().is_zero()) return acc;
    const Rational neg = -a.coeff();
    for (int j = 0; j < n; ++j) {
        const long long e = a.exponent() + static_cast<long long>(step) * j;
        if (e > order) break;
        acc.div_binomial(neg, static_cast<int>(e));
    }
    return acc;
}

TruncatedSeries inv_pochhammer_inf(const ParamValue& a, int step, int order) {
    if (a.coeff().is_zero()) return TruncatedSeries::one(order);
    const int last = std::max(0, (order - a.exponent()) / step);
    return inv_pochhammer(a, step, last + 1, order);
}

TruncatedSeries gaussian_binomial(int big_n, int n, int order) {
    if (big_n < 0 || n < 0) throw ArityError("gaussian_binomial: negative argument");
    if (n > big_n) return TruncatedSeries(order); // zero
    if (n == 0 || n == big_n) return TruncatedSeries::one(order);
    // Row-by-row Pascal recurrence; row M holds [M, j] for j = 0..min(n, M).
    std::vector<TruncatedSeries> row;
    row.reserve(n + 1);
    row.push_back(TruncatedSeries::one(order));
    for (int m = 1; m <= big_n; ++m) {
        const int jmax = std::min(n, m);
        std::vector<TruncatedSeries> next;
        next.reserve(jmax + 1);
        next.push_back(TruncatedSeries::one(order));
        for (int j = 1; j <= jmax; ++j) {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            TruncatedSeries t = row[j - 1];
            if (j < static_cast<int>(row.size())) t += row[j].shifted_up(j);
            next.push_back(std::move(t));
        }
        row = std::move(next);
    }
    return row[n];
}

TruncatedSeries rising_power_product(int big_n, int k, int order) {
    if (big_n < 1) throw ArityError("rising_power_product: N must be positive");
    if (k < 0) throw ArityError("rising_power_product: negative k");
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (int j = 0; j < k; ++j) {
        // factor (q^N - q^j)
        TruncatedSeries f(order);
        f.add_term(1, big_n);
        f.add_term(-1, j);
        acc *= f;
        if (acc.is_zero()) break; // k > N: the j = N factor is zero
    }
    return acc;
}

TruncatedSeries geometric_fraction(const ParamValue& c, int m, int order) {
    if (m < 0) throw ArityError("geometric_fraction: negative exponent");
    const int e = m + c.exponent();
    if (e == 0) {
        if (c.coeff().is_one()) throw PoleError("geometric_fraction: pole at c = 1, m = 0");
        return TruncatedSeries::constant((Rational(1) - c.coeff()).inverse(), order);
    }
    // 1/(1 - r q^e) = sum r^j q^{e j}
    TruncatedSeries s(order);
    Rational p = 1;
    for (long long j = 0, exp = 0; exp <= order; ++j, exp += e) {
        s.set_coeff(static_cast<int>(exp), p);
        p *= c.coeff();
    }
    return s;
}

TruncatedSeries lambert_sum(LambertFlavor flavor, int order, int start) {
    TruncatedSeries s(order);
    switch (flavor) {
    case LambertFlavor::minus_denominator:
        // q^n/(1 - q^n) = sum_j q^{n j}; coefficient of q^m is d(m)
        for (int n = 1; n <= order; ++n)
            for (int e = n; e <= order; e += n) s.add_term(1, e);
        break;
    case LambertFlavor::plus_denominator:
        for (int n = 1; n <= order; ++n) {
            Rational sign = 1;
            for (int e = n; e <= order; e += n, sign = -sign) s.add_term(sign, e);
        }
        break;
    case LambertFlavor::odd_exponents:
        for (int n = 1; 2 * n - 1 <= order; ++n) {
            const int b = 2 * n - 1;
            Rational sign = 1;
            for (int e = b; e <= order; e += b, sign = -sign) s.add_term(sign, e);
        }
        break;
    case LambertFlavor::custom_start:
        // plus_denominator flavor from n = start; the n = 0 term is the
        // constant 1/(1 + q^0) = 1/2 that several identities carry.
        if (start <= 0) {
            s.add_term(Rational(1, 2), 0);
            start = 1;
        }
        for (int n = start; n <= order; ++n) {
            Rational sign = 1;
            for (int e = n; e <= order; e += n, sign = -sign) s.add_term(sign, e);
        }
        break;
    }
    return s;
}

TruncatedSeries eval_at_monomial(const TruncatedSeries& s, const Rational& r, int m, int order) {
    if (m < 1) throw SubstitutionError("eval_at_monomial: exponent must be >= 1");
    // Coefficients of s beyond its own order are unknown; cap the result so
    // every reported coefficient is exact.
    const long long exact = static_cast<long long>(m) * s.order() + m - 1;
    const int out = static_cast<int>(std::min<long long>(order, exact));
    TruncatedSeries res(out);
    Rational p = 1;
    for (int j = 0; static_cast<long long>(j) * m <= out; ++j) {
        if (!s[j].is_zero()) res.set_coeff(j * m, s[j] * p);
        p *= r;
    }
    return res;
}

} // namespace qtails
