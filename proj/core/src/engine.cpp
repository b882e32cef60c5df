#include "builders_detail.hpp"

namespace qtails {

using detail::S;
using detail::PV;

namespace {

// Coefficient sequence g_n of a GChoice. Scalar when the choice has rational
// coefficients; the eta/q-exponential choices have series-valued g_n and are
// produced incrementally by the engine loop itself.
struct ScalarG {
    const GChoice& g;
    Rational c_pow = 1;     // c^n
    Rational binom = 1;     // C(k+n-1, n)
    long long n = 0;

    std::optional<Rational> value() const {
        switch (g.kind) {
        case GChoice::Kind::coefficients:
            return n < static_cast<long long>(g.coeffs.size()) ? g.coeffs[n] : Rational(0);
        case GChoice::Kind::geometric:
            return c_pow;
        case GChoice::Kind::binomial_negative:
            return c_pow * binom;
        default:
            return std::nullopt; // series-valued
        }
    }
    void advance() {
        ++n;
        c_pow *= g.c;
        // C(k+n-1, n) = C(k+n-2, n-1) * (k+n-1)/n
        binom *= Rational(BigInt(g.k + n - 1), BigInt(n));
    }
};

// g(q^n) for n >= 1, in closed form where the choice has one.
S g_at_qn(const GChoice& g, int n, int order) {
    switch (g.kind) {
    case GChoice::Kind::coefficients: {
        S s(order);
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            const long long e = static_cast<long long>(j) * n;
            if (e > order) break;
            s.add_term(g.coeffs[j], static_cast<int>(e));
        }
        return s;
    }
    case GChoice::Kind::geometric:
        return geometric_fraction(PV::rational(g.c), n, order);
    case GChoice::Kind::eta_ratio:
        return detail::poch_q(n - 1, order); // (q)_inf / (q^n)_inf = (q)_{n-1}
    case GChoice::Kind::q_exponential_alt:
        return detail::poch_shift_inf(n + 1, order); // (q^{n+1})_inf
    case GChoice::Kind::binomial_negative: {
        S s = detail::one(order);
        for (int i = 0; i < g.k; ++i) s.div_binomial(-g.c, n);
        return s;
    }
    }
    return S(order);
}

// Multiply a running product by (1 - v q^{extra}) where v is a bound
// parameter; a no-op once the factor is 1 + O(q^{order+1}).
void mul_factor(S& s, const PV& v, int extra) {
    if (v.coeff().is_zero()) return;
    const long long e = v.exponent() + extra;
    if (e > s.order()) return;
    s.mul_binomial(-v.coeff(), static_cast<int>(e));
}

void div_factor(S& s, const PV& v, int extra) {
    if (v.coeff().is_zero()) return;
    const long long e = v.exponent() + extra;
    if (e > s.order()) return;
    s.div_binomial(-v.coeff(), static_cast<int>(e));
}

} // namespace

// sum_k [n,k] a^k t^{n-k} RPP(N,k) (q^N)_{n-k}: the inner bracket of the
// right side, with the a^k/t^k factor folded into rising_power_product so no
// negative powers ever appear. With t = 0 only the k = n slice survives.
// Also used directly by the finite transformation entry in the registry.
S engine_inner_bracket(int n, int n_finite, const PV& a, const PV& t, int order) {
    S acc(order);
    const int kmax = std::min(n, n_finite);
    if (t.is_zero()) {
        if (n > n_finite) return acc; // RPP(N, n) = 0
        const int shift = static_cast<int>(
            std::min<long long>(static_cast<long long>(a.exponent()) * n, order + 1));
        return rising_power_product(n_finite, n, order).scaled(a.coeff().pow(n)).shifted_up(shift);
    }
    for (int k = 0; k <= kmax; ++k) {
        const PV coef = a.power(k).times(t.power(n - k));
        if (coef.coeff().is_zero() && k > 0) continue;
        S term = detail::gauss_quot(n, k, order);
        term *= rising_power_product(n_finite, k, order);
        term *= detail::poch_shift(n_finite, n - k, order);
        term = term.scaled(coef.coeff()).shifted_up(std::min(coef.exponent(), order + 1));
        acc += term;
    }
    return acc;
}

std::pair<S, S> theorem1_engine(const GChoice& g, const PV& a, const PV& t, int n_finite,
                                int order, const VerifyOptions& opts) {
    if (n_finite < 1) throw BindingError("theorem1_engine: N must be positive");
    const bool t_zero = t.is_zero();
    if (!t_zero && !t.is_monomial())
        throw BindingError("theorem1_engine: t must be a monomial or exactly 0");
    if (a.is_rational_one()) throw NotAUnit("theorem1_engine: (a)_n has no inverse at a = 1");

    // (t)_N / (a)_N, the tail both sides share.
    const S subtracted = pochhammer(t, 1, n_finite, order) * inv_pochhammer(a, 1, n_finite, order);

    // ---- left side: sum_n g_n [ (a q^N)_n (t)_n / ((t q^N)_n (a)_n) - (t)_N/(a)_N ]
    S lhs(order);
    {
        S p_aqn = detail::one(order), p_t = detail::one(order);
        S inv_tqn = detail::one(order), inv_a = detail::one(order);
        // series-valued g_n for the eta/q-exponential choices
        S g_series = g.kind == GChoice::Kind::eta_ratio ? detail::euler_inf(order)
                                                        : detail::one(order);
        ScalarG scalar{g};
        SumGuard guard(opts.sum.guard);
        const bool finite_g = g.kind == GChoice::Kind::coefficients;
        for (int n = 0;; ++n) {
            if (n > 0) {
                const int j = n - 1;
                mul_factor(p_aqn, a, n_finite + j);
                mul_factor(p_t, t, j);
                div_factor(inv_tqn, t, n_finite + j);
                div_factor(inv_a, a, j);
                if (g.kind == GChoice::Kind::eta_ratio) {
                    g_series.div_binomial(-1, n); // (q)_inf/(q)_n
                } else if (g.kind == GChoice::Kind::q_exponential_alt) {
                    g_series.div_binomial(-1, n); // now 1/(q)_n; shift applied below
                }
                scalar.advance();
            }
            S bracket = p_aqn * p_t * inv_tqn * inv_a - subtracted;
            S term(order);
            if (auto gs = scalar.value()) {
                term = bracket.scaled(*gs);
            } else if (g.kind == GChoice::Kind::eta_ratio) {
                term = bracket * g_series;
            } else { // q_exponential_alt: (-1)^n q^{n(n+1)/2} / (q)_n
                term = (bracket * g_series)
                           .shifted_up(std::min(detail::tri(n), order + 1))
                           .scaled(n % 2 == 0 ? 1 : -1);
            }
            if (finite_g) {
                // g_n vanishes beyond the supplied coefficients.
                if (n >= static_cast<int>(g.coeffs.size())) break;
                lhs += term.truncated(order);
                continue;
            }
            if (!guard.admit(term.valuation(), order)) break;
            lhs += term.truncated(order);
        }
    }

    // ---- right side: (t)_N/(a)_N sum_{n>=1} inner_n g(q^n) / (q)_n
    S rhs(order);
    {
        S inv_q = detail::one(order); // 1/(q)_n
        SumGuard guard(opts.sum.guard);
        const int stop = t_zero ? n_finite : -1;
        for (int n = 1;; ++n) {
            if (stop > 0 && n > stop) break;
            if (n <= order) inv_q.div_binomial(-1, n);
            S term = engine_inner_bracket(n, n_finite, a, t, order);
            if (!term.is_zero()) {
                term *= g_at_qn(g, n, order);
                term *= inv_q;
            }
            if (stop > 0) {
                rhs += term.truncated(order);
                continue;
            }
            if (!guard.admit(term.valuation(), order)) break;
            rhs += term.truncated(order);
        }
        rhs *= subtracted;
    }
    return {lhs, rhs};
}

} // namespace qtails
