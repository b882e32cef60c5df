#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtails/rational.hpp"

namespace qtails {

// Formal power series in q over the exact rationals, truncated at a fixed
// order N: coefficients of q^0..q^N are tracked, everything above is unknown.
//
// Truncation contract: binary operations on series of orders N1, N2 yield
// order min(N1, N2). A series is never silently extended.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(check_order(order)), c_(order + 1) {}

    // Missing trailing coefficients are zero; throws ArityError if more than
    // order+1 coefficients are supplied.
    static TruncatedSeries make(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& value, int order) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(1, order); }

    // coeff * q^exponent; the term simply vanishes if exponent > order.
    static TruncatedSeries monomial(const Rational& coeff, int exponent, int order) {
        TruncatedSeries s(order);
        if (exponent <= order) s.c_[exponent] = coeff;
        return s;
    }

    int order() const { return order_; }
    const Rational& operator[](int i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    void set_coeff(int i, Rational v) { c_[i] = std::move(v); }

    // Least exponent with a nonzero coefficient, or nullopt when every
    // tracked coefficient is zero ("above truncation").
    std::optional<int> valuation() const {
        for (int i = 0; i <= order_; ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }
    bool is_zero() const { return !valuation().has_value(); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const Rational& r) const;

    // Multiplicative inverse up to the truncation order; NotAUnit when the
    // constant term is zero.
    TruncatedSeries inverse() const;

    TruncatedSeries pow(int e) const; // e >= 0

    // Restriction to a lower order (new_order <= order).
    TruncatedSeries truncated(int new_order) const;

    // Multiplication by q^m. Order is preserved; coefficients shifted past
    // the truncation are dropped (they were about to become unknown anyway).
    TruncatedSeries shifted_up(int m) const;

    // In-place O(order) fused operations; m == 0 degenerates to scaling by
    // the scalar (1 + r).
    void mul_binomial(const Rational& r, int m); // *= (1 + r q^m)
    void div_binomial(const Rational& r, int m); // /= (1 + r q^m); NotAUnit if 1 + r == 0 at m == 0
    void add_scaled_shift(const TruncatedSeries& s, const Rational& r, int m); // += r q^m s
    void add_term(const Rational& r, int m) {
        if (m <= order_) c_[m] += r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    // First exponent in 0..up_to where the two series disagree.
    std::optional<int> first_mismatch(const TruncatedSeries& other, int up_to) const;

    // Human-readable "1 - q + 2*q^3 + ..." form, mainly for diagnostics.
    std::string str(int max_terms = 12) const;

private:
    int order_;
    std::vector<Rational> c_;

    static int check_order(int order);
    std::vector<int> nonzero_indices(int up_to) const;
};

struct SumOptions {
    // Abort a formal sum after this many consecutive terms that fail to push
    // the maximum term valuation higher.
    int guard = 50;
};

// Formal sum of term(first_index), term(first_index+1), ... Terms are added
// until one lies entirely above the truncation order (or is exactly zero);
// a stalled valuation for `guard` consecutive terms raises NonConvergentSum.
TruncatedSeries sum_formal(int order, int first_index,
                           const std::function<TruncatedSeries(int)>& term,
                           const SumOptions& opts = {});

// Shared stall detector for hand-rolled summation loops.
class SumGuard {
public:
    explicit SumGuard(int guard) : guard_(guard) {}

    // True: accumulate the term and continue. False: the term (and, for the
    // paper's sums, every later one) is above the truncation -- stop.
    bool admit(const std::optional<int>& val, int order) {
        if (!val.has_value() || *val > order) return false;
        if (*val > best_) {
            best_ = *val;
            stall_ = 0;
        } else if (++stall_ >= guard_) {
            throw NonConvergentSum("formal sum: no valuation progress after " +
                                   std::to_string(guard_) + " terms");
        }
        return true;
    }

private:
    int guard_;
    int best_ = -1;
    int stall_ = 0;
};

} // namespace qtails
