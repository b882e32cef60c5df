#include "qtails/series.hpp"

#include <algorithm>
#include <sstream>

namespace qtails {

int TruncatedSeries::check_order(int order) {
    if (order < 0) throw ArityError("TruncatedSeries: negative order");
    return order;
}

TruncatedSeries TruncatedSeries::make(int order, std::vector<Rational> coeffs) {
    TruncatedSeries s(order);
    if (static_cast<int>(coeffs.size()) > order + 1)
        throw ArityError("make: " + std::to_string(coeffs.size()) +
                         " coefficients exceed order " + std::to_string(order));
    std::move(coeffs.begin(), coeffs.end(), s.c_.begin());
    return s;
}

std::vector<int> TruncatedSeries::nonzero_indices(int up_to) const {
    std::vector<int> idx;
    idx.reserve(up_to + 1);
    for (int i = 0; i <= up_to; ++i)
        if (!c_[i].is_zero()) idx.push_back(i);
    return idx;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    // Convolve over the sparser operand; q-products are full of zeros and
    // this turns most Pochhammer factors into O(order) work.
    auto ia = a.nonzero_indices(n);
    auto ib = b.nonzero_indices(n);
    const TruncatedSeries* outer = &a;
    const TruncatedSeries* inner = &b;
    if (ib.size() < ia.size()) {
        std::swap(outer, inner);
        std::swap(ia, ib);
    }
    for (int i : ia) {
        const Rational& ci = outer->c_[i];
        for (int j = 0; i + j <= n; ++j) {
            const Rational& cj = inner->c_[j];
            if (!cj.is_zero()) r.c_[i + j] += ci * cj;
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& r) const {
    TruncatedSeries s(order_);
    if (r.is_zero()) return s;
    for (int i = 0; i <= order_; ++i)
        if (!c_[i].is_zero()) s.c_[i] = c_[i] * r;
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw NotAUnit("inverse: constant term is zero");
    TruncatedSeries r(order_);
    const Rational inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    const auto nz = nonzero_indices(order_);
    for (int i = 1; i <= order_; ++i) {
        Rational acc = 0;
        for (int j : nz) {
            if (j == 0) continue;
            if (j > i) break;
            acc += c_[j] * r.c_[i - j];
        }
        if (!acc.is_zero()) r.c_[i] = -(inv0 * acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw ArityError("pow: negative exponent");
    TruncatedSeries acc = one(order_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw ArityError("truncated: cannot extend a series");
    TruncatedSeries r(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
    return r;
}

TruncatedSeries TruncatedSeries::shifted_up(int m) const {
    TruncatedSeries r(order_);
    for (int i = order_ - m; i >= 0; --i) r.c_[i + m] = c_[i];
    return r;
}

void TruncatedSeries::mul_binomial(const Rational& r, int m) {
    if (m == 0) {
        const Rational f = Rational(1) + r;
        for (auto& c : c_)
            if (!c.is_zero()) c *= f;
        return;
    }
    for (int i = order_; i >= m; --i)
        if (!c_[i - m].is_zero()) c_[i] += r * c_[i - m];
}

void TruncatedSeries::div_binomial(const Rational& r, int m) {
    if (m == 0) {
        const Rational f = Rational(1) + r;
        if (f.is_zero()) throw NotAUnit("div_binomial: dividing by zero constant");
        const Rational inv = f.inverse();
        for (auto& c : c_)
            if (!c.is_zero()) c *= inv;
        return;
    }
    for (int i = m; i <= order_; ++i)
        if (!c_[i - m].is_zero()) c_[i] -= r * c_[i - m];
}

void TruncatedSeries::add_scaled_shift(const TruncatedSeries& s, const Rational& r, int m) {
    if (r.is_zero()) return;
    const int top = std::min(order_ - m, s.order_);
    for (int i = 0; i <= top; ++i)
        if (!s.c_[i].is_zero()) c_[i + m] += r * s.c_[i];
}

std::optional<int> TruncatedSeries::first_mismatch(const TruncatedSeries& other, int up_to) const {
    for (int i = 0; i <= up_to; ++i)
        if (c_[i] != other.c_[i]) return i;
    return std::nullopt;
}

std::string TruncatedSeries::str(int max_terms) const {
    std::ostringstream os;
    int printed = 0;
    for (int i = 0; i <= order_ && printed < max_terms; ++i) {
        if (c_[i].is_zero()) continue;
        if (printed > 0) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        const Rational a = c_[i].abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        ++printed;
    }
    if (printed == 0) return "0";
    if (printed == max_terms) os << " + ...";
    os << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

TruncatedSeries sum_formal(int order, int first_index,
                           const std::function<TruncatedSeries(int)>& term,
                           const SumOptions& opts) {
    TruncatedSeries acc(order);
    SumGuard guard(opts.guard);
    for (int n = first_index;; ++n) {
        TruncatedSeries t = term(n);
        if (!guard.admit(t.valuation(), order)) break;
        acc += t.truncated(order);
    }
    return acc;
}

} // namespace qtails
