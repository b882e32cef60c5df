#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qtails/series.hpp"

namespace qtails {

// A bound parameter value: either an exact rational constant, or a rational
// multiple of a q-monomial r*q^m with m >= 1. This is the only shape of
// parameter the verification engine specializes identities at.
class ParamValue {
public:
    ParamValue() = default; // rational 0

    static ParamValue rational(Rational r) {
        ParamValue v;
        v.r_ = std::move(r);
        v.m_ = 0;
        return v;
    }
    static ParamValue monomial(Rational r, int m) {
        if (m < 1) throw BindingError("monomial parameter needs exponent >= 1");
        ParamValue v;
        v.r_ = std::move(r);
        v.m_ = m;
        return v;
    }

    bool is_rational() const { return m_ == 0; }
    bool is_monomial() const { return m_ >= 1; }
    const Rational& coeff() const { return r_; }
    int exponent() const { return m_; }

    bool is_zero() const { return r_.is_zero() && m_ == 0; }
    bool is_rational_one() const { return m_ == 0 && r_.is_one(); }

    ParamValue times(const ParamValue& o) const {
        if (r_.is_zero() || o.r_.is_zero()) return rational(0);
        ParamValue v;
        v.r_ = r_ * o.r_;
        v.m_ = m_ + o.m_;
        return v;
    }

    ParamValue power(int e) const {
        if (e < 0) throw BindingError("parameter power: negative exponent");
        if (e == 0) return rational(1);
        ParamValue v;
        v.r_ = r_.pow(e);
        v.m_ = m_ * e;
        return v;
    }

    TruncatedSeries to_series(int order) const {
        return TruncatedSeries::monomial(r_, m_, order);
    }

    // "p/q" for rationals, "p/q*q^m" for monomials.
    std::string str() const;
    static ParamValue parse(std::string_view s); // BindingError on malformed input

    friend bool operator==(const ParamValue& a, const ParamValue& b) {
        return a.m_ == b.m_ && a.r_ == b.r_;
    }

private:
    Rational r_ = 0;
    int m_ = 0;
};

struct ParamBinding {
    std::string name;
    ParamValue value;
};

// Named parameter assignments; a name may be bound at most once.
class BindingSet {
public:
    BindingSet() = default;

    BindingSet& bind(const std::string& name, ParamValue v) {
        auto [it, inserted] = values_.emplace(name, std::move(v));
        if (!inserted) throw BindingError("duplicate binding for '" + name + "'");
        return *this;
    }
    BindingSet& bind_rational(const std::string& name, Rational r) {
        return bind(name, ParamValue::rational(std::move(r)));
    }
    BindingSet& bind_monomial(const std::string& name, Rational r, int m) {
        return bind(name, ParamValue::monomial(std::move(r), m));
    }
    BindingSet& bind_int(const std::string& name, long long v) {
        return bind(name, ParamValue::rational(Rational(v)));
    }

    const ParamValue* find(const std::string& name) const {
        auto it = values_.find(name);
        return it == values_.end() ? nullptr : &it->second;
    }
    const ParamValue& at(const std::string& name) const {
        if (const ParamValue* v = find(name)) return *v;
        throw BindingError("unbound parameter '" + name + "'");
    }
    // Integer-valued slots (truncation lengths, powers) ride on rational
    // bindings; this checks integrality and the given range.
    long long int_at(const std::string& name, long long lo, long long hi) const;

    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    // Canonical "a=q,c=1/2" form (name-sorted); used for report ordering and
    // the grid hash.
    std::string str() const;

    friend bool operator==(const BindingSet&, const BindingSet&) = default;

private:
    std::map<std::string, ParamValue> values_;
};

} // namespace qtails
