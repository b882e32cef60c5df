#include "qtails/param.hpp"

#include <ostream>
#include <sstream>

namespace qtails {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::domain_error("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) throw bad();
        std::size_t i = 0;
        bool neg = false;
        if (part[0] == '+' || part[0] == '-') {
            neg = part[0] == '-';
            i = 1;
        }
        if (i == part.size()) throw bad();
        BigInt v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
            v = v * 10 + (part[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    return {parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1))};
}

std::string ParamValue::str() const {
    if (is_rational()) return r_.str();
    std::string s = r_.str();
    s += "*q^";
    s += std::to_string(m_);
    return s;
}

ParamValue ParamValue::parse(std::string_view s) {
    // "p", "p/q", "p/q*q^m"; a bare "q^m" or "q" means coefficient 1.
    try {
        std::string_view rat = s;
        int m = 0;
        const auto star = s.find('*');
        if (star != std::string_view::npos) {
            rat = s.substr(0, star);
            std::string_view mon = s.substr(star + 1);
            if (mon == "q") {
                m = 1;
            } else if (mon.rfind("q^", 0) == 0) {
                m = std::stoi(std::string(mon.substr(2)));
            } else {
                throw BindingError("bad monomial part");
            }
        } else if (s == "q") {
            return monomial(1, 1);
        } else if (s.rfind("q^", 0) == 0) {
            return monomial(1, std::stoi(std::string(s.substr(2))));
        }
        Rational r = Rational::parse(rat);
        return m == 0 ? rational(std::move(r)) : monomial(std::move(r), m);
    } catch (const BindingError&) {
        throw;
    } catch (const std::exception&) {
        throw BindingError("cannot parse parameter value '" + std::string(s) + "'");
    }
}

long long BindingSet::int_at(const std::string& name, long long lo, long long hi) const {
    const ParamValue& v = at(name);
    if (!v.is_rational() || !v.coeff().is_integer())
        throw BindingError("parameter '" + name + "' must be an integer");
    const BigInt& n = v.coeff().num();
    if (n < lo || n > hi)
        throw BindingError("parameter '" + name + "' out of range [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    return static_cast<long long>(n);
}

std::string BindingSet::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : values_) {
        if (!first) os << ",";
        first = false;
        os << name << "=" << value.str();
    }
    return os.str();
}

} // namespace qtails
