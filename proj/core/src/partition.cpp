#include "qtails/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace qtails {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ArityError("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ArityError("Partition: parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

PartitionStats stats(std::span<const int> parts) {
    PartitionStats st;
    if (parts.empty()) return st; // empty partition: all zero by convention
    st.num_parts = static_cast<int>(parts.size());
    st.largest = parts.front();
    st.smallest = parts.back();
    st.rank = st.largest - st.num_parts;
    for (int p : parts) {
        if (p == st.largest) ++st.largest_mult;
        if (p == st.smallest) ++st.smallest_mult;
    }
    int prev = 0;
    for (int p : parts)
        if (p != prev) {
            ++st.num_distinct;
            prev = p;
        }
    return st;
}

int crank(std::span<const int> parts) {
    if (parts.empty()) return 0;
    int ones = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
    if (ones == 0) return parts.front();
    int over = 0;
    for (int p : parts) {
        if (p <= ones) break;
        ++over;
    }
    return over - ones;
}

namespace {

using Visitor = std::function<bool(std::span<const int>)>;

// All partitions, parts chosen largest-first: descending lexicographic order.
bool gen_all(int remaining, int max_part, std::vector<int>& acc, const Visitor& visit) {
    if (remaining == 0) return visit(acc);
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        acc.push_back(v);
        if (!gen_all(remaining - v, v, acc, visit)) {
            acc.pop_back();
            return false;
        }
        acc.pop_back();
    }
    return true;
}

// Distinct parts, each > floor.
bool gen_distinct(int remaining, int max_part, int floor, std::vector<int>& acc,
                  const Visitor& visit) {
    if (remaining == 0) return visit(acc);
    for (int v = std::min(remaining, max_part); v > floor; --v) {
        acc.push_back(v);
        if (!gen_distinct(remaining - v, v - 1, floor, acc, visit)) {
            acc.pop_back();
            return false;
        }
        acc.pop_back();
    }
    return true;
}

// Only the smallest part may repeat: a strictly decreasing prefix closed by a
// run of the final value.
bool gen_smallest_repeats(int remaining, int max_part, std::vector<int>& acc,
                          const Visitor& visit) {
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        if (remaining % v == 0) {
            const int mult = remaining / v;
            acc.insert(acc.end(), mult, v);
            const bool keep = visit(acc);
            acc.erase(acc.end() - mult, acc.end());
            if (!keep) return false;
        }
        if (remaining - v >= 1 && v >= 2) {
            acc.push_back(v);
            if (!gen_smallest_repeats(remaining - v, v - 1, acc, visit)) {
                acc.pop_back();
                return false;
            }
            acc.pop_back();
        }
    }
    return true;
}

// Only the largest part may repeat: a run of the leading value followed by
// strictly decreasing distinct smaller parts.
bool gen_largest_repeats(int n, const Visitor& visit) {
    std::vector<int> acc;
    for (int big = n; big >= 1; --big) {
        for (int mult = n / big; mult >= 1; --mult) {
            const int rest = n - big * mult;
            acc.assign(mult, big);
            const bool keep = rest == 0
                                  ? visit(acc)
                                  : gen_distinct(rest, std::min(rest, big - 1), 0, acc, visit);
            if (!keep) return false;
        }
    }
    return true;
}

} // namespace

void enumerate(const ClassSpec& spec, const Visitor& visit) {
    if (spec.n < 0) throw ArityError("enumerate: negative n");
    std::vector<int> acc;
    acc.reserve(spec.n);
    if (spec.n == 0) {
        // The empty partition is the unique partition of 0 in every class.
        visit(acc);
        return;
    }
    switch (spec.cls) {
    case PartitionClass::P:
        gen_all(spec.n, spec.n, acc, visit);
        break;
    case PartitionClass::D:
        gen_distinct(spec.n, spec.n, 0, acc, visit);
        break;
    case PartitionClass::Dk:
        gen_distinct(spec.n, spec.n, spec.k, acc, visit);
        break;
    case PartitionClass::B:
        gen_smallest_repeats(spec.n, spec.n, acc, visit);
        break;
    case PartitionClass::Bprime:
        gen_largest_repeats(spec.n, visit);
        break;
    }
}

std::vector<Partition> enumerate_all(const ClassSpec& spec) {
    std::vector<Partition> out;
    enumerate(spec, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
        return true;
    });
    return out;
}

std::uint64_t partition_count(int n) {
    static std::vector<std::uint64_t> cache{1};
    if (n < 0) return 0;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        std::uint64_t acc = 0;
        bool saturated = false;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::uint64_t add = cache[m - g1] + (g2 <= m ? cache[m - g2] : 0);
            if (k % 2 == 1) {
                if (acc > kMax - add) saturated = true;
                acc += add;
            } else {
                acc -= add;
            }
        }
        cache.push_back(saturated ? kMax : acc);
    }
    return cache[n];
}

Rational ffw(int n, const Rational& c) {
    if (n < 1) throw ArityError("ffw: n must be >= 1");
    Rational total = 0;
    const Rational neg_c = -c;
    enumerate(ClassSpec::distinct(n), [&](std::span<const int> parts) {
        total += neg_c.pow(static_cast<long long>(parts.size())) * Rational(parts.back());
        return true;
    });
    return total;
}

namespace {

template <typename F>
long long sum_over_all(int n, F&& f) {
    if (n < 1) throw ArityError("partition statistic: n must be >= 1");
    long long total = 0;
    enumerate(ClassSpec::all(n), [&](std::span<const int> parts) {
        total += f(parts);
        return true;
    });
    return total;
}

} // namespace

long long spt(int n) {
    return sum_over_all(n, [](std::span<const int> p) {
        long long m = 0;
        const int s = p.back();
        for (auto it = p.rbegin(); it != p.rend() && *it == s; ++it) ++m;
        return m;
    });
}

long long lpt(int n) {
    return sum_over_all(n, [](std::span<const int> p) {
        long long m = 0;
        const int l = p.front();
        for (int v : p) {
            if (v != l) break;
            ++m;
        }
        return m;
    });
}

long long t_sum(int n) {
    return sum_over_all(n, [](std::span<const int> p) { return static_cast<long long>(p.back()); });
}

long long l_odd(int n) {
    return sum_over_all(n, [](std::span<const int> p) {
        int m = 0;
        const int l = p.front();
        for (int v : p) {
            if (v != l) break;
            ++m;
        }
        return static_cast<long long>(m % 2);
    });
}

long long s_odd(int n) {
    return sum_over_all(n, [](std::span<const int> p) {
        return static_cast<long long>(p.back() % 2);
    });
}

long long crank_moment(int n) {
    return sum_over_all(n, [](std::span<const int> p) {
        const int c = crank(p);
        return static_cast<long long>(c > 0 ? c : 0);
    });
}

int d_divisors(int n) {
    if (n < 1) throw ArityError("d_divisors: n must be >= 1");
    int count = 0;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

long long d_distinct(int n) {
    if (n < 0) throw ArityError("d_distinct: negative n");
    if (n == 0) return 1;
    long long count = 0;
    enumerate(ClassSpec::distinct(n), [&](std::span<const int>) {
        ++count;
        return true;
    });
    return count;
}

Rational sigma_prime(int k) {
    if (k < 0) throw ArityError("sigma_prime: negative argument");
    if (k == 0) return {1, 2};
    long long acc = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) acc += (d % 2 == 1) ? 1 : -1;
    return Rational(acc);
}

// ---- weight expressions ----------------------------------------------------

class WeightParser {
public:
    static WeightExpr parse(std::string_view text) {
        WeightExpr w;
        w.text_ = std::string(text);
        std::size_t pos = 0;
        bool any = false;
        while (pos <= text.size()) {
            const auto next = text.find('*', pos);
            const std::string_view factor =
                text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
            parse_factor(trim(factor), w);
            any = true;
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        if (!any) throw WeightSpecError("empty weight expression");
        return w;
    }

private:
    using Stat = WeightExpr::Stat;

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    }

    static std::optional<Stat> stat_by_name(std::string_view s) {
        if (s == "smallest") return Stat::smallest;
        if (s == "largest") return Stat::largest;
        if (s == "parts") return Stat::parts;
        if (s == "rank") return Stat::rank;
        if (s == "smallest_mult") return Stat::smallest_mult;
        if (s == "largest_mult") return Stat::largest_mult;
        if (s == "distinct") return Stat::distinct;
        return std::nullopt;
    }

    static Rational parse_base(std::string_view s) {
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
            s = s.substr(1, s.size() - 2);
        try {
            return Rational::parse(s);
        } catch (const std::exception&) {
            throw WeightSpecError("bad weight base '" + std::string(s) + "'");
        }
    }

    static void parse_factor(std::string_view f, WeightExpr& w) {
        if (f.empty()) throw WeightSpecError("empty factor in weight expression");
        const auto caret = f.find('^');
        if (caret == std::string_view::npos) {
            if (auto st = stat_by_name(f)) {
                w.linear_.push_back(*st);
                return;
            }
            w.coeff_ *= parse_base(f); // plain rational constant
            return;
        }
        WeightExpr::PowFactor pf;
        pf.base = parse_base(trim(f.substr(0, caret)));
        std::string_view exp = trim(f.substr(caret + 1));
        // optional trailing +c / -c offset on the statistic
        std::size_t cut = exp.size();
        for (std::size_t i = 1; i < exp.size(); ++i) {
            if (exp[i] == '+' || exp[i] == '-') {
                cut = i;
                break;
            }
        }
        const auto st = stat_by_name(trim(exp.substr(0, cut)));
        if (!st) throw WeightSpecError("unknown statistic '" + std::string(exp.substr(0, cut)) + "'");
        pf.stat = *st;
        if (cut < exp.size()) {
            const std::string tail(trim(exp.substr(cut)));
            try {
                pf.offset = std::stoi(tail);
            } catch (const std::exception&) {
                throw WeightSpecError("bad exponent offset '" + tail + "'");
            }
        }
        w.pows_.push_back(std::move(pf));
    }
};

WeightExpr WeightExpr::parse(std::string_view text) { return WeightParser::parse(text); }

long long WeightExpr::stat_value(Stat s, const PartitionStats& st) {
    switch (s) {
    case Stat::smallest: return st.smallest;
    case Stat::largest: return st.largest;
    case Stat::parts: return st.num_parts;
    case Stat::rank: return st.rank;
    case Stat::smallest_mult: return st.smallest_mult;
    case Stat::largest_mult: return st.largest_mult;
    case Stat::distinct: return st.num_distinct;
    }
    return 0;
}

Rational WeightExpr::eval(const PartitionStats& st) const {
    Rational v = coeff_;
    for (const auto& pf : pows_) {
        const long long e = stat_value(pf.stat, st) + pf.offset;
        if (pf.base.is_zero() && e < 0)
            throw WeightSpecError("weight raises zero base to a negative power");
        v *= pf.base.pow(e);
    }
    for (Stat s : linear_) v *= Rational(stat_value(s, st));
    return v;
}

Rational weighted_sum(const ClassSpec& spec, const WeightExpr& weight) {
    Rational total = 0;
    enumerate(spec, [&](std::span<const int> parts) {
        if (parts.empty()) return true; // empty partition excluded by convention
        total += weight.eval(stats(parts));
        return true;
    });
    return total;
}

// ---- generating series by enumeration --------------------------------------

TruncatedSeries generating_series(const StatRequest& req, int order,
                                  const EnumerationOptions& opts) {
    if (order < 0) throw ArityError("generating_series: negative order");
    TruncatedSeries out(order);
    for (int n = 0; n <= order; ++n) {
        if (partition_count(n) > opts.budget)
            throw BudgetExceeded("generating_series: p(" + std::to_string(n) + ") exceeds budget");
        switch (req.stat) {
        case StatSeries::ffw_c:
            if (n >= 1) out.set_coeff(n, ffw(n, req.c));
            break;
        case StatSeries::spt:
            if (n >= 1) out.set_coeff(n, Rational(spt(n)));
            break;
        case StatSeries::lpt:
            if (n >= 1) out.set_coeff(n, Rational(lpt(n)));
            break;
        case StatSeries::t_sum:
            if (n >= 1) out.set_coeff(n, Rational(t_sum(n)));
            break;
        case StatSeries::l_odd:
            if (n >= 1) out.set_coeff(n, Rational(l_odd(n)));
            break;
        case StatSeries::s_odd:
            if (n >= 1) out.set_coeff(n, Rational(s_odd(n)));
            break;
        case StatSeries::crank_moment:
            if (n >= 1) out.set_coeff(n, Rational(crank_moment(n)));
            break;
        case StatSeries::class_count: {
            long long count = 0;
            ClassSpec spec{req.cls, n, req.k};
            enumerate(spec, [&](std::span<const int>) {
                ++count;
                return true;
            });
            out.set_coeff(n, Rational(count));
            break;
        }
        }
    }
    return out;
}

} // namespace qtails
