#include <algorithm>

#include "builders_detail.hpp"

// The identity registry. Every entry builds its sides independently from the
// kernel primitives (or, for oracle sides, from partition enumeration), so a
// passing comparison really is two different computations agreeing.

namespace qtails {

// defined in engine.cpp
TruncatedSeries engine_inner_bracket(int n, int n_finite, const ParamValue& a,
                                     const ParamValue& t, int order);

namespace {

using detail::S;
using detail::PV;
using detail::mono;
using detail::mono_q;
using detail::rat;
using detail::one;
using detail::tri;

S scale_shift(const S& s, const PV& v) {
    if (v.exponent() > s.order()) return S(s.order());
    return s.scaled(v.coeff()).shifted_up(v.exponent());
}

// ---- grid construction ------------------------------------------------------

std::vector<PV> rational_values() {
    return {rat(-2), rat(-1), rat({-1, 2}), rat({1, 3}), rat({1, 2}), rat({2, 3}), rat(2)};
}
std::vector<PV> monomial_values() {
    return {mono(1, 1), mono(1, 2), mono(-1, 1), mono({1, 2}, 1)};
}
std::vector<PV> either_values() {
    auto v = rational_values();
    auto m = monomial_values();
    v.insert(v.end(), m.begin(), m.end());
    return v;
}
std::vector<PV> integer_values() {
    return {rat(1), rat(2), rat(3), rat(5), rat(8)};
}

std::vector<PV> values_for(SlotKind kind) {
    switch (kind) {
    case SlotKind::rational: return rational_values();
    case SlotKind::monomial: return monomial_values();
    case SlotKind::either: return either_values();
    case SlotKind::integer: return integer_values();
    }
    return {};
}

constexpr std::size_t kGridCap = 40;

// Cartesian product over the slots (first slot slowest), pole-excluded
// points dropped, then deterministically subsampled to the cap.
std::vector<BindingSet> build_grid(
    const std::vector<ParamSlot>& slots,
    const std::function<std::optional<std::string>(const BindingSet&)>& pole,
    const std::map<std::string, std::vector<PV>>& overrides) {
    if (slots.empty()) return {BindingSet{}};
    std::vector<std::vector<PV>> axes;
    for (const auto& slot : slots) {
        auto it = overrides.find(slot.name);
        axes.push_back(it != overrides.end() ? it->second : values_for(slot.kind));
    }
    std::vector<BindingSet> full;
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
        BindingSet bs;
        for (std::size_t i = 0; i < slots.size(); ++i) bs.bind(slots[i].name, axes[i][idx[i]]);
        if (!pole || !pole(bs)) full.push_back(std::move(bs));
        // odometer step, first slot slowest
        std::size_t i = slots.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done) break;
    }
    if (full.size() <= kGridCap) return full;
    std::vector<BindingSet> picked;
    picked.reserve(kGridCap);
    for (std::size_t j = 0; j < kGridCap; ++j) picked.push_back(full[j * full.size() / kGridCap]);
    return picked;
}

// Fluent construction of one descriptor.
struct Entry {
    IdentityDescriptor d;
    std::map<std::string, std::vector<PV>> overrides;

    Entry(std::string id, std::string anchor) {
        d.id = std::move(id);
        d.anchor = std::move(anchor);
    }
    Entry& slot(std::string name, SlotKind kind, std::string note = {}) {
        d.slots.push_back({std::move(name), kind, std::move(note)});
        return *this;
    }
    Entry& grid_override(const std::string& name, std::vector<PV> values) {
        overrides[name] = std::move(values);
        return *this;
    }
    Entry& side(SideBuilder b) {
        d.sides.push_back(std::move(b));
        return *this;
    }
    Entry& oracle_side(SideBuilder b) {
        d.oracle_sides.push_back(static_cast<int>(d.sides.size()));
        d.sides.push_back(std::move(b));
        return *this;
    }
    Entry& order(int n) {
        d.default_order = n;
        return *this;
    }
    Entry& pole(std::function<std::optional<std::string>(const BindingSet&)> p) {
        d.pole = std::move(p);
        return *this;
    }
    IdentityDescriptor done() {
        if (!d.pole) d.pole = [](const BindingSet&) { return std::nullopt; };
        d.grid = build_grid(d.slots, d.pole, overrides);
        return std::move(d);
    }
};

std::optional<std::string> rational_one_pole(const BindingSet& b, const std::string& name) {
    if (const PV* v = b.find(name); v && v->is_rational_one())
        return "1/(1-" + name + ") pole at " + name + " = 1";
    return std::nullopt;
}

// ---- shared side builders ---------------------------------------------------

void check_budget(int n, const VerifyOptions& o) {
    if (partition_count(n) > o.enumeration.budget)
        throw BudgetExceeded("enumeration budget exceeded at n = " + std::to_string(n));
}

// sum_{n>=1} c^{n-1} [ (q^n)_len - 1 ] with len factors (or infinitely many).
S tails_weighted_by_c(const PV& c, std::optional<int> len, int N, const VerifyOptions& o) {
    return sum_formal(
        N, 1,
        [&](int n) {
            S p = len ? detail::poch_shift(n, *len, N) : detail::poch_shift_inf(n, N);
            return scale_shift(p - one(N), c.power(n - 1));
        },
        o.sum);
}

// sum_{n=1}^{len} [len, n] (-1)^n q^{n(n+1)/2} / (1 - c q^n)
S gaussian_pole_sum(const PV& c, int len, int N) {
    S acc(N);
    for (int n = 1; n <= len && tri(n) <= N; ++n) {
        S term = gaussian_binomial(len, n, N) * geometric_fraction(c, n, N);
        acc.add_scaled_shift(term, n % 2 == 0 ? 1 : -1, tri(n));
    }
    return acc;
}

// sum_{n>=1} (-1)^n q^{n(n+1)/2} / ((q)_n (1 - c q^n))
S agl_middle_sum(const PV& c, int N, const VerifyOptions&) {
    S acc(N);
    S inv_q = one(N);
    for (int n = 1; tri(n) <= N; ++n) {
        inv_q.div_binomial(-1, n);
        S term = (inv_q * geometric_fraction(c, n, N)).shifted_up(tri(n));
        if (n % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// (1/(1-c)) ( (q)_len / (c q)_len - 1 ), len possibly infinite
S c_quotient_side(const PV& c, std::optional<int> len, int N) {
    const PV cq = c.times(mono_q());
    S quot = len ? detail::poch_q(*len, N) * inv_pochhammer(cq, 1, *len, N)
                 : detail::euler_inf(N) * inv_pochhammer_inf(cq, 1, N);
    return geometric_fraction(c, 0, N) * (quot - one(N));
}

// sum_{n>=0} c^n [ (t)_n - (t)_{limit} ]  (limit = len or infinity)
S zagier_tail_sum(const PV& c, const PV& t, std::optional<int> len, int N,
                  const VerifyOptions& o) {
    const S full = len ? pochhammer(t, 1, *len, N) : pochhammer_inf(t, 1, N);
    S acc(N);
    S p_t = one(N);
    SumGuard guard(o.sum.guard);
    const int last = len ? *len - 1 : -1;
    for (int n = 0;; ++n) {
        if (last >= 0 && n > last) break;
        if (n > 0) {
            const int e = t.exponent() + n - 1;
            if (e <= N) p_t.mul_binomial(-t.coeff(), e);
        }
        S term = scale_shift(p_t - full, c.power(n));
        if (last < 0 && !guard.admit(term.valuation(), N)) break;
        acc += term;
    }
    return acc;
}

// sum over 1 <= n <= len (or until truncation) of w(n) (t)_{n-1} q^{n-1},
// where w is supplied per n.
S partial_power_sum(const PV& t, std::optional<int> len, int N,
                    const std::function<S(int, const S&)>& weighted_term) {
    S acc(N);
    S p_t = one(N); // (t)_{n-1}
    for (int n = 1; (!len || n <= *len) && n - 1 <= N; ++n) {
        if (n >= 2) {
            const int e = t.exponent() + n - 2;
            if (e <= N) p_t.mul_binomial(-t.coeff(), e);
        }
        acc += weighted_term(n, p_t).shifted_up(n - 1).truncated(N);
    }
    return acc;
}

// sigma(q, N): sum_n [N, n] (q)_n q^{n(n+1)/2} / (-q)_n
S sigma_finite_lhs(int len, int N) {
    S acc(N);
    for (int n = 0; n <= len && tri(n) <= N; ++n) {
        S term = gaussian_binomial(len, n, N) * detail::poch_q(n, N) *
                 inv_pochhammer(mono(-1, 1), 1, n, N);
        acc += term.shifted_up(tri(n)).truncated(N);
    }
    return acc;
}

// ---- the registry -----------------------------------------------------------

std::vector<IdentityDescriptor> make_catalog() {
    std::vector<IdentityDescriptor> out;

    // Eq. (1.1)
    out.push_back(
        Entry("ramanujan-lost-notebook", "Eq. (1.1), \"beautiful sum-of-tails identity\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                const S full = pochhammer_inf(mono(-1, 1), 1, N);
                S acc(N), p = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    S term = full - p;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                    if (n + 1 <= N) p.mul_binomial(1, n + 1);
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S d = lambert_sum(LambertFlavor::minus_denominator, N);
                d.add_term({-1, 2}, 0);
                return pochhammer_inf(mono(-1, 1), 1, N) * d +
                       detail::sigma_canonical(N).scaled({1, 2});
            })
            .done());

    // Zagier's eta identity, written with exponents == 1 mod 24.
    out.push_back(
        Entry("zagier-eta24", "Zagier, \"derived the following identity of a similar type\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                const S eta = detail::eta24(N);
                S acc(N), trunc = one(N); // (q^24; q^24)_n
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0 && 24 * n <= N) trunc.mul_binomial(-1, 24 * n);
                    S term = eta - trunc.shifted_up(1);
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S d(N); // -1/2 + sum_m q^{24m}/(1 - q^{24m})
                d.add_term({-1, 2}, 0);
                for (int m = 24; m <= N; m += 24)
                    for (int e = m; e <= N; e += m) d.add_term(1, e);
                S e(N); // (1/2) sum n chi_12(n) q^{n^2}
                for (long long n = 1; n * n <= N; ++n) {
                    const int r = static_cast<int>(n % 12);
                    int chi = 0;
                    if (r == 1 || r == 11) chi = 1;
                    if (r == 5 || r == 7) chi = -1;
                    if (chi != 0) e.add_term(Rational(chi * n, 2), static_cast<int>(n * n));
                }
                return detail::eta24(N) * d + e;
            })
            .done());

    // Eq. (1.2)
    out.push_back(Entry("dems-finite", "Eq. (1.2), \"The motivation for this project stemmed\"")
                      .slot("N", SlotKind::integer)
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          const int len = static_cast<int>(b.int_at("N", 1, 64));
                          return sum_formal(
                              N, 1,
                              [&](int n) {
                                  S t = detail::poch_shift(n, len, N) - one(N);
                                  return n % 2 == 1 ? t : -t;
                              },
                              o.sum);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          const int len = static_cast<int>(b.int_at("N", 1, 64));
                          S quot = detail::poch_q(len, N) *
                                   inv_pochhammer(mono(-1, 1), 1, len, N);
                          return (quot - one(N)).scaled({1, 2});
                      })
                      .done());

    // Eq. (1.3)
    out.push_back(Entry("dems-limit", "Eq. (1.3), \"we get the well-known identity\"")
                      .side([](const BindingSet&, int N, const VerifyOptions& o) {
                          return sum_formal(
                              N, 1,
                              [&](int n) {
                                  S t = detail::poch_shift_inf(n, N) - one(N);
                                  return n % 2 == 1 ? t : -t;
                              },
                              o.sum);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S quot = detail::euler_inf(N) *
                                   inv_pochhammer_inf(mono(-1, 1), 1, N);
                          return (quot - one(N)).scaled({1, 2});
                      })
                      .done());

    // Eq. (1.4)
    out.push_back(Entry("yan-fu", "Eq. (1.4), \"Yan and Fu derived the following identity\"")
                      .slot("c", SlotKind::either, "c != 1 (1/(1-c) pole)")
                      .slot("N", SlotKind::integer)
                      .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return gaussian_pole_sum(b.at("c"),
                                                   static_cast<int>(b.int_at("N", 1, 64)), N);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return c_quotient_side(b.at("c"),
                                                 static_cast<int>(b.int_at("N", 1, 64)), N);
                      })
                      .done());

    // Eq. (1.5)
    out.push_back(Entry("half-c-finite", "Eq. (1.5), \"The special case of one of our Theorems\"")
                      .slot("c", SlotKind::either)
                      .slot("N", SlotKind::integer)
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return tails_weighted_by_c(b.at("c"),
                                                     static_cast<int>(b.int_at("N", 1, 64)), N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return gaussian_pole_sum(b.at("c"),
                                                   static_cast<int>(b.int_at("N", 1, 64)), N);
                      })
                      .done());

    // Eq. (1.6): three-sided chain
    out.push_back(Entry("c-chain-finite", "Eq. (1.6), \"Actually, the following is true\"")
                      .slot("c", SlotKind::either, "c != 1 (1/(1-c) pole)")
                      .slot("N", SlotKind::integer)
                      .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return tails_weighted_by_c(b.at("c"),
                                                     static_cast<int>(b.int_at("N", 1, 64)), N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return gaussian_pole_sum(b.at("c"),
                                                   static_cast<int>(b.int_at("N", 1, 64)), N);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return c_quotient_side(b.at("c"),
                                                 static_cast<int>(b.int_at("N", 1, 64)), N);
                      })
                      .done());

    // Eq. (1.7)
    out.push_back(Entry("agl-c-chain", "Eq. (1.7), \"which they proved combinatorially\"")
                      .slot("c", SlotKind::either, "c != 1 (1/(1-c) pole)")
                      .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return tails_weighted_by_c(b.at("c"), std::nullopt, N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return agl_middle_sum(b.at("c"), N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return c_quotient_side(b.at("c"), std::nullopt, N);
                      })
                      .done());

    // Theorem 1.1 via the engine, one entry per grid point over the four
    // named g-choices.
    {
        auto pick_g = [](const BindingSet& b) {
            const long long sel = b.int_at("g", 1, 4);
            const Rational c = b.at("c").coeff();
            switch (sel) {
            case 1: return GChoice::geometric(c);
            case 2: return GChoice::eta_ratio();
            case 3: return GChoice::q_exponential_alt();
            default: return GChoice::binomial_negative(2, c);
            }
        };
        out.push_back(
            Entry("thm-1-1-engine", "Theorem 1.1, \"Let N be positive integer\"")
                .slot("c", SlotKind::rational, "used by the geometric / binomial g-choices")
                .slot("g", SlotKind::integer, "1=geometric(c) 2=eta-ratio 3=q-exponential-alt 4=binomial(2,c)")
                .slot("a", SlotKind::either, "a != 1 ((a)_n must be a unit)")
                .slot("t", SlotKind::monomial)
                .slot("N", SlotKind::integer)
                .grid_override("g", {rat(1), rat(2), rat(3), rat(4)})
                .pole([](const BindingSet& b) { return rational_one_pole(b, "a"); })
                .side([pick_g](const BindingSet& b, int N, const VerifyOptions& o) {
                    return theorem1_engine(pick_g(b), b.at("a"), b.at("t"),
                                           static_cast<int>(b.int_at("N", 1, 64)), N, o)
                        .first;
                })
                .side([pick_g](const BindingSet& b, int N, const VerifyOptions& o) {
                    return theorem1_engine(pick_g(b), b.at("a"), b.at("t"),
                                           static_cast<int>(b.int_at("N", 1, 64)), N, o)
                        .second;
                })
                .done());
    }

    // Eq. (1.9), with g(x) = 1/(1 - c x)
    out.push_back(
        Entry("andrews-freitas-gen", "Eq. (1.9), \"This theorem also generalizes the result\"")
            .slot("c", SlotKind::rational)
            .slot("a", SlotKind::either, "a != 1 ((a)_n, (a)_inf must be units)")
            .slot("t", SlotKind::monomial)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "a"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), t = b.at("t");
                const Rational c = b.at("c").coeff();
                const S full = pochhammer_inf(t, 1, N) * inv_pochhammer_inf(a, 1, N);
                S acc(N), p_t = one(N), inv_a = one(N);
                Rational cp = 1;
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        const int et = t.exponent() + n - 1;
                        if (et <= N) p_t.mul_binomial(-t.coeff(), et);
                        if (!a.coeff().is_zero() && a.exponent() + n - 1 <= N)
                            inv_a.div_binomial(-a.coeff(), a.exponent() + n - 1);
                        cp *= c;
                    }
                    S term = (p_t * inv_a - full).scaled(cp);
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), t = b.at("t");
                const Rational c = b.at("c").coeff();
                const S pref = pochhammer_inf(t, 1, N) * inv_pochhammer_inf(a, 1, N);
                S acc(N), rp = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 1;; ++n) {
                    // rp = prod_{j=0}^{n-1} (t - a q^j)
                    S f(N);
                    if (t.exponent() <= N) f.add_term(t.coeff(), t.exponent());
                    if (a.exponent() + n - 1 <= N) f.add_term(-a.coeff(), a.exponent() + n - 1);
                    rp *= f;
                    inv_q.div_binomial(-1, n);
                    S term = rp * inv_q;
                    term.div_binomial(-c, n); // 1/(1 - c q^n)
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return pref * acc;
            })
            .done());

    // Theorem 1.2 (finite Heine)
    out.push_back(
        Entry("finite-heine", "Theorem 1.2, \"We now give a special case of Theorem\"")
            .slot("c", SlotKind::either, "c != 1 ((c)_n must be a unit)")
            .slot("a", SlotKind::either)
            .slot("b", SlotKind::monomial)
            .slot("t", SlotKind::monomial)
            .slot("N", SlotKind::integer)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), bb = b.at("b"), c = b.at("c"), t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const PV at = a.times(t), atq = at.times(mono(1, len)), tq = t.times(mono(1, len));
                S acc(N);
                S rp = one(N);      // prod (b - c q^j) = (c/b)_n b^n
                S p_t = one(N);     // (t)_n
                S p_atq = one(N);   // (a t q^N)_n
                S inv_q = one(N), inv_at = one(N), inv_tq = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        S f(N);
                        if (bb.exponent() <= N) f.add_term(bb.coeff(), bb.exponent());
                        if (c.exponent() + n - 1 <= N) f.add_term(-c.coeff(), c.exponent() + n - 1);
                        rp *= f;
                        if (t.exponent() + n - 1 <= N) p_t.mul_binomial(-t.coeff(), t.exponent() + n - 1);
                        if (!atq.coeff().is_zero() && atq.exponent() + n - 1 <= N)
                            p_atq.mul_binomial(-atq.coeff(), atq.exponent() + n - 1);
                        inv_q.div_binomial(-1, n);
                        if (!at.coeff().is_zero() && at.exponent() + n - 1 <= N)
                            inv_at.div_binomial(-at.coeff(), at.exponent() + n - 1);
                        if (tq.exponent() + n - 1 <= N)
                            inv_tq.div_binomial(-tq.coeff(), tq.exponent() + n - 1);
                    }
                    S term = rp * p_t * p_atq * inv_q * inv_at * inv_tq;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), bb = b.at("b"), c = b.at("c"), t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const PV at = a.times(t);
                const S pref = pochhammer(t, 1, len, N) * pochhammer_inf(c, 1, N) *
                               inv_pochhammer(at, 1, len, N) * inv_pochhammer_inf(bb, 1, N);
                S acc(N), p_b = one(N), inv_q = one(N), inv_c = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (bb.exponent() + n - 1 <= N) p_b.mul_binomial(-bb.coeff(), bb.exponent() + n - 1);
                        inv_q.div_binomial(-1, n);
                        if (!c.coeff().is_zero() && c.exponent() + n - 1 <= N)
                            inv_c.div_binomial(-c.coeff(), c.exponent() + n - 1);
                    }
                    S term = engine_inner_bracket(n, len, a, rat(1), N) * p_b * inv_q * inv_c;
                    term = scale_shift(term, t.power(n));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return pref * acc;
            })
            .done());

    // Eq. (1.11), Heine's 2phi1 transformation
    out.push_back(
        Entry("heine", "Eq. (1.11), \"Heine's transformation\"")
            .slot("a", SlotKind::either)
            .slot("b", SlotKind::monomial)
            .slot("c", SlotKind::either, "c != 1 ((c)_n must be a unit)")
            .slot("t", SlotKind::monomial)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), bb = b.at("b"), c = b.at("c"), t = b.at("t");
                S acc(N), p_a = one(N), p_b = one(N), inv_c = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (!a.coeff().is_zero() && a.exponent() + n - 1 <= N)
                            p_a.mul_binomial(-a.coeff(), a.exponent() + n - 1);
                        if (bb.exponent() + n - 1 <= N)
                            p_b.mul_binomial(-bb.coeff(), bb.exponent() + n - 1);
                        if (!c.coeff().is_zero() && c.exponent() + n - 1 <= N)
                            inv_c.div_binomial(-c.coeff(), c.exponent() + n - 1);
                        inv_q.div_binomial(-1, n);
                    }
                    S term = scale_shift(p_a * p_b * inv_c * inv_q, t.power(n));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a"), bb = b.at("b"), c = b.at("c"), t = b.at("t");
                const PV at = a.times(t);
                const S pref = pochhammer_inf(at, 1, N) * pochhammer_inf(bb, 1, N) *
                               inv_pochhammer_inf(t, 1, N) * inv_pochhammer_inf(c, 1, N);
                S acc(N), rp = one(N), p_t = one(N), inv_at = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        S f(N);
                        if (bb.exponent() <= N) f.add_term(bb.coeff(), bb.exponent());
                        if (c.exponent() + n - 1 <= N) f.add_term(-c.coeff(), c.exponent() + n - 1);
                        rp *= f;
                        if (t.exponent() + n - 1 <= N) p_t.mul_binomial(-t.coeff(), t.exponent() + n - 1);
                        if (!at.coeff().is_zero() && at.exponent() + n - 1 <= N)
                            inv_at.div_binomial(-at.coeff(), at.exponent() + n - 1);
                        inv_q.div_binomial(-1, n);
                    }
                    S term = rp * p_t * inv_at * inv_q;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return pref * acc;
            })
            .done());

    // sigma(q): both classical series forms
    out.push_back(Entry("sigma-two-forms", "\"another series representation\"")
                      .order(60)
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return detail::sigma_canonical(N);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc = one(N), prod = one(N); // (q)_{n-1}
                          for (int n = 1; n <= N; ++n) {
                              if (n >= 2 && n - 1 <= N) prod.mul_binomial(-1, n - 1);
                              acc.add_scaled_shift(prod, n % 2 == 1 ? 1 : -1, n);
                          }
                          return acc;
                      })
                      .done());

    // Corollary 1.3: sigma(q, N)
    out.push_back(
        Entry("sigma-finite", "Corollary 1.3, \"a new series presentation for\"")
            .order(60)
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                return sigma_finite_lhs(static_cast<int>(b.int_at("N", 1, 64)), N);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc = detail::euler_inf(N) * inv_pochhammer_inf(mono(-1, len + 1), 1, N);
                S tail = detail::euler_inf(N);                              // (q^{n+1})_inf
                S inv_b = inv_pochhammer_inf(mono(-1, len + 1), 1, N);      // 1/(-q^{N+n+1})_inf
                for (int n = 1; n <= N; ++n) {
                    tail.div_binomial(-1, n);
                    if (len + n <= N) inv_b.mul_binomial(1, len + n);
                    S term = tail * inv_b;
                    term.div_binomial(1, n); // /(1 + q^n)
                    acc.add_scaled_shift(term, 2, n);
                }
                return acc;
            })
            .done());

    // Eq. (1.13)
    out.push_back(Entry("sigma-new-rep", "Eq. (1.13), \"seems to be new\"")
                      .order(60)
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return detail::sigma_canonical(N);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc = detail::euler_inf(N);
                          S tail = detail::euler_inf(N);
                          for (int n = 1; n <= N; ++n) {
                              tail.div_binomial(-1, n); // (q^{n+1})_inf
                              S term = tail;
                              term.div_binomial(1, n); // /(1 + q^n)
                              acc.add_scaled_shift(term, 2, n);
                          }
                          return acc;
                      })
                      .done());

    // Eq. (1.14): both sides by enumeration
    out.push_back(
        Entry("sigma-combinatorial", "Eq. (1.14), \"interesting weighted partition identity\"")
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    Rational sum = 0;
                    enumerate(ClassSpec::distinct(n), [&](std::span<const int> p) {
                        const auto st = stats(p);
                        sum += Rational((st.num_parts % 2 == 0 ? 1 : -1) -
                                        ((st.rank % 2 + 2) % 2 == 0 ? 1 : -1));
                        return true;
                    });
                    acc.set_coeff(n, sum);
                }
                return acc;
            })
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    long long sum = 0;
                    enumerate(ClassSpec::smallest_repeats(n), [&](std::span<const int> p) {
                        sum += (p.size() % 2 == 0) ? 1 : -1;
                        return true;
                    });
                    acc.set_coeff(n, Rational(2 * sum));
                }
                return acc;
            })
            .done());

    // Theorem 1.5 (i)
    out.push_back(
        Entry("new-ramanujan-i", "Theorem 1.5, \"Another new representation\" (i)")
            .order(60)
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                S tail = pochhammer_inf(mono(-1, 1), 1, N); // (-q^{n+1})_inf pending update
                for (int n = 1; n <= N; ++n) {
                    tail.div_binomial(1, n); // (-q^{n+1})_inf
                    S term = tail;
                    term.div_binomial(-1, n); // /(1 - q^n)
                    acc.add_scaled_shift(term, 1, n);
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                const S half_plus = lambert_sum(LambertFlavor::custom_start, N, 0);
                return pochhammer_inf(mono(-1, 1), 1, N) * half_plus -
                       detail::sigma_canonical(N).scaled({1, 2});
            })
            .done());

    // Theorem 1.5 (ii)
    out.push_back(
        Entry("new-ramanujan-ii", "Theorem 1.5, \"Another new representation\" (ii)")
            .order(60)
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                for (int n = 1; 2 * n <= N; ++n) {
                    S term = pochhammer_inf(mono(-1, 2 * n + 1), 2, N);
                    term.div_binomial(-1, 2 * n);
                    acc.add_scaled_shift(term, 1, 2 * n);
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                const S first = pochhammer_inf(mono(-1, 1), 2, N) *
                                lambert_sum(LambertFlavor::odd_exponents, N);
                return first - (detail::delta_by_quotients(N) - one(N));
            })
            .done());

    // Theorem 1.6 (delta with a free rational parameter)
    out.push_back(
        Entry("delta-general", "Theorem 1.6, \"a beautiful identity for a generalization\"")
            .order(60)
            .slot("t", SlotKind::rational)
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational t = b.at("t").coeff();
                S acc(N), inv = one(N);
                for (long long n = 0; n * n <= N; ++n) {
                    if (n > 0) inv.div_binomial(-t, static_cast<int>(2 * n - 1));
                    acc.add_scaled_shift(inv, 1, static_cast<int>(n * n));
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational t = b.at("t").coeff();
                S acc = one(N), prod = one(N); // prod_{j=1}^{n-1} (t + q^{2j})
                for (int n = 1; n <= N; ++n) {
                    if (n >= 2) {
                        S f(N);
                        f.add_term(t, 0);
                        if (2 * (n - 1) <= N) f.add_term(1, 2 * (n - 1));
                        prod *= f;
                    }
                    acc.add_scaled_shift(prod, 1, n);
                }
                return acc;
            })
            .done());

    // Theorem 1.6 at t = -1
    out.push_back(Entry("delta-at-minus1", "\"If we put t=-1\"")
                      .order(60)
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return detail::delta_by_quotients(N);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return detail::delta_by_tails(N);
                      })
                      .done());

    // Corollary 1.7 (third-order mock theta functions)
    out.push_back(Entry("mock-phi", "Corollary 1.7, \"new and elegant representation\" (i)")
                      .order(60)
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv = one(N); // 1/(-q^2; q^2)_n
                          for (long long n = 0; n * n <= N; ++n) {
                              if (n > 0) inv.div_binomial(1, static_cast<int>(2 * n));
                              acc.add_scaled_shift(inv, 1, static_cast<int>(n * n));
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc = one(N), prod = one(N); // (q; q^2)_{n-1}
                          for (int n = 1; 2 * n - 1 <= N; ++n) {
                              if (n >= 2 && 2 * n - 3 <= N) prod.mul_binomial(-1, 2 * n - 3);
                              acc.add_scaled_shift(prod, n % 2 == 1 ? 1 : -1, 2 * n - 1);
                          }
                          return acc;
                      })
                      .done());

    out.push_back(Entry("mock-psi", "Corollary 1.7, \"new and elegant representation\" (ii)")
                      .order(60)
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv = one(N); // 1/(q; q^2)_n
                          for (long long n = 0; n * n <= N; ++n) {
                              if (n > 0) inv.div_binomial(-1, static_cast<int>(2 * n - 1));
                              acc.add_scaled_shift(inv, 1, static_cast<int>(n * n));
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc = one(N), prod = one(N); // (-q^2; q^2)_{n-1}
                          for (int n = 1; n <= N; ++n) {
                              if (n >= 2 && 2 * (n - 1) <= N) prod.mul_binomial(1, 2 * (n - 1));
                              acc.add_scaled_shift(prod, 1, n);
                          }
                          return acc;
                      })
                      .done());

    // Eq. (1.17)
    out.push_back(Entry("af-tails", "Eq. (1.17), \"a finite analogue of an identity\"")
                      .slot("t", SlotKind::monomial)
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return zagier_tail_sum(rat(1), b.at("t"), std::nullopt, N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          const PV t = b.at("t");
                          const S pref = pochhammer_inf(t, 1, N);
                          S acc(N), inv_q = one(N);
                          SumGuard guard(o.sum.guard);
                          for (int n = 1;; ++n) {
                              inv_q.div_binomial(-1, n);
                              S term = inv_q;
                              term.div_binomial(-1, n);
                              term = scale_shift(term, t.power(n));
                              if (!guard.admit(term.valuation(), N)) break;
                              acc += term;
                          }
                          return pref * acc;
                      })
                      .done());

    // Theorem 1.8 / Eq. (1.18). The text's c != q^{-n} exclusion is vacuous
    // here: rational and monomial bindings keep 1 - c q^n a unit.
    out.push_back(
        Entry("thm-1-8-finite", "Eq. (1.18), \"along with an extra parameter\"")
            .slot("c", SlotKind::either, "c != q^{-n} vacuous for admissible bindings")
            .slot("t", SlotKind::monomial)
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV c = b.at("c"), t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    const PV tqn = t.times(mono(1, 1).power(n)); // t q^n
                    S term = inv_pochhammer(tqn, 1, len, N) - one(N);
                    term = scale_shift(term, c.power(n));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV c = b.at("c"), t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N), p_qn = one(N), inv_q = one(N); // (q^N)_n, 1/(q)_n
                SumGuard guard(o.sum.guard);
                for (int n = 1;; ++n) {
                    if (len + n - 1 <= N) p_qn.mul_binomial(-1, len + n - 1);
                    inv_q.div_binomial(-1, n);
                    S term = p_qn * inv_q * geometric_fraction(c, n, N);
                    term = scale_shift(term, t.power(n));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .done());

    // Eq. (1.19)
    out.push_back(Entry("one-param-zagier-a", "Eq. (1.19), \"one parameter generalization of\"")
                      .slot("c", SlotKind::either)
                      .slot("t", SlotKind::monomial)
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          return zagier_tail_sum(b.at("c"), b.at("t"), std::nullopt, N, o);
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                          const PV c = b.at("c"), t = b.at("t");
                          const S pref = pochhammer_inf(t, 1, N);
                          S acc(N), inv_q = one(N);
                          SumGuard guard(o.sum.guard);
                          for (int n = 1;; ++n) {
                              inv_q.div_binomial(-1, n);
                              S term = inv_q * geometric_fraction(c, n, N);
                              term = scale_shift(term, t.power(n));
                              if (!guard.admit(term.valuation(), N)) break;
                              acc += term;
                          }
                          return pref * acc;
                      })
                      .done());

    // Eq. (1.20): the finite induction chain (three sides)
    out.push_back(
        Entry("zagier-finite-induction", "Eq. (1.20), \"it is easy to see, using induction\"")
            .slot("c", SlotKind::rational, "c != 1 on the closed form")
            .slot("t", SlotKind::either)
            .slot("N", SlotKind::integer)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                return zagier_tail_sum(b.at("c"), b.at("t"), len, N, o);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational c = b.at("c").coeff();
                const PV t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S sum = partial_power_sum(t, len, N, [&](int n, const S& p_t) {
                    return p_t.scaled(detail::power_partial_sum(c, n));
                });
                return scale_shift(sum, t);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational c = b.at("c").coeff();
                const PV t = b.at("t");
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S sum = partial_power_sum(t, len, N, [&](int n, const S& p_t) {
                    return p_t.scaled(Rational(1) - c.pow(n));
                });
                return scale_shift(sum, t).scaled((Rational(1) - c).inverse());
            })
            .done());

    // Eq. (1.21)
    out.push_back(
        Entry("one-param-zagier-b", "Eq. (1.21), \"Now take the limit\"")
            .slot("c", SlotKind::either, "c != 1 (1/(1-c) pole)")
            .slot("t", SlotKind::monomial)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                return zagier_tail_sum(b.at("c"), b.at("t"), std::nullopt, N, o);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const PV c = b.at("c"), t = b.at("t");
                S sum = partial_power_sum(t, std::nullopt, N, [&](int n, const S& p_t) {
                    return p_t - scale_shift(p_t, c.power(n));
                });
                return scale_shift(sum, t) * geometric_fraction(c, 0, N);
            })
            .done());

    // Eq. (1.22)
    out.push_back(
        Entry("remark1-bridge", "Eq. (1.22), \"Interesting special cases of\"")
            .slot("c", SlotKind::either, "c != 1 (1/(1-c) pole)")
            .slot("t", SlotKind::monomial)
            .pole([](const BindingSet& b) { return rational_one_pole(b, "c"); })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV c = b.at("c"), t = b.at("t");
                S acc(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 1;; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = inv_q * geometric_fraction(c, n, N);
                    term = scale_shift(term, t.power(n));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const PV c = b.at("c"), t = b.at("t");
                S acc(N);
                S inv_tail = inv_pochhammer_inf(t, 1, N); // 1/(t q^{n-1})_inf
                for (int n = 1; n - 1 <= N; ++n) {
                    if (n >= 2 && t.exponent() + n - 2 <= N)
                        inv_tail.mul_binomial(-t.coeff(), t.exponent() + n - 2);
                    S term = inv_tail - scale_shift(inv_tail, c.power(n));
                    acc += term.shifted_up(n - 1).truncated(N);
                }
                return scale_shift(acc, t) * geometric_fraction(c, 0, N);
            })
            .done());

    // Eq. (1.23): crank chain, enumeration third side
    out.push_back(
        Entry("agl-crank", "Eq. (1.23), \"prove a sum-of-tails identity\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                const S full = detail::euler_inf(N);
                S acc(N), p_q = one(N), inv_sq = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (n <= N) p_q.mul_binomial(-1, n);
                        inv_sq.div_binomial(-1, n);
                        inv_sq.div_binomial(-1, n);
                    }
                    S term = (p_q - full) * inv_sq;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N), inv_sq = one(N);
                for (long long n = 1; n * n <= N; ++n) {
                    inv_sq.div_binomial(-1, static_cast<int>(n));
                    inv_sq.div_binomial(-1, static_cast<int>(n));
                    acc.add_scaled_shift(inv_sq, Rational(n), static_cast<int>(n * n));
                }
                return acc;
            })
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                // q + sum_{n>=2} (sum_{m>=1} m M(m,n)) q^n
                S acc = generating_series({StatSeries::crank_moment}, N, o.enumeration);
                if (N >= 1) acc.set_coeff(1, 1);
                return acc;
            })
            .done());

    // Theorem 1.9
    out.push_back(
        Entry("gen-agl", "Theorem 1.9, \"This is given in theorem below\"")
            .slot("alpha", SlotKind::monomial)
            .slot("beta", SlotKind::either)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV al = b.at("alpha"), be = b.at("beta");
                const PV bq = be.times(mono_q());
                const S full = pochhammer_inf(al, 1, N);
                S acc(N), p_al = one(N), inv_bq = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (al.exponent() + n - 1 <= N)
                            p_al.mul_binomial(-al.coeff(), al.exponent() + n - 1);
                        if (!bq.coeff().is_zero() && bq.exponent() + n - 1 <= N)
                            inv_bq.div_binomial(-bq.coeff(), bq.exponent() + n - 1);
                        inv_q.div_binomial(-1, n);
                    }
                    S term = (p_al - full) * inv_bq * inv_q;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV al = b.at("alpha"), be = b.at("beta");
                const PV bq = be.times(mono_q());
                const S pref = pochhammer_inf(al, 1, N) * detail::inv_euler_inf(N);
                // sum_1 = sum n beta^n q^{n^2} / ((beta q)_n (q)_n)
                S sum1(N), inv_bq = one(N), inv_q = one(N);
                for (long long n = 1; n * n <= N; ++n) {
                    if (!bq.coeff().is_zero() && bq.exponent() + n - 1 <= N)
                        inv_bq.div_binomial(-bq.coeff(), static_cast<int>(bq.exponent() + n - 1));
                    inv_q.div_binomial(-1, static_cast<int>(n));
                    S term = scale_shift(inv_bq * inv_q, be.power(static_cast<int>(n)));
                    sum1.add_scaled_shift(term, Rational(n), static_cast<int>(n * n));
                }
                // sum_2 = sum (beta q / alpha)_n alpha^n / (1 - q^n), Laurent-free
                S sum2(N), rp = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 1;; ++n) {
                    S f(N);
                    if (al.exponent() <= N) f.add_term(al.coeff(), al.exponent());
                    if (bq.exponent() + n - 1 <= N) f.add_term(-bq.coeff(), bq.exponent() + n - 1);
                    rp *= f;
                    S term = rp;
                    term.div_binomial(-1, n);
                    if (!guard.admit(term.valuation(), N)) break;
                    sum2 += term;
                }
                return pref * (sum1 + inv_pochhammer_inf(bq, 1, N) * sum2);
            })
            .done());

    // Corollary 1.10 (half Lerch sum)
    out.push_back(
        Entry("lerch-half-beta", "Corollary 1.10, \"This identity is given by Ramanujan\"")
            .slot("beta", SlotKind::either)
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const PV be = b.at("beta");
                S acc(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    S term = one(N);
                    term.div_binomial(-1, n);
                    term = scale_shift(term, be.power(n)).shifted_up(tri(n));
                    acc += (n % 2 == 0 ? term : -term).truncated(N);
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const PV be = b.at("beta");
                const PV bq = be.times(mono_q());
                S sum(N), inv_bq = one(N), inv_q = one(N);
                for (long long n = 1; n * n <= N; ++n) {
                    if (!bq.coeff().is_zero() && bq.exponent() + n - 1 <= N)
                        inv_bq.div_binomial(-bq.coeff(), static_cast<int>(bq.exponent() + n - 1));
                    inv_q.div_binomial(-1, static_cast<int>(n));
                    S term = scale_shift(inv_bq * inv_q, be.power(static_cast<int>(n)));
                    sum.add_scaled_shift(term, Rational(n), static_cast<int>(n * n));
                }
                return -(pochhammer_inf(bq, 1, N) * sum);
            })
            .done());

    // Corollary 1.11 (three sides)
    out.push_back(
        Entry("agl-alpha-minus-q", "Corollary 1.11, \"Upon taking\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                S mt = pochhammer_inf(mono(-1, 1), 1, N); // (-q^{n+1})_inf
                S pt = detail::euler_inf(N);              // (q^{n+1})_inf
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        mt.div_binomial(1, n);
                        pt.div_binomial(-1, n);
                    }
                    S term = (one(N) - mt) * pt;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                S mt = pochhammer_inf(mono(-1, 1), 1, N);
                S inv_q = one(N);
                for (long long n = 1; n * n <= N; ++n) {
                    mt.div_binomial(1, static_cast<int>(n)); // (-q^{n+1})_inf
                    inv_q.div_binomial(-1, static_cast<int>(n));
                    S term = mt * inv_q;
                    acc.add_scaled_shift(term, Rational(n % 2 == 0 ? n : -n),
                                         static_cast<int>(n * n));
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    S term = one(N);
                    term.div_binomial(-1, n);
                    acc.add_scaled_shift(term, -1, tri(n));
                }
                return acc;
            })
            .done());

    // Corollary 1.12
    out.push_back(
        Entry("agl-alpha-q", "Corollary 1.12, \"Upon taking alpha=q\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                S mt = pochhammer_inf(mono(-1, 1), 1, N);
                S pt = detail::euler_inf(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        mt.div_binomial(1, n);
                        pt.div_binomial(-1, n);
                    }
                    S term = (one(N) - pt) * mt;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N), p_neg = one(N); // (-q)_n
                for (int n = 1; n <= N; ++n) {
                    if (n <= N) p_neg.mul_binomial(1, n);
                    S term = p_neg;
                    term.div_binomial(-1, 2 * n); // /(1 - q^{2n})
                    acc.add_scaled_shift(term, 2, n);
                }
                for (int n = 1; tri(n) <= N; ++n) {
                    S term = one(N);
                    term.div_binomial(-1, n);
                    acc.add_scaled_shift(term, -1, tri(n));
                }
                return acc;
            })
            .done());

    // Corollary 1.13
    out.push_back(
        Entry("product-subtraction", "Corollary 1.13, \"Subtract (1.26) from\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                S mt = pochhammer_inf(mono(-1, 1), 1, N);
                S pt = detail::euler_inf(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        mt.div_binomial(1, n);
                        pt.div_binomial(-1, n);
                    }
                    S term = mt - pt;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N), p_neg = one(N);
                for (int n = 1; n <= N; ++n) {
                    p_neg.mul_binomial(1, n);
                    S term = p_neg;
                    term.div_binomial(-1, 2 * n);
                    acc.add_scaled_shift(term, 2, n);
                }
                return acc;
            })
            .done());

    // Corollary 1.14 (q -> q^2 chain, three sides)
    out.push_back(
        Entry("q-to-q2", "Corollary 1.14, \"Replace q by q^2\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                S a = pochhammer_inf(mono(1, 2), 2, N); // (q^{2n+2}; q^2)_inf
                S b = detail::euler_inf(N);             // (q^{2n+1}; q)_inf
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        a.div_binomial(-1, 2 * n);
                        b.div_binomial(-1, 2 * n - 1);
                        b.div_binomial(-1, 2 * n);
                    }
                    S term = a - b;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                const S pref = pochhammer_inf(mono(1, 1), 2, N); // (q; q^2)_inf
                S sum(N), inv_q = one(N);                        // 1/(q)_{2n}
                for (long long n = 1; n * (2 * n - 1) <= N; ++n) {
                    inv_q.div_binomial(-1, static_cast<int>(2 * n - 1));
                    inv_q.div_binomial(-1, static_cast<int>(2 * n));
                    sum.add_scaled_shift(inv_q, Rational(n), static_cast<int>(n * (2 * n - 1)));
                }
                return pref * sum;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                for (long long n = 1; n * n <= N; ++n) {
                    S term = one(N);
                    term.div_binomial(-1, static_cast<int>(2 * n));
                    acc.add_scaled_shift(term, n % 2 == 1 ? 1 : -1, static_cast<int>(n * n));
                }
                return acc;
            })
            .done());

    // Theorem 1.15: FFW_c generating chain. The enumeration side carries the
    // global sign that makes the printed chain hold (see ffw tests).
    out.push_back(
        Entry("ffw-c-gen", "Theorem 1.15, \"Using (1.32) we have\"")
            .slot("c", SlotKind::rational)
            .oracle_side([](const BindingSet& b, int N, const VerifyOptions& o) {
                return -generating_series({StatSeries::ffw_c, b.at("c").coeff()}, N,
                                          o.enumeration);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                return detail::ffw_middle_sum(b.at("c").coeff(), N);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                return detail::ffw_right_sum(b.at("c").coeff(), N);
            })
            .done());

    // Eq. (1.34): the c -> 1 divisor case
    out.push_back(Entry("ffw-divisor", "Eq. (1.34), \"Letting\"")
                      .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                          return -generating_series({StatSeries::ffw_c, 1}, N, o.enumeration);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return detail::ffw_middle_sum(1, N);
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          return lambert_sum(LambertFlavor::minus_denominator, N);
                      })
                      .done());

    // spt chain: derivative form, tail form, enumeration
    out.push_back(
        Entry("spt-rep", "\"the generating function of spt(n)\"")
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S sum(N), inv_q = one(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = inv_q;
                    term.div_binomial(-1, n);
                    sum.add_scaled_shift(term, Rational(n % 2 == 1 ? n : -n), tri(n));
                }
                return detail::inv_euler_inf(N) * sum;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N);
                S inv_tail = detail::inv_euler_inf(N); // 1/(q^{n+1})_inf
                for (int n = 1; n <= N; ++n) {
                    inv_tail.mul_binomial(-1, n);
                    S term = inv_tail;
                    term.div_binomial(-1, n);
                    term.div_binomial(-1, n);
                    acc.add_scaled_shift(term, 1, n);
                }
                return acc;
            })
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                return generating_series({StatSeries::spt}, N, o.enumeration);
            })
            .done());

    // Eq. (1.36)
    out.push_back(
        Entry("crippa", "Eq. (1.36), \"gave the following expression for\"")
            .slot("k", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                S acc(N), inv_q = one(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = inv_q;
                    for (int i = 0; i < k; ++i) term.div_binomial(-1, n);
                    acc.add_scaled_shift(term, n % 2 == 1 ? 1 : -1, tri(n));
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                S sum(N), inv_q = one(N);
                for (int n = 0; n <= N; ++n) {
                    if (n > 0) inv_q.div_binomial(-1, n);
                    sum.add_scaled_shift(inv_q, detail::binom_rational(k + n - 1, k), n);
                }
                return detail::euler_inf(N) * sum;
            })
            .done());

    // Theorem 1.16 / Eq. (1.37)
    out.push_back(
        Entry("thm-1-16", "Eq. (1.37), \"We answer this question in the affirmative\"")
            .slot("c", SlotKind::rational)
            .slot("a", SlotKind::either)
            .slot("k", SlotKind::integer)
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const PV a = b.at("a");
                const Rational c = b.at("c").coeff();
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N);
                Rational coef = 1; // c^n C(k+n-1, n)
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) coef *= c * Rational(BigInt(k + n - 1), BigInt(n));
                    const PV aqn = a.coeff().is_zero()
                                       ? rat(0)
                                       : (a.exponent() + n == 0 ? rat(a.coeff())
                                                                : mono(a.coeff(), a.exponent() + n));
                    S term = (pochhammer(aqn, 1, len, N) - one(N)).scaled(coef);
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const PV a = b.at("a");
                const Rational c = b.at("c").coeff();
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N), inv_q = one(N);
                for (int n = 1; n <= len; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = rising_power_product(len, n, N) * inv_q;
                    for (int i = 0; i < k; ++i) term.div_binomial(-c, n);
                    acc += scale_shift(term, a.power(n)).truncated(N);
                }
                return acc;
            })
            .done());

    // Eq. (1.38) (the n = 0 term 1 - (q)_inf is part of the sum)
    out.push_back(
        Entry("crippa-limit", "Eq. (1.38), \"Letting N->infty with a = q\"")
            .slot("c", SlotKind::rational)
            .slot("k", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const Rational c = b.at("c").coeff();
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                S acc(N);
                S tail = detail::euler_inf(N); // (q^{n+1})_inf
                Rational coef = 1;
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        tail.div_binomial(-1, n);
                        coef *= c * Rational(BigInt(k + n - 1), BigInt(n));
                    }
                    S term = (one(N) - tail).scaled(coef);
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational c = b.at("c").coeff();
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                S acc(N), inv_q = one(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = inv_q;
                    for (int i = 0; i < k; ++i) term.div_binomial(-c, n);
                    acc.add_scaled_shift(term, n % 2 == 1 ? 1 : -1, tri(n));
                }
                return acc;
            })
            .done());

    // The remark after Theorem 1.16
    out.push_back(
        Entry("crippa-remark", "\"simple looking sum of tail identity\"")
            .slot("k", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                const S full = detail::inv_euler_inf(N);
                S acc(N), inv_q = one(N);
                Rational coef = 1;
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        inv_q.div_binomial(-1, n);
                        coef *= Rational(BigInt(k + n - 1), BigInt(n));
                    }
                    S term = (full - inv_q).scaled(coef);
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int k = static_cast<int>(b.int_at("k", 1, 64));
                S acc(N), inv_q = one(N);
                for (int n = 0; n <= N; ++n) {
                    if (n > 0) inv_q.div_binomial(-1, n);
                    acc.add_scaled_shift(inv_q, detail::binom_rational(k + n - 1, k), n);
                }
                return acc;
            })
            .done());

    // Special cases (a)-(e) of the remark
    out.push_back(Entry("remark1-a", "\"Special cases of Remark\" (a)")
                      .slot("t", SlotKind::monomial)
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          const PV t = b.at("t");
                          S acc = one(N);
                          S inv_tail = inv_pochhammer_inf(t, 1, N); // 1/(t q^{n-1})_inf
                          for (int n = 1; n - 1 <= N; ++n) {
                              if (n >= 2 && t.exponent() + n - 2 <= N)
                                  inv_tail.mul_binomial(-t.coeff(), t.exponent() + n - 2);
                              acc += scale_shift(inv_tail, t).shifted_up(n - 1).truncated(N);
                          }
                          return acc;
                      })
                      .side([](const BindingSet& b, int N, const VerifyOptions&) {
                          return inv_pochhammer_inf(b.at("t"), 1, N);
                      })
                      .done());

    out.push_back(Entry("remark1-b", "\"Special cases of Remark\" (b)")
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv_qm = one(N); // 1/(q)_{n-1}
                          for (int n = 1; n <= N; ++n) {
                              if (n >= 2) inv_qm.div_binomial(-1, n - 1);
                              S term = inv_qm;
                              term.div_binomial(-1, n);
                              term.div_binomial(-1, n);
                              acc.add_scaled_shift(term, 1, n);
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N);
                          S inv_tail = detail::inv_euler_inf(N); // 1/(q^n)_inf
                          for (int n = 1; n <= N; ++n) {
                              if (n >= 2) inv_tail.mul_binomial(-1, n - 1);
                              acc.add_scaled_shift(inv_tail, Rational(n), n);
                          }
                          return acc;
                      })
                      .done());

    out.push_back(Entry("remark1-c", "\"Special cases of Remark\" (c)")
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv_q = one(N);
                          for (int n = 1; n <= N; ++n) {
                              inv_q.div_binomial(-1, n);
                              S term = inv_q;
                              term.div_binomial(1, n); // /(1 + q^n)
                              acc.add_scaled_shift(term, 1, n);
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N);
                          S inv_tail = detail::inv_euler_inf(N); // 1/(q^{2n-1})_inf
                          for (int n = 1; 2 * n - 1 <= N; ++n) {
                              if (n >= 2) {
                                  inv_tail.mul_binomial(-1, 2 * n - 3);
                                  inv_tail.mul_binomial(-1, 2 * n - 2);
                              }
                              acc.add_scaled_shift(inv_tail, 1, 2 * n - 1);
                          }
                          return acc;
                      })
                      .done());

    out.push_back(Entry("remark1-d", "\"Special cases of Remark\" (d)")
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv_q = one(N);
                          for (int n = 1; n <= N; ++n) {
                              inv_q.div_binomial(-1, n);
                              S term = inv_q;
                              term.div_binomial(-1, n);
                              acc.add_scaled_shift(term, n % 2 == 1 ? 1 : -1, n);
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N);
                          S inv_tail = inv_pochhammer_inf(mono(-1, 1), 1, N); // 1/(-q^n)_inf
                          for (int n = 1; n <= N; ++n) {
                              if (n >= 2) inv_tail.mul_binomial(1, n - 1);
                              acc.add_scaled_shift(inv_tail, Rational(n), n);
                          }
                          return acc;
                      })
                      .done());

    out.push_back(Entry("remark1-e", "\"Special cases of Remark\" (e)")
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N), inv_q = one(N);
                          for (int n = 1; n <= N; ++n) {
                              inv_q.div_binomial(-1, n);
                              S term = inv_q;
                              term.div_binomial(1, n);
                              acc.add_scaled_shift(term, n % 2 == 1 ? 1 : -1, n);
                          }
                          return acc;
                      })
                      .side([](const BindingSet&, int N, const VerifyOptions&) {
                          S acc(N);
                          S inv_tail = inv_pochhammer_inf(mono(-1, 1), 1, N); // 1/(-q^{2n-1})_inf
                          for (int n = 1; 2 * n - 1 <= N; ++n) {
                              if (n >= 2) {
                                  inv_tail.mul_binomial(1, 2 * n - 3);
                                  inv_tail.mul_binomial(1, 2 * n - 2);
                              }
                              acc.add_scaled_shift(inv_tail, 1, 2 * n - 1);
                          }
                          return acc;
                      })
                      .done());

    // lpt(n) = t(n), purely by enumeration
    out.push_back(Entry("lpt-equals-t", "\"total number of appearances of largest parts\"")
                      .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                          return generating_series({StatSeries::lpt}, N, o.enumeration);
                      })
                      .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                          return generating_series({StatSeries::t_sum}, N, o.enumeration);
                      })
                      .done());

    // l_o(n) = s(n), purely by enumeration
    out.push_back(
        Entry("lodd-equals-s", "\"the number of appearances of the largest part is odd\"")
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                return generating_series({StatSeries::l_odd}, N, o.enumeration);
            })
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                return generating_series({StatSeries::s_odd}, N, o.enumeration);
            })
            .done());

    // Finite analogues at the end of the proofs section
    out.push_back(
        Entry("af-finite-iv", "\"finite analogues of some of the corollaries\" (iv)")
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N);
                S etail = detail::euler_inf(N); // (q)_inf/(q)_n = (q^{n+1})_inf
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) etail.div_binomial(-1, n);
                    S term = etail * (detail::poch_shift(n + 1, len, N) - one(N));
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N);
                for (int n = 1; n <= len && tri(n) <= N; ++n) {
                    S term = gaussian_binomial(len, n, N) * detail::poch_q(n, N);
                    term.div_binomial(-1, n);
                    acc.add_scaled_shift(term, n % 2 == 0 ? 1 : -1, tri(n));
                }
                return acc;
            })
            .done());

    out.push_back(
        Entry("af-finite-vii", "\"finite analogues of some of the corollaries\" (vii)")
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const S v = detail::inv_poch_q(len, N);
                const S v2 = v * v;
                S acc(N), u = one(N); // (q^{N+1})_n / (q)_n
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (len + n <= N) u.mul_binomial(-1, len + n);
                        u.div_binomial(-1, n);
                    }
                    S term = u * u - v2;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const S pq = detail::poch_q(len, N);
                S sum(N);
                for (int n = 1; n <= len && tri(n) <= N; ++n) {
                    S inner = pq * inv_pochhammer(mono(1, n + 1), 1, len, N) + one(N);
                    S term = gaussian_binomial(len, n, N) * inner;
                    term.div_binomial(-1, n);
                    sum.add_scaled_shift(term, n % 2 == 0 ? 1 : -1, tri(n));
                }
                const S iv = detail::inv_poch_q(len, N);
                return iv * iv * sum;
            })
            .done());

    out.push_back(
        Entry("af-finite-ix-a", "\"finite analogues of some of the corollaries\" (ix.a)")
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const S pq_len = detail::poch_q(len, N);
                S acc(N), p_q = one(N), inv_shift = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (n <= N) p_q.mul_binomial(-1, n);
                        if (len + n <= N) inv_shift.div_binomial(-1, len + n);
                        inv_q.div_binomial(-1, n);
                    }
                    if (tri(n) > N) break;
                    S term = ((p_q * inv_shift - pq_len) * inv_q).shifted_up(tri(n));
                    if (n % 2 == 1) term = -term;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc * detail::inv_poch_q(len, N) * detail::inv_euler_inf(N);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                // [N+n-1, n] q^n / (q)_n = (q^N)_n q^n / ((q)_n (q)_n)
                S acc(N), p_qN = one(N), inv_sq = one(N);
                for (int n = 1; n <= N; ++n) {
                    if (len + n - 1 <= N) p_qN.mul_binomial(-1, len + n - 1);
                    inv_sq.div_binomial(-1, n);
                    inv_sq.div_binomial(-1, n);
                    acc += (p_qN * inv_sq).shifted_up(n).truncated(N);
                }
                return acc;
            })
            .done());

    out.push_back(
        Entry("af-finite-ix-b", "\"finite analogues of some of the corollaries\" (ix.b)")
            .slot("N", SlotKind::integer)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                const S v = detail::inv_poch_q(len, N);
                S acc(N), u = one(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) {
                        if (len + n <= N) u.mul_binomial(-1, len + n);
                        u.div_binomial(-1, n);
                        inv_q.div_binomial(-1, n);
                    }
                    if (tri(n) > N) break;
                    S term = ((u - v) * inv_q).shifted_up(tri(n));
                    if (n % 2 == 1) term = -term;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc * detail::poch_q(len, N) * detail::inv_euler_inf(N);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const int len = static_cast<int>(b.int_at("N", 1, 64));
                S acc(N), inv_q = one(N);
                for (int n = 1; n <= len && tri(n) <= N; ++n) {
                    inv_q.div_binomial(-1, n);
                    S term = gaussian_binomial(len, n, N) * inv_q;
                    acc.add_scaled_shift(term, n % 2 == 0 ? 1 : -1, tri(n));
                }
                return acc;
            })
            .done());

    out.push_back(
        Entry("af-limit-identity", "\"leads to a beautiful identity\"")
            .side([](const BindingSet&, int N, const VerifyOptions& o) {
                const S full = detail::inv_euler_inf(N);
                S acc(N), inv_q = one(N);
                SumGuard guard(o.sum.guard);
                for (int n = 0;; ++n) {
                    if (n > 0) inv_q.div_binomial(-1, n);
                    if (tri(n) > N) break;
                    S term = ((inv_q - full) * inv_q).shifted_up(tri(n));
                    if (n % 2 == 1) term = -term;
                    if (!guard.admit(term.valuation(), N)) break;
                    acc += term;
                }
                return acc;
            })
            .side([](const BindingSet&, int N, const VerifyOptions&) {
                S acc(N), inv_sq = one(N);
                for (int n = 1; tri(n) <= N; ++n) {
                    inv_sq.div_binomial(-1, n);
                    inv_sq.div_binomial(-1, n);
                    acc.add_scaled_shift(inv_sq, n % 2 == 1 ? -1 : 1, tri(n));
                }
                return acc;
            })
            .done());

    // The sigma' weighted identity (both sides by enumeration)
    out.push_back(
        Entry("sigma-prime-weighted", "\"the weighted partition identity resulting from it\"")
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    long long rank_sum = 0, count = 0;
                    enumerate(ClassSpec::distinct(n), [&](std::span<const int> p) {
                        const auto st = stats(p);
                        rank_sum += (st.rank % 2 + 2) % 2 == 0 ? 1 : -1;
                        ++count;
                        return true;
                    });
                    acc.set_coeff(n, Rational(rank_sum - count));
                }
                return acc;
            })
            .oracle_side([](const BindingSet&, int N, const VerifyOptions& o) {
                // 2 ( sum_{k=0}^{n-1} d(k) sigma'(n-k) - |B(n)| )
                std::vector<Rational> dd(N + 1);
                for (int k = 0; k <= N; ++k) dd[k] = Rational(d_distinct(k));
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    Rational conv = 0;
                    for (int k = 0; k < n; ++k) conv += dd[k] * sigma_prime(n - k);
                    long long bcount = 0;
                    enumerate(ClassSpec::smallest_repeats(n), [&](std::span<const int>) {
                        ++bcount;
                        return true;
                    });
                    acc.set_coeff(n, (conv - Rational(bcount)) * Rational(2));
                }
                return acc;
            })
            .done());

    // The weighted identity carried by Eq. (1.19) at t = q: the k-th tail
    // selects distinct partitions by largest part > k, and on the repeating
    // side the sign rides on the parts above the smallest. Both enumeration
    // sides plus the series bridge they transcribe.
    out.push_back(
        Entry("agl-weighted", "\"weighted partition identity associated to\"")
            .slot("c", SlotKind::rational)
            .oracle_side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const Rational c = b.at("c").coeff();
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    // sum_k c^k sum_{pi distinct, l(pi) > k} (-1)^{#pi + 1}
                    //   = sum_{pi distinct} (-1)^{#pi+1} (1 + c + ... + c^{l(pi)-1})
                    Rational total = 0;
                    enumerate(ClassSpec::distinct(n), [&](std::span<const int> p) {
                        const Rational w = detail::power_partial_sum(c, p.front());
                        total += p.size() % 2 == 1 ? w : -w;
                        return true;
                    });
                    acc.set_coeff(n, total);
                }
                return acc;
            })
            .oracle_side([](const BindingSet& b, int N, const VerifyOptions& o) {
                const Rational c = b.at("c").coeff();
                S acc(N);
                for (int n = 1; n <= N; ++n) {
                    check_budget(n, o);
                    Rational total = 0;
                    enumerate(ClassSpec::smallest_repeats(n), [&](std::span<const int> p) {
                        const auto st = stats(p);
                        const Rational w = c.pow(st.smallest_mult - 1);
                        total += (st.num_parts - st.smallest_mult) % 2 == 0 ? w : -w;
                        return true;
                    });
                    acc.set_coeff(n, total);
                }
                return acc;
            })
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                // sum_m c^m [ (q)_m - (q)_inf ]
                return zagier_tail_sum(b.at("c"), mono_q(), std::nullopt, N, o);
            })
            .done());

    // Eq. (5.1)
    out.push_back(
        Entry("new-zagier", "Eq. (5.1), \"The special case c=1 of the above identity\"")
            .slot("c", SlotKind::rational)
            .side([](const BindingSet& b, int N, const VerifyOptions& o) {
                return zagier_tail_sum(b.at("c"), mono_q(), std::nullopt, N, o);
            })
            .side([](const BindingSet& b, int N, const VerifyOptions&) {
                const Rational c = b.at("c").coeff();
                S acc(N), p_qm = one(N); // (q)_{n-1}
                for (int n = 1; n <= N; ++n) {
                    if (n >= 2 && n - 1 <= N) p_qm.mul_binomial(-1, n - 1);
                    acc.add_scaled_shift(p_qm, detail::power_partial_sum(c, n), n);
                }
                return acc;
            })
            .done());

    return out;
}

} // namespace

const std::vector<IdentityDescriptor>& catalog() {
    static const std::vector<IdentityDescriptor> entries = make_catalog();
    return entries;
}

} // namespace qtails
