#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtails/param.hpp"
#include "qtails/partition.hpp"
#include "qtails/qseries.hpp"

namespace qtails {

enum class SlotKind { rational, monomial, either, integer };

struct ParamSlot {
    std::string name;
    SlotKind kind;
    std::string note; // pole exclusions and admissibility remarks
};

struct VerifyOptions {
    SumOptions sum{};              // NonConvergentSum guard
    EnumerationOptions enumeration{}; // oracle-side budget
};

enum class VerifyStatus { pass, fail, skipped_pole, non_convergent };

std::string_view to_string(VerifyStatus s);

struct Mismatch {
    int exponent = 0;
    Rational lhs, rhs;
    int side_a = 0, side_b = 1; // which pair of sides disagreed
};

// Outcome of one verification run.
struct VerificationReport {
    std::string id;
    int order = 0;
    BindingSet bindings;
    VerifyStatus status = VerifyStatus::pass;
    std::optional<Mismatch> first_mismatch;
    double elapsed_ms = 0.0;
    std::string detail; // pole reason / guard message
};

using SideBuilder =
    std::function<TruncatedSeries(const BindingSet&, int order, const VerifyOptions&)>;

// One identity: an anchor into the source text, parameter slots, and two or
// three independently constructed sides (equality chains keep all three).
struct IdentityDescriptor {
    std::string id;
    std::string anchor;
    std::vector<ParamSlot> slots;
    std::vector<SideBuilder> sides;
    std::vector<int> oracle_sides; // indices of sides built by enumeration
    int default_order = 40;
    // Returns a reason when the binding hits a pole exclusion.
    std::function<std::optional<std::string>(const BindingSet&)> pole;
    std::vector<BindingSet> grid; // default verification grid (capped at 40)
};

const std::vector<IdentityDescriptor>& catalog();
const IdentityDescriptor& descriptor(const std::string& id); // BindingError if unknown

TruncatedSeries build_side(const std::string& id, int side, const BindingSet& bindings, int order,
                           const VerifyOptions& opts = {});

VerificationReport verify(const std::string& id, const BindingSet& bindings, int order,
                          const VerifyOptions& opts = {});

// Same engine, caller-supplied descriptor (used by tests to run doubles
// through the identical comparison path).
VerificationReport verify_descriptor(const IdentityDescriptor& d, const BindingSet& bindings,
                                     int order, const VerifyOptions& opts = {});

// Every entry on its default grid (or the override), order applied uniformly.
// Jobs may fan out over `threads` workers (0 = hardware default, capped by
// the QTAILS_THREADS environment variable); reports come back in
// deterministic id-then-binding order regardless.
std::vector<VerificationReport> verify_all(
    int order, const VerifyOptions& opts = {},
    const std::vector<std::pair<std::string, BindingSet>>* grid_override = nullptr,
    unsigned threads = 0);

std::vector<BindingSet> default_grid(const std::string& id);

// g-inputs for the finite sum-of-tails engine: explicit coefficients, or one
// of the closed forms the corollaries instantiate.
struct GChoice {
    enum class Kind {
        coefficients,      // finite list g_0..g_d
        geometric,         // g(x) = 1/(1 - c x)
        eta_ratio,         // g_n = (q)_inf / (q)_n
        q_exponential_alt, // g_n = (-1)^n q^{n(n+1)/2} / (q)_n
        binomial_negative, // g(x) = 1/(1 - c x)^k
    };
    Kind kind = Kind::geometric;
    std::vector<Rational> coeffs;
    Rational c = Rational(1, 2);
    int k = 1;

    static GChoice coefficients(std::vector<Rational> v) {
        return {Kind::coefficients, std::move(v), 0, 1};
    }
    static GChoice geometric(Rational c) { return {Kind::geometric, {}, std::move(c), 1}; }
    static GChoice eta_ratio() { return {Kind::eta_ratio, {}, 0, 1}; }
    static GChoice q_exponential_alt() { return {Kind::q_exponential_alt, {}, 0, 1}; }
    static GChoice binomial_negative(int k, Rational c) {
        return {Kind::binomial_negative, {}, std::move(c), k};
    }
};

// The finite sum-of-tails engine. `t` must be a monomial or exactly 0 (the
// algebraically pre-cancelled limit); `a` is a rational (not 1) or monomial.
// Returns the two sides as independently built series.
std::pair<TruncatedSeries, TruncatedSeries> theorem1_engine(const GChoice& g, const ParamValue& a,
                                                            const ParamValue& t, int n_finite,
                                                            int order,
                                                            const VerifyOptions& opts = {});

} // namespace qtails
