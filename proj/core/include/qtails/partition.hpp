#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtails/series.hpp"

namespace qtails {

// An integer partition: weakly decreasing list of positive parts. The empty
// partition (of 0) is allowed; by convention all of its statistics are 0 and
// it is excluded from every weighted sum.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

struct PartitionStats {
    int smallest = 0;
    int largest = 0;
    int num_parts = 0;
    int rank = 0; // largest - num_parts
    int smallest_mult = 0;
    int largest_mult = 0;
    int num_distinct = 0;
};

PartitionStats stats(std::span<const int> parts);
inline PartitionStats stats(const Partition& p) { return stats(std::span<const int>(p.parts())); }

// Andrews-Garvan crank: largest part when there are no ones, otherwise
// (number of parts exceeding the number of ones) - (number of ones).
int crank(std::span<const int> parts);
inline int crank(const Partition& p) { return crank(std::span<const int>(p.parts())); }

// Partition classes from the weighted identities:
//   P      all partitions
//   D      distinct parts
//   Dk     distinct parts, each part > k
//   B      only the smallest part may repeat
//   Bprime only the largest part may repeat
enum class PartitionClass { P, D, Dk, B, Bprime };

struct ClassSpec {
    PartitionClass cls = PartitionClass::P;
    int n = 0;
    int k = 0; // only for Dk

    static ClassSpec all(int n) { return {PartitionClass::P, n, 0}; }
    static ClassSpec distinct(int n) { return {PartitionClass::D, n, 0}; }
    static ClassSpec distinct_gt(int k, int n) { return {PartitionClass::Dk, n, k}; }
    static ClassSpec smallest_repeats(int n) { return {PartitionClass::B, n, 0}; }
    static ClassSpec largest_repeats(int n) { return {PartitionClass::Bprime, n, 0}; }
};

// Streams every partition of the class exactly once, in descending
// lexicographic order of the part lists. The visitor sees the parts in
// weakly decreasing order; returning false stops the enumeration.
void enumerate(const ClassSpec& spec, const std::function<bool(std::span<const int>)>& visit);
std::vector<Partition> enumerate_all(const ClassSpec& spec);

// p(n) by the pentagonal-number recurrence (memoized); used for enumeration
// budgets and completeness checks. Saturates at uint64 max.
std::uint64_t partition_count(int n);

// FFW_c(n) = sum over distinct-part partitions of n of (-c)^{#parts} * smallest.
Rational ffw(int n, const Rational& c);

long long spt(int n);          // total appearances of smallest parts over P(n)
long long lpt(int n);          // total appearances of largest parts over P(n)
long long t_sum(int n);        // sum of the smallest part (without multiplicity) over P(n)
long long l_odd(int n);        // # partitions whose largest part appears an odd number of times
long long s_odd(int n);        // # partitions whose smallest part is odd
long long crank_moment(int n); // sum_{m >= 1} m * M(m, n)

int d_divisors(int n);       // number of divisors
long long d_distinct(int n); // number of partitions into distinct parts; d_distinct(0) = 1

// sigma'(0) = 1/2; sigma'(k) = sum_{d | k} (-1)^{d-1} for k >= 1.
Rational sigma_prime(int k);

// Weight expressions over partition statistics. Closed vocabulary: a product
// of factors separated by '*', each factor one of
//   <rational>            constant
//   <stat>                linear statistic factor
//   <base>^<stat>[+/-c]   rational base raised to a statistic (with offset)
// where <stat> is one of: smallest, largest, parts, rank, smallest_mult,
// largest_mult, distinct. Example: "(-2)^smallest_mult-1" or "(-1)^parts*smallest".
class WeightExpr {
public:
    static WeightExpr parse(std::string_view text); // WeightSpecError on malformed input
    Rational eval(const PartitionStats& st) const;
    const std::string& text() const { return text_; }

private:
    enum class Stat { smallest, largest, parts, rank, smallest_mult, largest_mult, distinct };
    struct PowFactor {
        Rational base;
        Stat stat;
        int offset = 0;
    };
    Rational coeff_ = 1;
    std::vector<PowFactor> pows_;
    std::vector<Stat> linear_;
    std::string text_;

    static long long stat_value(Stat s, const PartitionStats& st);
    friend class WeightParser;
};

// Sum of the weight over the class (empty partition excluded).
Rational weighted_sum(const ClassSpec& spec, const WeightExpr& weight);

enum class StatSeries { ffw_c, spt, lpt, t_sum, l_odd, s_odd, crank_moment, class_count };

struct StatRequest {
    StatSeries stat;
    Rational c = 1;                            // ffw_c only
    PartitionClass cls = PartitionClass::P;    // class_count only
    int k = 0;                                 // class_count of Dk only
};

struct EnumerationOptions {
    std::uint64_t budget = 2'000'000; // max p(n) per enumerated n
};

// sum_n stat(n) q^n, computed entirely by enumeration (independent of the
// series builders). BudgetExceeded when some n <= order has p(n) > budget.
TruncatedSeries generating_series(const StatRequest& req, int order,
                                  const EnumerationOptions& opts = {});

} // namespace qtails
