// qtails: expand named q-series, verify catalog identities singly or in
// bulk, and emit partition-statistic tables. Exit codes: 0 success / all
// verifications passed, 1 at least one fail or non-convergent result,
// 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtails/catalog.hpp"
#include "qtails/report.hpp"

namespace {

using namespace qtails;

BindingSet parse_params(const std::vector<std::string>& params) {
    BindingSet bs;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw BindingError("expected --param name=value, got '" + p + "'");
        bs.bind(p.substr(0, eq), ParamValue::parse(p.substr(eq + 1)));
    }
    return bs;
}

struct OutputSink {
    std::ostream* stream = &std::cout;
    std::unique_ptr<std::ofstream> file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw IOError("cannot open '" + path + "' for writing");
        stream = file.get();
    }
};

ReportFormat parse_format(const std::string& f) {
    if (f == "text") return ReportFormat::text;
    if (f == "json") return ReportFormat::json;
    if (f == "csv") return ReportFormat::csv;
    throw BindingError("unknown format '" + f + "' (text|json|csv)");
}

TruncatedSeries named_series(const std::string& name, const BindingSet& params, int order,
                             const VerifyOptions& opts) {
    if (name == "sigma") return build_side("sigma-two-forms", 0, {}, order, opts);
    if (name == "sigma-finite") return build_side("sigma-finite", 0, params, order, opts);
    if (name == "delta") return build_side("delta-at-minus1", 0, {}, order, opts);
    if (name == "phi") return build_side("mock-phi", 0, {}, order, opts);
    if (name == "psi") return build_side("mock-psi", 0, {}, order, opts);
    if (name == "euler") return pochhammer_inf(ParamValue::monomial(1, 1), 1, order);
    if (name == "partitions") return inv_pochhammer_inf(ParamValue::monomial(1, 1), 1, order);
    if (name == "distinct") return pochhammer_inf(ParamValue::monomial(-1, 1), 1, order);
    if (name == "lambert") return lambert_sum(LambertFlavor::minus_denominator, order);
    if (name == "lambert-plus") return lambert_sum(LambertFlavor::plus_denominator, order);
    if (name == "eta24")
        return pochhammer_inf(ParamValue::monomial(1, 24), 24, order).shifted_up(1);
    if (name == "ffw")
        return generating_series({StatSeries::ffw_c, params.at("c").coeff()}, order,
                                 opts.enumeration);
    throw BindingError("unknown series '" + name + "'");
}

void emit_series(const TruncatedSeries& s, const std::string& name, ReportFormat format,
                 std::ostream& out) {
    switch (format) {
    case ReportFormat::csv:
        for (int i = 0; i <= s.order(); ++i) out << i << "," << s[i].str() << "\n";
        break;
    case ReportFormat::json:
        out << "{\n  \"series\": \"" << name << "\",\n  \"order\": " << s.order()
            << ",\n  \"coeffs\": [";
        for (int i = 0; i <= s.order(); ++i) out << (i ? ", " : "") << "\"" << s[i].str() << "\"";
        out << "]\n}\n";
        break;
    case ReportFormat::text:
        for (int i = 0; i <= s.order(); ++i) out << "q^" << i << ": " << s[i].str() << "\n";
        break;
    }
}

Rational stat_value(const std::string& stat, int n, const BindingSet& params,
                    const VerifyOptions& opts) {
    if (partition_count(n) > opts.enumeration.budget)
        throw BudgetExceeded("p(" + std::to_string(n) + ") exceeds the enumeration budget");
    if (stat == "spt") return Rational(spt(n));
    if (stat == "lpt") return Rational(lpt(n));
    if (stat == "t-sum") return Rational(t_sum(n));
    if (stat == "l-odd") return Rational(l_odd(n));
    if (stat == "s-odd") return Rational(s_odd(n));
    if (stat == "crank-moment") return Rational(crank_moment(n));
    if (stat == "d-divisors") return Rational(d_divisors(n));
    if (stat == "d-distinct") return Rational(d_distinct(n));
    if (stat == "sigma-prime") return sigma_prime(n);
    if (stat == "ffw") return ffw(n, params.at("c").coeff());
    if (stat == "count-p" || stat == "count-d" || stat == "count-b" || stat == "count-bprime" ||
        stat == "count-dk") {
        ClassSpec spec = ClassSpec::all(n);
        if (stat == "count-d") spec = ClassSpec::distinct(n);
        if (stat == "count-b") spec = ClassSpec::smallest_repeats(n);
        if (stat == "count-bprime") spec = ClassSpec::largest_repeats(n);
        if (stat == "count-dk")
            spec = ClassSpec::distinct_gt(static_cast<int>(params.int_at("k", 0, 1 << 20)), n);
        long long count = 0;
        enumerate(spec, [&](std::span<const int>) {
            ++count;
            return true;
        });
        return Rational(count);
    }
    throw BindingError("unknown statistic '" + stat + "'");
}

ClassSpec class_by_name(const std::string& cls, int n, const BindingSet& bindings) {
    if (cls.empty() || cls == "p") return ClassSpec::all(n);
    if (cls == "d") return ClassSpec::distinct(n);
    if (cls == "dk")
        return ClassSpec::distinct_gt(static_cast<int>(bindings.int_at("k", 0, 1 << 20)), n);
    if (cls == "b") return ClassSpec::smallest_repeats(n);
    if (cls == "bprime") return ClassSpec::largest_repeats(n);
    throw BindingError("unknown class '" + cls + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity laboratory"};
    app.require_subcommand(1);

    std::string target, format = "text", out_path;
    std::vector<std::string> params;
    int order = -1;
    int guard = 50;
    long long budget = 2'000'000;
    bool all = false;
    std::string weight, cls;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "truncation order");
        cmd->add_option("--param", params, "parameter binding name=value (repeatable)");
        cmd->add_option("--format", format, "text|json|csv");
        cmd->add_option("--out", out_path, "write to file instead of stdout");
        cmd->add_option("--guard", guard, "formal-sum stall guard");
        cmd->add_option("--budget", budget, "enumeration budget (max p(n) per n)");
    };

    auto* expand = app.add_subcommand("expand", "expand a named series");
    expand->add_option("--series", target, "series name")->required();
    add_common(expand);

    auto* verify_cmd = app.add_subcommand("verify", "verify catalog identities");
    verify_cmd->add_option("--id", target, "identity id");
    verify_cmd->add_flag("--all", all, "verify every entry on its default grid");
    add_common(verify_cmd);

    auto* table = app.add_subcommand("table", "partition-statistic table");
    table->add_option("--stat", target, "statistic name");
    table->add_option("--class", cls, "partition class for --weight (p|d|dk|b|bprime)");
    table->add_option("--weight", weight, "weight expression summed over --class");
    add_common(table);

    auto* list = app.add_subcommand("list", "list identity ids with anchors and slots");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help/--version
        app.exit(e);
        return 2;
    }

    VerifyOptions opts;
    opts.sum.guard = guard;
    opts.enumeration.budget = static_cast<std::uint64_t>(budget);

    try {
        OutputSink sink;
        sink.open(out_path);
        std::ostream& os = *sink.stream;
        const BindingSet bindings = parse_params(params);

        if (expand->parsed()) {
            const int n = order < 0 ? 20 : order;
            emit_series(named_series(target, bindings, n, opts), target, parse_format(format), os);
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::vector<VerificationReport> reports;
            int run_order = order;
            if (all) {
                if (run_order < 0) run_order = 40;
                reports = verify_all(run_order, opts);
            } else {
                if (target.empty()) {
                    std::cerr << "verify needs --id or --all\n";
                    return 2;
                }
                if (run_order < 0) run_order = descriptor(target).default_order;
                reports.push_back(verify(target, bindings, run_order, opts));
            }
            RunMeta meta{run_order, grid_hash(reports), iso_timestamp_utc_now()};
            emit_report(reports, meta, parse_format(format), os);
            os.flush();
            for (const auto& r : reports)
                if (r.status == VerifyStatus::fail || r.status == VerifyStatus::non_convergent)
                    return 1;
            return 0;
        }

        if (table->parsed()) {
            const int n_max = order < 0 ? 20 : order;
            const ReportFormat f = parse_format(format);
            if (f == ReportFormat::json)
                throw BindingError("table supports text and csv output");
            if (f == ReportFormat::csv) os << "n,value\n";
            if (!weight.empty()) {
                const WeightExpr expr = WeightExpr::parse(weight);
                for (int n = 1; n <= n_max; ++n) {
                    if (partition_count(n) > opts.enumeration.budget)
                        throw BudgetExceeded("p(" + std::to_string(n) + ") exceeds budget");
                    const Rational v = weighted_sum(class_by_name(cls, n, bindings), expr);
                    os << n << (f == ReportFormat::text ? ": " : ",") << v.str() << "\n";
                }
                return 0;
            }
            if (target.empty()) {
                std::cerr << "table needs --stat or --weight\n";
                return 2;
            }
            const int start = target == "sigma-prime" ? 0 : 1;
            for (int n = start; n <= n_max; ++n) {
                const Rational v = stat_value(target, n, bindings, opts);
                os << n << (f == ReportFormat::text ? ": " : ",") << v.str() << "\n";
            }
            return 0;
        }

        if (list->parsed()) {
            for (const auto& d : catalog()) {
                os << d.id << "  " << d.anchor;
                if (!d.slots.empty()) {
                    os << "  [";
                    for (std::size_t i = 0; i < d.slots.size(); ++i) {
                        if (i) os << ", ";
                        os << d.slots[i].name;
                    }
                    os << "]";
                }
                os << "\n";
            }
            return 0;
        }
    } catch (const IOError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
