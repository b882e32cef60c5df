#include "qtails/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace qtails {

std::string_view to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::skipped_pole: return "skipped-pole";
    case VerifyStatus::non_convergent: return "non-convergent";
    }
    return "?";
}

const IdentityDescriptor& descriptor(const std::string& id) {
    for (const auto& d : catalog())
        if (d.id == id) return d;
    throw BindingError("unknown identity id '" + id + "'");
}

namespace {

void check_bindings(const IdentityDescriptor& d, const BindingSet& b) {
    for (const auto& slot : d.slots) {
        const ParamValue* v = b.find(slot.name);
        if (!v) throw BindingError("identity '" + d.id + "': unbound slot '" + slot.name + "'");
        switch (slot.kind) {
        case SlotKind::rational:
            if (!v->is_rational())
                throw BindingError("slot '" + slot.name + "' takes a rational constant");
            break;
        case SlotKind::monomial:
            if (!v->is_monomial())
                throw BindingError("slot '" + slot.name + "' takes a q-monomial");
            break;
        case SlotKind::integer:
            if (!v->is_rational() || !v->coeff().is_integer())
                throw BindingError("slot '" + slot.name + "' takes an integer");
            break;
        case SlotKind::either:
            break;
        }
    }
    for (const auto& [name, value] : b) {
        (void)value;
        const bool known = std::any_of(d.slots.begin(), d.slots.end(),
                                       [&](const ParamSlot& s) { return s.name == name; });
        if (!known) throw BindingError("identity '" + d.id + "': unknown parameter '" + name + "'");
    }
}

} // namespace

TruncatedSeries build_side(const std::string& id, int side, const BindingSet& bindings, int order,
                           const VerifyOptions& opts) {
    const IdentityDescriptor& d = descriptor(id);
    if (side < 0 || side >= static_cast<int>(d.sides.size()))
        throw BindingError("identity '" + id + "' has no side " + std::to_string(side));
    check_bindings(d, bindings);
    if (auto reason = d.pole(bindings)) throw PoleError(*reason);
    return d.sides[side](bindings, order, opts);
}

VerificationReport verify(const std::string& id, const BindingSet& bindings, int order,
                          const VerifyOptions& opts) {
    return verify_descriptor(descriptor(id), bindings, order, opts);
}

VerificationReport verify_descriptor(const IdentityDescriptor& d, const BindingSet& bindings,
                                     int order, const VerifyOptions& opts) {
    check_bindings(d, bindings);

    VerificationReport rep;
    rep.id = d.id;
    rep.order = order < 0 ? d.default_order : order;
    rep.bindings = bindings;

    const auto start = std::chrono::steady_clock::now();
    const auto finish = [&] {
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return rep;
    };

    if (auto reason = d.pole(bindings)) {
        rep.status = VerifyStatus::skipped_pole;
        rep.detail = *reason;
        return finish();
    }

    std::vector<TruncatedSeries> sides;
    try {
        sides.reserve(d.sides.size());
        for (const auto& builder : d.sides) sides.push_back(builder(bindings, rep.order, opts));
    } catch (const NonConvergentSum& e) {
        rep.status = VerifyStatus::non_convergent;
        rep.detail = e.what();
        return finish();
    } catch (const PoleError& e) {
        rep.status = VerifyStatus::skipped_pole;
        rep.detail = e.what();
        return finish();
    }

    rep.status = VerifyStatus::pass;
    for (std::size_t i = 0; i + 1 < sides.size() && rep.status == VerifyStatus::pass; ++i) {
        for (std::size_t j = i + 1; j < sides.size(); ++j) {
            const int common = std::min({rep.order, sides[i].order(), sides[j].order()});
            if (auto bad = sides[i].first_mismatch(sides[j], common)) {
                rep.status = VerifyStatus::fail;
                rep.first_mismatch = Mismatch{*bad, sides[i][*bad], sides[j][*bad],
                                              static_cast<int>(i), static_cast<int>(j)};
                break;
            }
        }
    }
    return finish();
}

std::vector<BindingSet> default_grid(const std::string& id) { return descriptor(id).grid; }

std::vector<VerificationReport> verify_all(
    int order, const VerifyOptions& opts,
    const std::vector<std::pair<std::string, BindingSet>>* grid_override, unsigned threads) {
    // Deterministic job list: id-sorted entries, grid order within an entry.
    std::vector<std::pair<std::string, BindingSet>> jobs;
    if (grid_override) {
        jobs = *grid_override;
    } else {
        for (const auto& d : catalog())
            for (const auto& bs : d.grid) jobs.emplace_back(d.id, bs);
    }
    std::stable_sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.str() < b.second.str();
    });

    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    if (const char* env = std::getenv("QTAILS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < threads) threads = static_cast<unsigned>(cap);
    }
    threads = std::min<unsigned>(threads, jobs.size() == 0 ? 1 : jobs.size());

    std::vector<VerificationReport> reports(jobs.size());
    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < jobs.size(); i += threads)
            reports[i] = verify(jobs[i].first, jobs[i].second, order, opts);
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    return reports;
}

} // namespace qtails
