#include "qtails/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qtails {

namespace {

// Grid sweeps certify identities at sample points; the reports say so rather
// than implying an algebraic proof.
constexpr const char* kCertification = "point-sweep certification, not algebraic proof";

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.bindings.str() < b.bindings.str();
    });
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string grid_hash(const std::vector<VerificationReport>& reports) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& r : reports) {
        h = fnv1a(r.id, h);
        h = fnv1a("|", h);
        h = fnv1a(r.bindings.str(), h);
        h = fnv1a(";", h);
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string iso_timestamp_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void emit_report(std::vector<VerificationReport> reports, const RunMeta& meta, ReportFormat format,
                 std::ostream& out) {
    sort_reports(reports);
    switch (format) {
    case ReportFormat::json: {
        nlohmann::ordered_json doc;
        doc["run"] = {{"order", meta.order},
                      {"grid_hash", meta.grid_hash},
                      {"timestamp", meta.timestamp},
                      {"certification", kCertification}};
        auto& results = doc["results"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json item;
            item["id"] = r.id;
            item["status"] = std::string(to_string(r.status));
            auto& b = item["bindings"] = nlohmann::ordered_json::object();
            for (const auto& [name, value] : r.bindings) b[name] = value.str();
            if (r.first_mismatch) {
                item["first_mismatch"] = {{"exp", r.first_mismatch->exponent},
                                          {"lhs", r.first_mismatch->lhs.str()},
                                          {"rhs", r.first_mismatch->rhs.str()}};
            } else {
                item["first_mismatch"] = nullptr;
            }
            item["elapsed_ms"] = r.elapsed_ms;
            results.push_back(std::move(item));
        }
        out << doc.dump(2) << "\n";
        break;
    }
    case ReportFormat::csv: {
        out << "id,status,bindings,first_mismatch_exp\n";
        for (const auto& r : reports) {
            out << r.id << "," << to_string(r.status) << ",\"" << r.bindings.str() << "\",";
            if (r.first_mismatch) out << r.first_mismatch->exponent;
            out << "\n";
        }
        break;
    }
    case ReportFormat::text: {
        std::size_t idw = 2, bw = 8;
        for (const auto& r : reports) {
            idw = std::max(idw, r.id.size());
            bw = std::max(bw, r.bindings.str().size());
        }
        out << "order " << meta.order << "  grid " << meta.grid_hash << "  (" << kCertification
            << ")\n";
        for (const auto& r : reports) {
            out << std::left << std::setw(static_cast<int>(idw) + 2) << r.id
                << std::setw(static_cast<int>(bw) + 2) << r.bindings.str() << std::setw(16)
                << to_string(r.status);
            if (r.first_mismatch)
                out << " q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs.str()
                    << " vs " << r.first_mismatch->rhs.str() << " (sides "
                    << r.first_mismatch->side_a << "," << r.first_mismatch->side_b << ")";
            else if (!r.detail.empty())
                out << " " << r.detail;
            out << "\n";
        }
        break;
    }
    }
}

} // namespace qtails
