#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtails/catalog.hpp"

namespace qtails {

enum class ReportFormat { text, json, csv };

struct RunMeta {
    int order = 0;
    std::string grid_hash;
    std::string timestamp; // ISO-8601 UTC
};

// Stable 64-bit FNV-1a over the ordered (id, bindings) pairs of a run, so a
// changed grid is visible across report diffs.
std::string grid_hash(const std::vector<VerificationReport>& reports);

std::string iso_timestamp_utc_now();

// Serializes reports in deterministic id-then-binding order.
//   json: {run:{order,grid_hash,timestamp,certification},results:[...]}
//         with every rational rendered as a "p/q" string
//   csv:  id,status,bindings,first_mismatch_exp
//   text: aligned human-readable table
void emit_report(std::vector<VerificationReport> reports, const RunMeta& meta, ReportFormat format,
                 std::ostream& out);

} // namespace qtails
