#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "topoidx/indices.hpp"
#include "topoidx/survey.hpp"

namespace topoidx::io {

// Every CSV file starts with a "# topoidx <kind> v<N>" schema line.
inline constexpr int kCsvSchemaVersion = 1;

// Nine significant digits, for tables.
std::string sig9(double x);
// Shortest text that reads back as the same binary64 value.
std::string roundtrip(double x);

struct IndexRow {
    std::string graph6;
    std::size_t n = 0;
    std::size_t m = 0;
    IndexReport report;
    SignClass sign = SignClass::ZeroWithinTol;
};

void write_index_csv(std::ostream& out, std::span<const IndexRow> rows);
nlohmann::json index_json(std::span<const IndexRow> rows);

void write_scan_csv(std::ostream& out, std::span<const ClassificationRecord> rows);
nlohmann::json scan_json(std::span<const ClassificationRecord> rows);

void write_ties_csv(std::ostream& out, std::span<const TieRecord> rows);
nlohmann::json ties_json(std::span<const TieRecord> rows);

nlohmann::json verification_json(const VerificationReport& r, bool include_timing = true);

}  // namespace topoidx::io
