#ifndef ORBIZETA_REPORT_HPP
#define ORBIZETA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbizeta/zeta.hpp"

namespace orbizeta {

struct ReportRow {
    int r = 0;
    BigInt n_coarse;
    BigInt n_orb;
    BigInt n_resolution;
    bool match = false;
    std::string engine;  // text output only
};

struct VerificationReport {
    std::string model;
    BigInt q;
    int e = 1;
    int R = 0;
    std::vector<ReportRow> rows;
    UPoly zeta_num;  // empty when no zeta was recognized
    UPoly zeta_den;
    std::string zeta_text;
    std::vector<std::string> notes;
    std::optional<std::string> error;  // item stopped early (budget, field bound)
    double seconds = 0;

    /// Every row matches and the item finished.
    bool all_match() const;
};

enum class ReportFormat { Text, Json, Csv };

/// Serializes reports in the order given.  Text is an aligned table per
/// report (timing only when requested); JSON is an array of
/// {model, q, rows, zeta, [error]}; CSV has one line per (model, q, r).
/// Integers that do not fit in 64 bits are JSON strings.
std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                        bool with_timing = false);

/// Reads the JSON form back.  Only the fields present in the JSON schema are
/// filled in.  Throws std::invalid_argument on malformed input.
std::vector<VerificationReport> parse_report_json(const std::string& text);

/// Equality on the fields covered by the JSON schema.
bool same_report_data(const VerificationReport& a, const VerificationReport& b);

/// Sorts by model name, then q, and each report's rows by r.
void sort_reports(std::vector<VerificationReport>& reports);

}  // namespace orbizeta

#endif
