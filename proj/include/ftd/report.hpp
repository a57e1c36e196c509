#pragma once

// Elimination report files: versioned JSON and a one-row-per-cell TSV.

#include "ftd/eliminator.hpp"

#include <string>
#include <vector>

namespace ftd {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Json, Tsv };
/// "json" or "tsv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& s);

/// The grid field lists each grid's description; an empty grid list is
/// written as a single-cell report.
std::string report_json(const std::vector<SweepGrid>& grids, const std::vector<EliminationReport>& reports);
std::string report_tsv(const std::vector<EliminationReport>& reports);
std::string format_report(ReportFormat f, const std::vector<SweepGrid>& grids,
                          const std::vector<EliminationReport>& reports);

/// Writes text to path; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace ftd
