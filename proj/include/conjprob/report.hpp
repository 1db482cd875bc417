#pragma once

// Verification entries and tables, rendered as aligned text, RFC-4180 CSV or
// JSON (one object with an "entries" array; rationals as "num/den" strings).

#include "conjprob/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conjprob {

enum class Status { Pass, Fail, Info };
std::string to_string(Status status);

enum class Format { Text, Csv, Json };
/// "text", "csv" or "json"; throws PreconditionError otherwise.
Format parse_format(std::string_view name);

struct ReportEntry {
  std::string claim;     // stable id, e.g. "lemma19.ii"
  Status status = Status::Info;
  std::string lhs;       // exact "num/den"
  std::string relation;  // "==", "<", "<=", ">", ">=" (empty for info)
  std::string rhs;
  std::string lhs_decimal;
  std::string rhs_decimal;
  std::string detail;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

/// Status is Pass when `lhs relation rhs` holds, Fail otherwise.
ReportEntry compare_entry(std::string claim, const ExactRational& lhs,
                          std::string_view relation, const ExactRational& rhs,
                          unsigned digits = 10);

/// Informational entry; lhs carries the reported value.
ReportEntry info_entry(std::string claim, const ExactRational& value,
                       std::string detail, unsigned digits = 10);

bool holds(const ExactRational& lhs, std::string_view relation,
           const ExactRational& rhs);

bool any_failed(const std::vector<ReportEntry>& entries);

std::string render_entries(const std::vector<ReportEntry>& entries, Format format);
/// Inverse of the JSON rendering. Throws ParseError on malformed input.
std::vector<ReportEntry> entries_from_json(std::string_view json);

/// Columns of strings; JSON renders each row as an object keyed by column.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& table, Format format);
Table table_from_json(std::string_view json);

/// One CSV field, quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view value);

}  // namespace conjprob
