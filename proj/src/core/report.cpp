#include "conjprob/report.hpp"

#include "conjprob/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace conjprob {

using Json = nlohmann::ordered_json;

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "info") return Status::Info;
  throw ParseError(0, "unknown status '" + s + "'");
}

std::string join_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      out += cells[c];
      if (c + 1 < cells.size()) out.append(width[c] - cells[c].size(), ' ');
    }
    out.erase(out.find_last_not_of(' ') + 1);
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw PreconditionError("unknown format '" + std::string(name) + "'");
}

bool holds(const ExactRational& lhs, std::string_view relation,
           const ExactRational& rhs) {
  if (relation == "==") return lhs == rhs;
  if (relation == "<") return lhs < rhs;
  if (relation == "<=") return lhs <= rhs;
  if (relation == ">") return lhs > rhs;
  if (relation == ">=") return lhs >= rhs;
  throw PreconditionError("unknown relation '" + std::string(relation) + "'");
}

ReportEntry compare_entry(std::string claim, const ExactRational& lhs,
                          std::string_view relation, const ExactRational& rhs,
                          unsigned digits) {
  ReportEntry e;
  e.claim = std::move(claim);
  e.status = holds(lhs, relation, rhs) ? Status::Pass : Status::Fail;
  e.lhs = to_fraction_string(lhs);
  e.relation = std::string(relation);
  e.rhs = to_fraction_string(rhs);
  e.lhs_decimal = to_decimal(lhs, digits, Rounding::HalfUp);
  e.rhs_decimal = to_decimal(rhs, digits, Rounding::HalfUp);
  return e;
}

ReportEntry info_entry(std::string claim, const ExactRational& value,
                       std::string detail, unsigned digits) {
  ReportEntry e;
  e.claim = std::move(claim);
  e.status = Status::Info;
  e.lhs = to_fraction_string(value);
  e.lhs_decimal = to_decimal(value, digits, Rounding::HalfUp);
  e.detail = std::move(detail);
  return e;
}

bool any_failed(const std::vector<ReportEntry>& entries) {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.status == Status::Fail; });
}

std::string render_entries(const std::vector<ReportEntry>& entries, Format format) {
  if (format == Format::Json) {
    Json doc = Json::object();
    doc["entries"] = Json::array();
    for (const auto& e : entries) {
      Json j;
      j["claim"] = e.claim;
      j["status"] = to_string(e.status);
      j["lhs"] = e.lhs;
      j["relation"] = e.relation;
      j["rhs"] = e.rhs;
      j["lhs_decimal"] = e.lhs_decimal;
      j["rhs_decimal"] = e.rhs_decimal;
      j["detail"] = e.detail;
      j["elapsed_ms"] = e.elapsed_ms;
      doc["entries"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
  }
  const std::vector<std::string> header{"claim", "status", "lhs", "relation",
                                        "rhs", "lhs_decimal", "rhs_decimal",
                                        "elapsed_ms", "detail"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries)
    rows.push_back({e.claim, to_string(e.status), e.lhs, e.relation, e.rhs,
                    e.lhs_decimal, e.rhs_decimal, std::to_string(e.elapsed_ms),
                    e.detail});
  if (format == Format::Csv) {
    std::string out = join_line(header);
    for (const auto& row : rows) out += join_line(row);
    return out;
  }
  // Text drops the exact columns, which can be very wide.
  std::vector<std::vector<std::string>> short_rows;
  for (const auto& e : entries)
    short_rows.push_back({e.claim, to_string(e.status), e.lhs_decimal, e.relation,
                          e.rhs_decimal, std::to_string(e.elapsed_ms) + " ms",
                          e.detail});
  return aligned({"claim", "status", "lhs", "rel", "rhs", "time", "detail"},
                 short_rows);
}

std::vector<ReportEntry> entries_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError(0, "expected an object with an 'entries' array");
  std::vector<ReportEntry> out;
  try {
    for (const auto& j : doc["entries"]) {
      ReportEntry e;
      e.claim = j.at("claim").get<std::string>();
      e.status = parse_status(j.at("status").get<std::string>());
      e.lhs = j.at("lhs").get<std::string>();
      e.relation = j.at("relation").get<std::string>();
      e.rhs = j.at("rhs").get<std::string>();
      e.lhs_decimal = j.at("lhs_decimal").get<std::string>();
      e.rhs_decimal = j.at("rhs_decimal").get<std::string>();
      e.detail = j.at("detail").get<std::string>();
      e.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
      out.push_back(std::move(e));
    }
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed entry: ") + e.what());
  }
  return out;
}

std::string render_table(const Table& table, Format format) {
  if (format == Format::Json) {
    Json doc = Json::object();
    doc["table"] = table.name;
    doc["entries"] = Json::array();
    for (const auto& row : table.rows) {
      Json j = Json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c)
        j[table.columns[c]] = c < row.size() ? row[c] : std::string();
      doc["entries"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = join_line(table.columns);
    for (const auto& row : table.rows) out += join_line(row);
    return out;
  }
  return aligned(table.columns, table.rows);
}

Table table_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  Table table;
  try {
    table.name = doc.at("table").get<std::string>();
    for (const auto& j : doc.at("entries")) {
      if (table.columns.empty())
        for (const auto& item : j.items()) table.columns.push_back(item.key());
      std::vector<std::string> row;
      for (const auto& c : table.columns) row.push_back(j.at(c).get<std::string>());
      table.rows.push_back(std::move(row));
    }
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed table: ") + e.what());
  }
  return table;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace conjprob
