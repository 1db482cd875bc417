#include "conjprob/group_io.hpp"

#include "conjprob/errors.hpp"

#include <fstream>
#include <sstream>

namespace conjprob {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_count(std::string_view text, std::size_t line, const char* what) {
  std::istringstream in{std::string(text)};
  long value = 0;
  std::string rest;
  if (!(in >> value) || (in >> rest))
    throw ParseError(line, std::string("expected a single integer ") + what);
  if (value < 1 || value > 100000)
    throw ParseError(line, std::string(what) + " out of range");
  return static_cast<int>(value);
}

}  // namespace

GroupInput parse_group_input(std::string_view text) {
  GroupInput input;
  input.source = std::string(text);
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int rows_expected = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      have_header = true;
      if (line.starts_with("degree")) {
        input.kind = GroupInput::Kind::Generators;
        input.degree = parse_count(line.substr(6), line_no, "degree");
      } else if (line.starts_with("cayley")) {
        input.kind = GroupInput::Kind::Cayley;
        rows_expected = parse_count(line.substr(6), line_no, "order");
        if (rows_expected > 4096) throw ParseError(line_no, "order out of range");
      } else {
        throw ParseError(line_no, "expected 'degree <d>' or 'cayley <n>'");
      }
    } else if (input.kind == GroupInput::Kind::Generators) {
      try {
        input.generators.push_back(parse_cycles(line, input.degree));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      if (static_cast<int>(input.table.size()) == rows_expected)
        throw ParseError(line_no, "more rows than the declared order");
      std::istringstream in{std::string(line)};
      std::vector<int> row;
      std::string token;
      while (in >> token) {
        std::size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size() || v < 0 || v >= rows_expected)
          throw ParseError(line_no, "invalid element index '" + token + "'");
        row.push_back(v);
      }
      if (static_cast<int>(row.size()) != rows_expected)
        throw ParseError(line_no, "row has " + std::to_string(row.size()) +
                                      " entries, expected " +
                                      std::to_string(rows_expected));
      input.table.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "empty group description");
  if (input.kind == GroupInput::Kind::Cayley &&
      static_cast<int>(input.table.size()) != rows_expected)
    throw ParseError(line_no, "expected " + std::to_string(rows_expected) +
                                  " rows, found " +
                                  std::to_string(input.table.size()));
  return input;
}

std::string render_group_input(const GroupInput& input) {
  std::string out;
  if (input.kind == GroupInput::Kind::Generators) {
    out = "degree " + std::to_string(input.degree) + "\n";
    for (const auto& g : input.generators) out += format_cycles(g) + "\n";
  } else {
    out = "cayley " + std::to_string(input.table.size()) + "\n";
    for (const auto& row : input.table) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(row[i]);
      }
      out += '\n';
    }
  }
  return out;
}

FiniteGroup build_group(const GroupInput& input) {
  if (input.kind == GroupInput::Kind::Generators)
    return group_from_generators(input.degree, input.generators);
  return FiniteGroup::from_cayley_table(input.table);
}

GroupInput read_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_input(buffer.str());
}

}  // namespace conjprob
