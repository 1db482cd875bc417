#pragma once

// Text format for user-supplied groups.
//
//   degree <d>              cayley <n>
//   <cycles>                <row 0: n indices>
//   <cycles>                ...
//   ...                     <row n-1>
//
// Generators use 1-based cycle notation, "()" for the identity. Cayley rows
// hold element indices with 0 the identity. Blank lines and lines starting
// with '#' are ignored.

#include "conjprob/finite_groups.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace conjprob {

struct GroupInput {
  enum class Kind { Generators, Cayley };
  Kind kind = Kind::Generators;
  int degree = 0;                          // Generators
  std::vector<Perm> generators;            // Generators
  std::vector<std::vector<int>> table;     // Cayley
  std::string source;                      // text exactly as parsed
};

/// Throws ParseError naming the offending line.
GroupInput parse_group_input(std::string_view text);

/// Canonical rendering: header, then one generator or row per line.
/// parse_group_input(render_group_input(g)) reproduces g.
std::string render_group_input(const GroupInput& input);

/// Closure or Cayley validation; errors as in FiniteGroup.
FiniteGroup build_group(const GroupInput& input);

/// Reads and parses a file; ParseError(0, ...) when it cannot be opened.
GroupInput read_group_file(const std::string& path);

}  // namespace conjprob
