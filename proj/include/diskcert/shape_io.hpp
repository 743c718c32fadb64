#pragma once

#include <string>
#include <string_view>

#include "diskcert/cubical.hpp"

namespace diskcert {

// Shape file:
//   W H             header
//   ##..            H rows of W characters, '#' occupied, '.' empty
//   E x1 y1 x2 y2   optional extra unit edge
//   V x y           optional extra vertex
// Blank lines are skipped. A line starting with '#' that holds anything
// besides '#' and '.' is a comment. Errors carry the 1-based line number.
CubicalSet parse_shape(std::string_view text);

// Canonical text; parse_shape(serialize_shape(s)) == s.
std::string serialize_shape(const CubicalSet& set);

// Reads and parses a file; an unreadable path is an InputError.
CubicalSet load_shape_file(const std::string& path);

// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string shape_digest(const CubicalSet& set);

}  // namespace diskcert
