#pragma once
// Line-oriented text format for arc systems, and SVG-independent file I/O.
//
// Format (UTF-8, '#' starts a comment running to end of line):
//   bridge-arc-system v1
//   system <name>
//   arc <k> <pStart> <pEnd> <U|L>       (k = 1..3, in order)
//   events <k> : <seg>@<rank> ...       (immediately after its arc line)
//   end
// save_system writes the canonical spacing shown above so that parsing and
// re-saving a canonicalized system reproduces the bytes exactly.

#include <stdexcept>
#include <string>

#include "bridgearc/model.hpp"

namespace bridgearc {

struct ParseError : std::runtime_error {
  int line;    // 1-based
  int column;  // 1-based
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ": " +
                           what_),
        line(line_),
        column(column_) {}
};

// Parses the text of a system file into a raw description. Throws ParseError
// on malformed input; does not validate the semantic invariants.
RawSystem parse_system_text(const std::string& text);

// Serializes in the canonical format above (always 3 arcs, trailing newline).
std::string serialize_system(const ArcSystem& a);

// File wrappers. read_file/write_file throw std::runtime_error on I/O errors.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
void save_system(const ArcSystem& a, const std::string& path);

}  // namespace bridgearc
