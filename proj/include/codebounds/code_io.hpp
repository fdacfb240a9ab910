#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "codebounds/code.hpp"

namespace codebounds {

// Code file format:
//   line 1: "q n M"
//   then M lines of n space-separated symbols in 0..q-1
//   lines starting with '#' are comments.
// Emission writes rows in lexicographic order with single spaces and a
// trailing newline.

Code parse_code(std::string_view text);
std::string emit_code(const Code& c);

/// Reads one code from a stream positioned at its header; skips comments.
/// `line` tracks the current line number for error messages.
Code read_code(std::istream& in, std::size_t& line);

// Class lists: a header line
//   "classes COUNT q n d M GENERATOR"
// followed by COUNT concatenated code files.
struct ClassList {
  int q;
  int n;
  int d;
  int size;
  std::string generator;
  std::vector<Code> classes;
};

std::string emit_class_list(const ClassList& list);
ClassList parse_class_list(std::string_view text);

}  // namespace codebounds
