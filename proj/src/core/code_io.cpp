#include "codebounds/code_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "codebounds/errors.hpp"

namespace codebounds {

namespace {

bool is_blank_or_comment(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r");
  return pos == std::string::npos || s[pos] == '#';
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& tok, long long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool next_content_line(std::istream& in, std::string& line_text, std::size_t& line) {
  while (std::getline(in, line_text)) {
    ++line;
    if (!is_blank_or_comment(line_text)) return true;
  }
  return false;
}

}  // namespace

Code read_code(std::istream& in, std::size_t& line) {
  std::string text;
  if (!next_content_line(in, text, line)) {
    throw ParseError(ParseErrorKind::MalformedHeader, line, "missing header");
  }
  const auto head = split_ws(text);
  long long q = 0, n = 0, m = 0;
  if (head.size() != 3 || !parse_int(head[0], q) || !parse_int(head[1], n) || !parse_int(head[2], m) ||
      q < 2 || q > 255 || n < 1 || m < 0) {
    throw ParseError(ParseErrorKind::MalformedHeader, line, "expected header 'q n M', got '" + text + "'");
  }
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(m));
  std::vector<std::size_t> row_lines;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, text, line)) {
      throw ParseError(ParseErrorKind::RowCount, line,
                       "expected " + std::to_string(m) + " rows, found " + std::to_string(i));
    }
    const auto toks = split_ws(text);
    if (static_cast<long long>(toks.size()) != n) {
      throw ParseError(ParseErrorKind::LengthMismatch, line,
                       "row has " + std::to_string(toks.size()) + " symbols, expected " + std::to_string(n));
    }
    std::vector<Symbol> sym;
    sym.reserve(toks.size());
    for (const auto& t : toks) {
      long long v = 0;
      if (!parse_int(t, v)) throw ParseError(ParseErrorKind::MalformedRow, line, "not an integer: '" + t + "'");
      if (v < 0 || v >= q) {
        throw ParseError(ParseErrorKind::SymbolOutOfRange, line,
                         "symbol " + t + " outside 0.." + std::to_string(q - 1));
      }
      sym.push_back(static_cast<Symbol>(v));
    }
    words.emplace_back(std::move(sym));
    row_lines.push_back(line);
  }
  std::vector<std::size_t> idx(words.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return words[a] < words[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (words[idx[i]] == words[idx[i - 1]]) {
      throw ParseError(ParseErrorKind::DuplicateWord, row_lines[std::max(idx[i], idx[i - 1])],
                       "duplicate word");
    }
  }
  return Code(static_cast<int>(q), static_cast<int>(n), std::move(words));
}

Code parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line = 0;
  Code c = read_code(in, line);
  std::string rest;
  if (next_content_line(in, rest, line)) {
    throw ParseError(ParseErrorKind::RowCount, line, "trailing content after last row");
  }
  return c;
}

std::string emit_code(const Code& c) {
  std::string out = std::to_string(c.q()) + " " + std::to_string(c.n()) + " " + std::to_string(c.size()) + "\n";
  for (const Word& w : c.words()) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(w[j]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_class_list(const ClassList& list) {
  std::string out = "classes " + std::to_string(list.classes.size()) + " " + std::to_string(list.q) + " " +
                    std::to_string(list.n) + " " + std::to_string(list.d) + " " + std::to_string(list.size) +
                    " " + list.generator + "\n";
  for (const Code& c : list.classes) out += emit_code(c);
  return out;
}

ClassList parse_class_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line = 0;
  std::string head;
  if (!next_content_line(in, head, line)) throw ParseError(ParseErrorKind::MalformedHeader, line, "empty class list");
  const auto toks = split_ws(head);
  long long count = 0, q = 0, n = 0, d = 0, m = 0;
  if (toks.size() != 7 || toks[0] != "classes" || !parse_int(toks[1], count) || !parse_int(toks[2], q) ||
      !parse_int(toks[3], n) || !parse_int(toks[4], d) || !parse_int(toks[5], m) || count < 0) {
    throw ParseError(ParseErrorKind::MalformedHeader, line, "expected 'classes COUNT q n d M GENERATOR'");
  }
  ClassList list{static_cast<int>(q), static_cast<int>(n), static_cast<int>(d), static_cast<int>(m), toks[6], {}};
  for (long long i = 0; i < count; ++i) {
    Code c = read_code(in, line);
    if (c.q() != list.q || c.n() != list.n || static_cast<int>(c.size()) != list.size) {
      throw ParseError(ParseErrorKind::MalformedHeader, line, "class parameters differ from list header");
    }
    list.classes.push_back(std::move(c));
  }
  std::string rest;
  if (next_content_line(in, rest, line)) throw ParseError(ParseErrorKind::RowCount, line, "more classes than declared");
  return list;
}

}  // namespace codebounds
