#include <charconv>
#include <sstream>

#include "codebounds/errors.hpp"
#include "codebounds/nets.hpp"

namespace codebounds {

namespace {

struct LineReader {
  std::istringstream in;
  std::size_t line = 0;

  explicit LineReader(std::string_view text) : in{std::string(text)} {}

  bool next(std::string& out) {
    while (std::getline(in, out)) {
      ++line;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      const auto pos = out.find_first_not_of(" \t");
      if (pos != std::string::npos && out[pos] != '#') return true;
    }
    return false;
  }

  std::string require(const char* what) {
    std::string s;
    if (!next(s)) throw ParseError(ParseErrorKind::RowCount, line, std::string("missing ") + what);
    return s;
  }
};

std::vector<long long> ints(const std::string& s, std::size_t line) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(ParseErrorKind::MalformedRow, line, "not an integer: '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

void expect_end(LineReader& r) {
  std::string rest;
  if (r.next(rest)) throw ParseError(ParseErrorKind::RowCount, r.line, "trailing content");
}

}  // namespace

SymmetricNet parse_net(std::string_view text) {
  LineReader r(text);
  const std::string head = r.require("header");
  const auto h = ints(head, r.line);
  if (h.size() != 2 || h[0] < 1 || h[1] < 1 || h[0] * h[1] * h[1] > 4096) {
    throw ParseError(ParseErrorKind::MalformedHeader, r.line, "expected header 'mu q'");
  }
  const auto v = static_cast<std::size_t>(h[0] * h[1] * h[1]);
  Incidence inc;
  for (std::size_t i = 0; i < v; ++i) {
    std::string row = r.require("incidence row");
    std::erase_if(row, [](char c) { return c == ' ' || c == '\t'; });
    if (row.size() != v) {
      throw ParseError(ParseErrorKind::LengthMismatch, r.line,
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(v));
    }
    std::vector<std::uint8_t> bits;
    for (char c : row) {
      if (c != '0' && c != '1') throw ParseError(ParseErrorKind::SymbolOutOfRange, r.line, "entry is not 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    inc.push_back(std::move(bits));
  }
  expect_end(r);
  return SymmetricNet(static_cast<int>(h[0]), static_cast<int>(h[1]), std::move(inc));
}

std::string emit_net(const SymmetricNet& net) {
  std::string out = std::to_string(net.mu()) + " " + std::to_string(net.q()) + "\n";
  for (const auto& row : net.incidence()) {
    for (auto e : row) out += static_cast<char>('0' + e);
    out += '\n';
  }
  return out;
}

GeneralizedHadamard parse_gh(std::string_view text) {
  LineReader r(text);
  const auto h = ints(r.require("header"), r.line);
  if (h.size() != 2 || h[0] < 1 || h[1] < 1 || h[0] > 1024 || h[1] > 1024) {
    throw ParseError(ParseErrorKind::MalformedHeader, r.line, "expected header 'n |G|'");
  }
  const int n = static_cast<int>(h[0]);
  const int k = static_cast<int>(h[1]);
  std::string spec = r.require("group line");
  spec.erase(0, spec.find_first_not_of(" \t"));
  spec.erase(spec.find_last_not_of(" \t") + 1);
  const std::size_t spec_line = r.line;

  auto group = [&]() -> FiniteGroup {
    try {
      if (spec == "klein4") return FiniteGroup::klein4();
      if (spec.rfind("cyclic:", 0) == 0) {
        const auto v = ints(spec.substr(7), spec_line);
        if (v.size() != 1) throw ParseError(ParseErrorKind::MalformedHeader, spec_line, "bad cyclic order");
        return FiniteGroup::cyclic(static_cast<int>(v[0]));
      }
      if (spec == "table") {
        std::vector<std::vector<int>> t;
        for (int i = 0; i < k; ++i) {
          const auto row = ints(r.require("group table row"), r.line);
          t.emplace_back(row.begin(), row.end());
        }
        return FiniteGroup::from_table(std::move(t));
      }
    } catch (const PreconditionError& e) {
      throw ParseError(ParseErrorKind::MalformedHeader, spec_line, e.what());
    }
    throw ParseError(ParseErrorKind::MalformedHeader, spec_line, "unknown group '" + spec + "'");
  }();
  if (group.order() != k) throw ParseError(ParseErrorKind::MalformedHeader, spec_line, "group order differs from header");

  std::vector<std::vector<int>> m;
  for (int i = 0; i < n; ++i) {
    const auto row = ints(r.require("matrix row"), r.line);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(ParseErrorKind::LengthMismatch, r.line, "matrix row has " + std::to_string(row.size()) + " entries");
    }
    for (auto v : row) {
      if (v < 0 || v >= k) throw ParseError(ParseErrorKind::SymbolOutOfRange, r.line, "entry is not a group element");
    }
    m.emplace_back(row.begin(), row.end());
  }
  expect_end(r);
  try {
    return GeneralizedHadamard(std::move(group), std::move(m));
  } catch (const PreconditionError& e) {
    throw ParseError(ParseErrorKind::MalformedHeader, 1, e.what());
  }
}

std::string emit_gh(const GeneralizedHadamard& m) {
  std::string out = std::to_string(m.order()) + " " + std::to_string(m.group.order()) + "\n" + m.group.spec() + "\n";
  if (m.group.spec() == "table") {
    for (const auto& row : m.group.table()) {
      for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
      out += '\n';
    }
  }
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += '\n';
  }
  return out;
}

}  // namespace codebounds
