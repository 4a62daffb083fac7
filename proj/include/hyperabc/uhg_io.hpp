#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hyperabc/hypergraph.hpp"

namespace hyperabc {

// Malformed UHG v1 text. line() is 1-based; 0 means end of input.
// The input file could not be opened.
class UhgOpenError : public Error {
 public:
  using Error::Error;
};

class UhgParseError : public Error {
 public:
  UhgParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line), message_(msg) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw UhgParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

// Format: first content line `uhg <k> <n> <m>`, then m lines of k vertex ids.
// Lines whose first non-blank character is '#' and blank lines are skipped.
inline UniformHypergraph read_uhg(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  long long k = 0, n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = detail::split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!have_header) {
      if (toks.front() != "uhg") throw UhgParseError(lineno, "missing 'uhg <k> <n> <m>' header");
      if (toks.size() != 4) throw UhgParseError(lineno, "header needs exactly three integers");
      k = detail::parse_int(toks[1], lineno, "k");
      n = detail::parse_int(toks[2], lineno, "n");
      m = detail::parse_int(toks[3], lineno, "m");
      if (k < 2) throw UhgParseError(lineno, "k must be at least 2");
      if (n < k) throw UhgParseError(lineno, "n must be at least k");
      if (m < 1) throw UhgParseError(lineno, "m must be at least 1");
      if (n > 1'000'000 || m > 10'000'000 || k > 64) throw UhgParseError(lineno, "header values too large");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw UhgParseError(lineno, "more than m edge lines");
    if (static_cast<long long>(toks.size()) != k) {
      throw UhgParseError(lineno, "edge line has " + std::to_string(toks.size()) + " ids, expected " + std::to_string(k));
    }
    Edge e;
    e.reserve(toks.size());
    for (auto tok : toks) {
      const long long v = detail::parse_int(tok, lineno, "vertex id");
      if (v < 0 || v >= n) throw UhgParseError(lineno, "vertex id " + std::to_string(v) + " outside [0, n)");
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(lineno);
  }
  if (!have_header) throw UhgParseError(lineno + 1, "empty input, missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw UhgParseError(lineno + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  try {
    return UniformHypergraph::build(static_cast<int>(k), static_cast<int>(n), std::move(edges));
  } catch (const HypergraphError& err) {
    const std::size_t at = err.edge_index() ? edge_lines[*err.edge_index()] : 0;
    throw UhgParseError(at, err.what());
  }
}

inline UniformHypergraph parse_uhg(const std::string& text) {
  std::istringstream in(text);
  return read_uhg(in);
}

inline UniformHypergraph load_uhg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UhgOpenError("cannot open '" + path + "'");
  return read_uhg(in);
}

inline std::string to_uhg(const UniformHypergraph& g, const std::string& comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "uhg " << g.k() << ' ' << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperabc
