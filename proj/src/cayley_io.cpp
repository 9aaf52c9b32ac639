#include "cycgrp/cayley_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cycgrp/errors.hpp"

namespace cycgrp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string where(std::size_t line, std::size_t column) {
  std::string s = "line " + std::to_string(line);
  if (column) s += ", column " + std::to_string(column);
  return s;
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

CayleyFormatError::CayleyFormatError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line ? where(line, column) + ": " + message : message),
      line_(line),
      column_(column),
      message_(message) {}

Group parse_cayley(std::string_view text, std::string name) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Elem> table;
  std::vector<std::size_t> row_line;
  std::vector<std::vector<std::size_t>> col_of;  // column of each entry, for diagnostics

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0].text != "cayley") {
        throw CayleyFormatError(line_no, tokens[0].column, "expected header 'cayley v1 <n>'");
      }
      if (tokens[1].text != "v1") {
        throw CayleyFormatError(line_no, tokens[1].column,
                                "unsupported version '" + std::string(tokens[1].text) + "'");
      }
      std::uint64_t v = 0;
      if (!parse_uint(tokens[2].text, v) || v == 0) {
        throw CayleyFormatError(line_no, tokens[2].column, "order must be a positive integer");
      }
      if (v > kMaxGroupOrder) {
        throw CayleyFormatError(line_no, tokens[2].column,
                                "order " + std::to_string(v) + " exceeds limit " +
                                    std::to_string(kMaxGroupOrder));
      }
      n = static_cast<std::size_t>(v);
      table.reserve(n * n);
      have_header = true;
    } else {
      if (row_line.size() == n) {
        throw CayleyFormatError(line_no, tokens[0].column,
                                "extra row; the table has " + std::to_string(n) + " rows");
      }
      if (tokens.size() != n) {
        throw CayleyFormatError(line_no, tokens.size() > n ? tokens[n].column : 0,
                                "row " + std::to_string(row_line.size()) + " has " +
                                    std::to_string(tokens.size()) + " entries, expected " +
                                    std::to_string(n));
      }
      std::vector<std::size_t> cols;
      for (const auto& t : tokens) {
        std::uint64_t v = 0;
        if (!parse_uint(t.text, v)) {
          throw CayleyFormatError(line_no, t.column,
                                  "'" + std::string(t.text) + "' is not a non-negative integer");
        }
        if (v >= n) {
          throw CayleyFormatError(line_no, t.column,
                                  "index " + std::to_string(v) + " out of range 0.." +
                                      std::to_string(n - 1));
        }
        table.push_back(static_cast<Elem>(v));
        cols.push_back(t.column);
      }
      row_line.push_back(line_no);
      col_of.push_back(std::move(cols));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw CayleyFormatError(line_no, 0, "missing header 'cayley v1 <n>'");
  if (row_line.size() != n) {
    throw CayleyFormatError(line_no, 0,
                            "table ends after " + std::to_string(row_line.size()) + " of " +
                                std::to_string(n) + " rows");
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x) {
      throw CayleyFormatError(row_line[0], col_of[0][x], "index 0 is not a left identity");
    }
    if (table[x * n] != x) {
      throw CayleyFormatError(row_line[x], col_of[x][0], "index 0 is not a right identity");
    }
  }
  std::vector<std::size_t> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = table[x * n + y];
      if (seen[v] != n) {
        throw CayleyFormatError(row_line[x], col_of[x][y],
                                "row " + std::to_string(x) + " repeats " + std::to_string(v));
      }
      seen[v] = y;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t x = 0; x < n; ++x) {
      const Elem v = table[x * n + y];
      if (seen[v] != n) {
        throw CayleyFormatError(row_line[x], col_of[x][y],
                                "column " + std::to_string(y) + " repeats " + std::to_string(v));
      }
      seen[v] = x;
    }
  }

  try {
    return Group::from_table(n, std::move(table), std::move(name));
  } catch (const AxiomViolation& e) {
    const auto& t = e.triple();
    if (t[0] || t[1] || t[2]) {
      throw CayleyFormatError(row_line[t[0]], 0,
                              "associativity fails for (x, y, z) = (" + std::to_string(t[0]) +
                                  ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
                                  "): (xy)z != x(yz)");
    }
    throw CayleyFormatError(0, 0, e.what());
  }
}

std::string emit_cayley(const Group& g) {
  const std::size_t n = g.order();
  std::string out = "cayley v1 " + std::to_string(n) + "\n";
  out.reserve(out.size() + n * n * 4);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += std::to_string(g.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    }
    out += '\n';
  }
  return out;
}

Group read_cayley_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CayleyFormatError(0, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley(buf.str());
}

void write_cayley_file(const Group& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << emit_cayley(g);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace cycgrp
