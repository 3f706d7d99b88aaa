#include "monoid_ramsey/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "monoid_ramsey/errors.hpp"
#include "monoid_ramsey/families.hpp"

namespace monoid_ramsey {

namespace {

// A table file this large would already need 64 MiB of entries.
constexpr std::size_t kMaxTableFileSize = 4096;

std::vector<std::string> split_whitespace(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return tokens;
}

std::size_t parse_unsigned(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw UsageError("expected a non-negative integer for " + std::string(what) +
                     ", got '" + std::string(token) + "'");
  }
  return value;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

Index parse_label(const FiniteMonoid& m, std::string_view token) {
  const std::size_t label = parse_unsigned(token, "an element label");
  if (label < m.label_base() || label - m.label_base() >= m.size()) {
    throw UsageError("element label " + std::string(token) + " is outside the monoid");
  }
  return static_cast<Index>(label - m.label_base());
}

}  // namespace

FiniteMonoid parse_monoid_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw UsageError("empty monoid table");
  ++line_no;
  const auto header = split_whitespace(line);
  if (header.size() != 3 || header[0] != "monoid") {
    throw UsageError(at_line(1) + "expected 'monoid <size> <neutral>'");
  }
  const std::size_t size = parse_unsigned(header[1], "the size");
  const std::size_t neutral = parse_unsigned(header[2], "the neutral element");
  if (size == 0 || size > kMaxTableFileSize) {
    throw UsageError(at_line(1) + "size must be in [1, " +
                     std::to_string(kMaxTableFileSize) + "]");
  }
  if (neutral >= size) throw UsageError(at_line(1) + "neutral element out of range");

  std::vector<Index> table;
  table.reserve(size * size);
  for (std::size_t row = 0; row < size; ++row) {
    if (!std::getline(in, line)) {
      throw UsageError("monoid table has " + std::to_string(row) + " rows, expected " +
                       std::to_string(size));
    }
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.size() != size) {
      throw UsageError(at_line(line_no) + "expected " + std::to_string(size) +
                       " entries, got " + std::to_string(tokens.size()));
    }
    for (const auto& t : tokens) {
      const std::size_t v = parse_unsigned(t, "a table entry");
      if (v >= size) throw UsageError(at_line(line_no) + "entry " + t + " out of range");
      table.push_back(static_cast<Index>(v));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line)) throw UsageError(at_line(line_no) + "trailing content");
  }
  return FiniteMonoid(size, std::move(table), static_cast<Index>(neutral));
}

std::string format_monoid_table(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "monoid " << m.size() << ' ' << m.neutral() << '\n';
  for (Index a = 0; a < m.size(); ++a) {
    const auto row = m.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      out << (b ? " " : "") << row[b];
    }
    out << '\n';
  }
  return out.str();
}

Word parse_word(const FiniteMonoid& m, std::istream& in) {
  Word u;
  for (std::string token; in >> token;) u.push_back(parse_label(m, token));
  if (!in.eof()) throw UsageError("could not read word");
  return u;
}

Word parse_inline_word(const FiniteMonoid& m, std::string_view text) {
  Word u;
  if (text.empty()) return u;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    u.push_back(parse_label(m, token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return u;
}

std::string format_label(const FiniteMonoid& m, Index a) {
  return std::to_string(static_cast<std::size_t>(a) + m.label_base());
}

std::string format_word(const FiniteMonoid& m, std::span<const Index> u) {
  const bool single_digit = m.size() + m.label_base() <= 10;
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0 && !single_digit) out += ',';
    out += format_label(m, u[i]);
  }
  return out;
}

std::vector<BoolMatrix> parse_matrices(std::istream& in) {
  std::vector<BoolMatrix> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    const auto header = split_whitespace(line);
    if (header.size() != 1) throw UsageError(at_line(line_no) + "expected the dimension");
    const std::size_t n = parse_unsigned(header[0], "the dimension");
    if (n == 0 || n > BoolMatrix::kMaxDim) {
      throw UsageError(at_line(line_no) + "dimension out of range");
    }
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw UsageError("matrix is missing rows");
      ++line_no;
      const auto tokens = split_whitespace(line);
      if (tokens.size() != 1 || tokens[0].size() != n ||
          tokens[0].find_first_not_of("01") != std::string::npos) {
        throw UsageError(at_line(line_no) + "expected " + std::to_string(n) +
                         " characters '0' or '1'");
      }
      rows.push_back(tokens[0]);
    }
    out.push_back(BoolMatrix::from_rows(rows));
  }
  if (out.empty()) throw UsageError("no matrices in input");
  return out;
}

std::string format_matrix(const BoolMatrix& a) {
  return std::to_string(a.dim()) + "\n" + a.to_string() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string MonoidSpec::to_string() const {
  switch (kind) {
    case Kind::kMax: return "max:" + std::to_string(parameter);
    case Kind::kCyclic: return "cyclic:" + std::to_string(parameter);
    case Kind::kTransformation: return "transformation:" + std::to_string(parameter);
    case Kind::kBoolMatrix: return "boolmat:" + std::to_string(parameter);
    case Kind::kTable: return "table:" + path;
  }
  return {};
}

MonoidSpec parse_monoid_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("monoid spec '" + std::string(text) +
                     "' must look like max:<n>, cyclic:<n>, transformation:<n>, "
                     "boolmat:<n> or table:<path>");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  MonoidSpec spec{};
  if (family == "table") {
    if (arg.empty()) throw UsageError("table: needs a path");
    spec.kind = MonoidSpec::Kind::kTable;
    spec.path = std::string(arg);
    return spec;
  }
  if (family == "max") {
    spec.kind = MonoidSpec::Kind::kMax;
  } else if (family == "cyclic") {
    spec.kind = MonoidSpec::Kind::kCyclic;
  } else if (family == "transformation") {
    spec.kind = MonoidSpec::Kind::kTransformation;
  } else if (family == "boolmat") {
    spec.kind = MonoidSpec::Kind::kBoolMatrix;
  } else {
    throw UsageError("unknown monoid family '" + std::string(family) + "'");
  }
  spec.parameter = parse_unsigned(arg, std::string(family) + " parameter");
  if (spec.parameter == 0) throw UsageError("family parameter must be positive");
  return spec;
}

FiniteMonoid build_monoid(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidSpec::Kind::kMax: return make_max(spec.parameter);
    case MonoidSpec::Kind::kCyclic: return make_cyclic(spec.parameter);
    case MonoidSpec::Kind::kTransformation: return make_transformation(spec.parameter);
    case MonoidSpec::Kind::kBoolMatrix: return make_boolmat_monoid(spec.parameter);
    case MonoidSpec::Kind::kTable: {
      std::istringstream in(read_file(spec.path));
      return parse_monoid_table(in);
    }
  }
  throw InternalError("unhandled monoid family");
}

}  // namespace monoid_ramsey
