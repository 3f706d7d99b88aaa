#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoid_ramsey/bool_matrix.hpp"
#include "monoid_ramsey/monoid.hpp"

namespace monoid_ramsey {

// Text formats. Parsers throw UsageError with a line number where one makes
// sense, and reject trailing garbage.
//
//   monoid table:  "monoid <size> <neutral>" then <size> rows of <size> indices
//   word:          whitespace-separated element labels
//   matrices:      "n" then n rows of n '0'/'1' characters; several matrices
//                  are separated by blank lines
//
// Element labels are indices shifted by the monoid's label_base.

FiniteMonoid parse_monoid_table(std::istream& in);
std::string format_monoid_table(const FiniteMonoid& m);

Word parse_word(const FiniteMonoid& m, std::istream& in);
/// Comma-separated labels, e.g. "1,2,1,3". The empty string is the empty word.
Word parse_inline_word(const FiniteMonoid& m, std::string_view text);

/// Labels concatenated when all of them are single digits, comma-separated
/// otherwise.
std::string format_word(const FiniteMonoid& m, std::span<const Index> u);
std::string format_label(const FiniteMonoid& m, Index a);

std::vector<BoolMatrix> parse_matrices(std::istream& in);
/// "n" line followed by the rows.
std::string format_matrix(const BoolMatrix& a);

std::string read_file(const std::string& path);

/// Monoid family descriptors: max:<n>, cyclic:<n>, transformation:<n>,
/// boolmat:<n>, table:<path>.
struct MonoidSpec {
  enum class Kind { kMax, kCyclic, kTransformation, kBoolMatrix, kTable };

  Kind kind;
  std::size_t parameter = 0;  // unused for kTable
  std::string path;           // only for kTable

  std::string to_string() const;
};

MonoidSpec parse_monoid_spec(std::string_view text);
FiniteMonoid build_monoid(const MonoidSpec& spec);

}  // namespace monoid_ramsey
