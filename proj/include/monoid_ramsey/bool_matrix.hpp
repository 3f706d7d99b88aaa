#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monoid_ramsey/monoid.hpp"

namespace monoid_ramsey {

/// An n×n Boolean matrix, an element of the relation monoid R_n.
///
/// Rows are stored as 64-bit masks (bit j of row i is entry (i, j)), so
/// n <= 64. Indices are 0-based throughout the library; user-facing output
/// of index sets adds one.
class BoolMatrix {
 public:
  static constexpr std::size_t kMaxDim = 64;

  BoolMatrix() = default;
  /// The zero matrix of dimension n; throws UsageError unless 1 <= n <= 64.
  explicit BoolMatrix(std::size_t n);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix zero(std::size_t n) { return BoolMatrix(n); }
  /// The full upper triangular matrix U_n (ones on and above the diagonal).
  static BoolMatrix upper_triangular(std::size_t n);
  /// Parses rows of '0'/'1' characters; throws UsageError on bad shape.
  static BoolMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t dim() const noexcept { return n_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept {
    return (rows_[i] >> j) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    if (value) {
      rows_[i] |= std::uint64_t{1} << j;
    } else {
      rows_[i] &= ~(std::uint64_t{1} << j);
    }
  }

  std::uint64_t row(std::size_t i) const noexcept { return rows_[i]; }
  void set_row(std::size_t i, std::uint64_t mask) noexcept {
    rows_[i] = mask & full_mask();
  }
  std::uint64_t column(std::size_t j) const noexcept;
  std::uint64_t full_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::size_t count_ones() const noexcept;

  /// Rows of '0'/'1' characters separated by '\n', no trailing newline.
  std::string to_string() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  friend auto operator<=>(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Boolean product: (A·B)_ik = OR_j (A_ij AND B_jk). Throws UsageError on
/// dimension mismatch.
BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b);

inline BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  return bool_multiply(a, b);
}

/// Row-major bit encoding used as the element index in table form R_n;
/// entry (i, j) is bit i·n + j. Requires n·n <= 32.
Index encode_boolmat(const BoolMatrix& a);
BoolMatrix decode_boolmat(std::size_t n, Index code);

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& a) const noexcept;
};

}  // namespace monoid_ramsey
