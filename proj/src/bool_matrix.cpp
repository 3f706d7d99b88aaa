#include "monoid_ramsey/bool_matrix.hpp"

#include <bit>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), rows_(n, 0) {
  if (n == 0 || n > kMaxDim) {
    throw UsageError("Boolean matrix dimension must be in [1, 64], got " +
                     std::to_string(n));
  }
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i);
  return a;
}

BoolMatrix BoolMatrix::upper_triangular(std::size_t n) {
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set_row(i, a.full_mask() & ~((std::uint64_t{1} << i) - 1));
  }
  return a;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  BoolMatrix a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw UsageError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw UsageError(std::string("matrix entries must be '0' or '1', got '") +
                         c + "'");
      }
      a.set(i, j, c == '1');
    }
  }
  return a;
}

std::uint64_t BoolMatrix::column(std::size_t j) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    out |= ((rows_[i] >> j) & 1u) << i;
  }
  return out;
}

std::size_t BoolMatrix::count_ones() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t r : rows_) total += static_cast<std::size_t>(std::popcount(r));
  return total;
}

std::string BoolMatrix::to_string() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    if (i > 0) out.push_back('\n');
    for (std::size_t j = 0; j < n_; ++j) out.push_back((*this)(i, j) ? '1' : '0');
  }
  return out;
}

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw UsageError("cannot multiply " + std::to_string(a.dim()) + "x" +
                     std::to_string(a.dim()) + " and " +
                     std::to_string(b.dim()) + "x" + std::to_string(b.dim()) +
                     " matrices");
  }
  BoolMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t bits = a.row(i); bits != 0; bits &= bits - 1) {
      acc |= b.row(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    c.set_row(i, acc);
  }
  return c;
}

Index encode_boolmat(const BoolMatrix& a) {
  const std::size_t n = a.dim();
  if (n * n > 32) throw UsageError("matrix too large for index encoding");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) code |= a.row(i) << (i * n);
  return static_cast<Index>(code);
}

BoolMatrix decode_boolmat(std::size_t n, Index code) {
  if (n * n > 32) throw UsageError("matrix too large for index encoding");
  BoolMatrix a(n);
  const std::uint64_t mask = a.full_mask();
  for (std::size_t i = 0; i < n; ++i) {
    a.set_row(i, (std::uint64_t{code} >> (i * n)) & mask);
  }
  return a;
}

std::size_t BoolMatrixHash::operator()(const BoolMatrix& a) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    h ^= a.row(i) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace monoid_ramsey
