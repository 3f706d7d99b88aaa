#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monoid_ramsey {

using Index = std::uint32_t;

// Table-backed monoids are limited to 2^16 elements.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 16;

/// A finite monoid given by its Cayley table.
///
/// Elements are the dense indices 0..size()-1 and table(a, b) is the product
/// a·b. The neutral element is declared explicitly. `label_base` only affects
/// how element indices are printed and parsed by the I/O layer: the max
/// monoid H_n is stored with indices 0..n-1 but labelled 1..n.
///
/// Instances are immutable after construction and may be shared read-only
/// across threads.
class FiniteMonoid {
 public:
  /// Validates range, neutrality and associativity; throws UsageError.
  FiniteMonoid(std::size_t size, std::vector<Index> table, Index neutral,
               Index label_base = 0);

  /// Skips the associativity check. Used by the family constructors, whose
  /// tables are associative by construction; range and neutrality are still
  /// checked.
  static FiniteMonoid trusted(std::size_t size, std::vector<Index> table,
                              Index neutral, Index label_base = 0);

  std::size_t size() const noexcept { return size_; }
  Index neutral() const noexcept { return neutral_; }
  Index label_base() const noexcept { return label_base_; }

  /// Unchecked product.
  Index operator()(Index a, Index b) const noexcept {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }
  /// Range-checked product; throws UsageError.
  Index multiply(Index a, Index b) const;

  std::span<const Index> row(Index a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * size_, size_};
  }
  const std::vector<Index>& table() const noexcept { return table_; }

  bool contains(Index a) const noexcept { return a < size_; }
  bool is_idempotent(Index a) const noexcept { return (*this)(a, a) == a; }

  /// The idempotent power m^p for the least p >= 1 with m^p·m^p = m^p.
  Index idempotent_power(Index m) const;

  /// All idempotents in increasing index order.
  std::vector<Index> idempotents() const;

  /// True iff every element has a two-sided inverse.
  bool is_group() const;

  /// Two-sided inverse in a group; nullopt if none exists.
  std::optional<Index> inverse(Index a) const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  struct TrustedTag {};
  FiniteMonoid(TrustedTag, std::size_t size, std::vector<Index> table,
               Index neutral, Index label_base);

  std::size_t size_;
  std::vector<Index> table_;
  Index neutral_;
  Index label_base_;
};

/// Throws UsageError describing the first defect found in a candidate Cayley
/// table: wrong dimensions, out-of-range entries, a neutral element that is
/// not neutral, or a non-associative triple. Associativity is decided with
/// Light's test over a greedily chosen generating set, which is exact.
void validate_table(std::size_t size, std::span<const Index> table,
                    Index neutral);

/// An element bound to the monoid it lives in.
struct Element {
  const FiniteMonoid* monoid;
  Index index;

  friend bool operator==(const Element&, const Element&) = default;
};

inline Element element(const FiniteMonoid& m, Index index) {
  return Element{&m, index};
}

/// Product of two elements; throws UsageError when they come from different
/// monoids or are out of range.
Element multiply(Element a, Element b);

/// A word over a monoid: a sequence of element indices.
using Word = std::vector<Index>;

/// Throws UsageError if some letter is not an element of `m`.
void validate_word(const FiniteMonoid& m, std::span<const Index> u);

/// 1_M · u_1 · ... · u_n. The empty word reduces to the neutral element.
Index reduce(const FiniteMonoid& m, std::span<const Index> u);

/// reduce(u[0, i]) for i = 0..|u|.
std::vector<Index> prefix_reductions(const FiniteMonoid& m,
                                     std::span<const Index> u);

/// reduce(u[i, |u|]) for i = 0..|u|.
std::vector<Index> suffix_reductions(const FiniteMonoid& m,
                                     std::span<const Index> u);

/// Cut positions i_0 <= i_1 < ... < i_k <= |u| splitting u into
/// x = u[0, i_0], y_j = u[i_{j-1}, i_j] and z = u[i_k, |u|].
struct KDecomposition {
  std::vector<std::size_t> cuts;

  std::size_t k() const noexcept { return cuts.empty() ? 0 : cuts.size() - 1; }

  friend bool operator==(const KDecomposition&, const KDecomposition&) = default;
};

/// Throws UsageError unless `d` has k >= 1, strictly increasing cuts and
/// i_k <= length.
void validate_cuts(const KDecomposition& d, std::size_t length);

/// A k-decomposition together with the idempotent its middle factors share.
struct RamseyDecomposition {
  KDecomposition decomposition;
  Index idempotent;

  friend bool operator==(const RamseyDecomposition&,
                         const RamseyDecomposition&) = default;
};

/// True iff all middle factors of `d` reduce to one common idempotent.
/// Throws UsageError on malformed cuts.
bool is_ramsey(const FiniteMonoid& m, std::span<const Index> u,
               const KDecomposition& d);

/// Exact decision procedure: some Ramsey k-decomposition of u, or nullopt.
///
/// For each idempotent e, positions are linked i -> j when u[i, j] reduces to
/// e; a longest chain of linked positions is found by forward dynamic
/// programming and the search stops as soon as some chain has k links.
std::optional<RamseyDecomposition> has_ramsey_decomposition(
    const FiniteMonoid& m, std::span<const Index> u, std::size_t k);

}  // namespace monoid_ramsey
