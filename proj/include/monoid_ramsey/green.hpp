#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoid_ramsey/monoid.hpp"

namespace monoid_ramsey {

using ClassId = std::uint32_t;

/// Green's 𝒟- and ℋ-structure of a finite monoid.
///
/// m ≤_𝒟 m' when m = s·m'·t for some s, t; 𝒟-classes are the classes of
/// equal two-sided principal ideals. m ≤_ℋ m' when s·m' = m = m'·t; ℋ-classes
/// are the classes of mutual ≤_ℋ. Class ids are assigned in order of the
/// smallest element of each class.
class GreenStructure {
 public:
  std::size_t element_count() const noexcept { return dclass_of_.size(); }
  std::size_t dclass_count() const noexcept { return dclass_members_.size(); }
  std::size_t hclass_count() const noexcept { return hclass_members_.size(); }
  std::size_t regular_count() const noexcept;

  ClassId dclass_of(Index m) const { return dclass_of_.at(m); }
  ClassId hclass_of(Index m) const { return hclass_of_.at(m); }

  const std::vector<Index>& dclass_members(ClassId c) const {
    return dclass_members_.at(c);
  }
  const std::vector<Index>& hclass_members(ClassId c) const {
    return hclass_members_.at(c);
  }
  /// Idempotents of a 𝒟-class in increasing index order.
  const std::vector<Index>& dclass_idempotents(ClassId c) const {
    return dclass_idempotents_.at(c);
  }
  bool is_regular(ClassId c) const { return !dclass_idempotents_.at(c).empty(); }

  /// Strict order: true iff lower <_𝒟 upper.
  bool strictly_below(ClassId lower, ClassId upper) const;

  /// m ≤_𝒟 m'.
  bool d_leq(Index m, Index m_prime) const;
  /// m ≤_ℋ m', literally s·m' = m = m'·t for some s, t.
  bool h_leq(Index m, Index m_prime) const;

 private:
  friend GreenStructure green_structure(const FiniteMonoid&, std::size_t);

  static bool test(const std::vector<std::uint64_t>& bits, std::size_t i) {
    return (bits[i / 64] >> (i % 64)) & 1u;
  }

  std::vector<ClassId> dclass_of_;
  std::vector<ClassId> hclass_of_;
  std::vector<std::vector<Index>> dclass_members_;
  std::vector<std::vector<Index>> hclass_members_;
  std::vector<std::vector<Index>> dclass_idempotents_;
  // Per element: left ideal M·m, right ideal m·M, two-sided ideal M·m·M.
  std::vector<std::vector<std::uint64_t>> left_ideal_;
  std::vector<std::vector<std::uint64_t>> right_ideal_;
  std::vector<std::vector<std::uint64_t>> ideal_;
};

inline constexpr std::size_t kGreenSizeLimit = 4096;

/// Computes the full 𝒟/ℋ partition and the class order. Throws
/// ResourceRefusal if |M| exceeds `max_size`.
GreenStructure green_structure(const FiniteMonoid& m,
                               std::size_t max_size = kGreenSizeLimit);

/// A chain of regular 𝒟-classes, listed from the top class downwards.
struct RegularChain {
  std::vector<ClassId> classes;
  std::size_t length() const noexcept { return classes.size(); }
};

/// One longest chain of regular 𝒟-classes (topological DP on the class DAG).
RegularChain longest_regular_chain(const GreenStructure& g);

/// Every longest chain of regular 𝒟-classes, up to `limit` of them.
std::vector<RegularChain> all_longest_regular_chains(const GreenStructure& g,
                                                     std::size_t limit = 1000);

/// The regular 𝒟-length as the size of the largest chain of regular
/// 𝒟-classes.
std::size_t regular_d_length_chains(const FiniteMonoid& m);

/// Images e_1, ..., e_L of a monomorphism from the max monoid H_L.
struct MaxEmbedding {
  std::vector<Index> images;
  std::size_t length() const noexcept { return images.size(); }

  friend bool operator==(const MaxEmbedding&, const MaxEmbedding&) = default;
};

/// Describes the first violated invariant: an image that is not idempotent,
/// e_j·e_i != e_max(i,j), repeated images, or (when `anchored`) e_1 != 1_M.
/// Returns nullopt for a valid embedding.
std::optional<std::string> max_embedding_defect(const FiniteMonoid& m,
                                                const MaxEmbedding& e,
                                                bool anchored = true);

inline bool is_max_embedding(const FiniteMonoid& m, const MaxEmbedding& e,
                             bool anchored = true) {
  return !max_embedding_defect(m, e, anchored).has_value();
}

inline constexpr std::size_t kEmbeddingSearchCap = 64;

/// The regular 𝒟-length as the largest embedded max monoid, by exhaustive
/// search over descending idempotent chains starting at 1_M. This is an
/// oracle independent of the class structure; throws ResourceRefusal if
/// |M| > cap.
MaxEmbedding regular_d_length_embedding(const FiniteMonoid& m,
                                        std::size_t cap = kEmbeddingSearchCap);

/// Turns a strictly descending chain of regular 𝒟-classes into a max-monoid
/// embedding: e_1 is the first idempotent of the top class and each
/// e_{i+1} = e_i·t·f_{i+1}·s·e_i for the lexicographically first (s, t)
/// with f_{i+1} = s·e_i·t. Throws UsageError if the chain is empty, not
/// strictly descending, or contains a non-regular class.
MaxEmbedding chain_to_monomorphism(const FiniteMonoid& m,
                                   const GreenStructure& g,
                                   std::span<const ClassId> chain);

}  // namespace monoid_ramsey
