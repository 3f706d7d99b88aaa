#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "monoid_ramsey/bool_matrix.hpp"

namespace monoid_ramsey {

// Structure of idempotent Boolean matrices: positive sets, the arrow
// relation and free pairs, and the facts relating them along chains
// A_1, A_2, ... with A_i·A_{i+1} = A_{i+1} = A_{i+1}·A_i.
//
// Index sets are bit masks over 0-based indices.

bool is_idempotent(const BoolMatrix& a);

/// Every 1-entry (i, k) passes through some j with A_ij = A_jj = A_jk = 1.
bool is_stable(const BoolMatrix& a);

/// The idempotent power of a Boolean matrix.
BoolMatrix idempotent_power(const BoolMatrix& a);

/// Maximal positive sets of an idempotent matrix, ordered by least element.
struct PositiveSetFamily {
  BoolMatrix matrix;
  std::vector<std::uint64_t> sets;

  std::size_t count() const noexcept { return sets.size(); }
};

/// Throws UsageError if `a` is not idempotent.
PositiveSetFamily positive_sets(const BoolMatrix& a);

/// i →_A j iff A_{i2 i} = 1 = A_{j j2} implies A_{i2 j2} = 1 for all i2, j2.
struct ArrowRelation {
  BoolMatrix matrix;
  BoolMatrix holds;  // holds(i, j) == (i →_A j)

  bool operator()(std::size_t i, std::size_t j) const { return holds(i, j); }
};

/// Throws UsageError if `a` is not idempotent.
ArrowRelation arrow_relation(const BoolMatrix& a);

struct FreePair {
  std::size_t first;   // first < second
  std::size_t second;

  friend bool operator==(const FreePair&, const FreePair&) = default;
  friend auto operator<=>(const FreePair&, const FreePair&) = default;
};

/// Distinct pairs incomparable under →_A, in lexicographic order.
std::vector<FreePair> free_pairs(const BoolMatrix& a);

/// (number of positive sets, number of free pairs).
struct CountPair {
  std::size_t positive_sets;
  std::size_t free_pairs;

  friend bool operator==(const CountPair&, const CountPair&) = default;
};

CountPair count_pair(const BoolMatrix& a);

// The three checks below take idempotents A, B with A·B = B = B·A and throw
// UsageError when that precondition fails.

/// Every positive set of B contains a positive set of A.
bool positive_sets_refine(const BoolMatrix& a, const BoolMatrix& b);
/// Every free pair of B is a free pair of A.
bool free_pairs_inherited(const BoolMatrix& a, const BoolMatrix& b);
/// Equal positive-set and free-pair counts force A = B.
bool counts_determine_matrix(const BoolMatrix& a, const BoolMatrix& b);

/// The images φ(1), ..., φ(f(n)) of the embedding of H_f(n) into R_n,
/// f(n) = (n^2+n+2)/2: from the identity, add the above-diagonal ones in
/// lexicographic order up to U_n, then clear the rows of U_n from the bottom
/// up down to the zero matrix.
std::vector<BoolMatrix> max_monoid_boolmat_chain(std::size_t n);

/// True iff the matrices are pairwise distinct and
/// seq[i]·seq[j] = seq[j] = seq[j]·seq[i] for all i <= j.
bool verify_monomorphism(std::span<const BoolMatrix> seq);

/// True iff along the chain neither count increases and at least one strictly
/// decreases at every step. Throws UsageError unless the entries are
/// distinct idempotents with A_i·A_{i+1} = A_{i+1} = A_{i+1}·A_i.
bool counts_strictly_decrease(std::span<const BoolMatrix> chain);

/// Uniformly random n×n matrix.
BoolMatrix random_matrix(std::size_t n, std::mt19937_64& rng);
/// Idempotent power of a uniform matrix (biased towards sparse idempotents).
BoolMatrix random_idempotent(std::size_t n, std::mt19937_64& rng);
/// B = (A·X·A)^# for uniform X, so A·B = B = B·A.
BoolMatrix random_absorbed(const BoolMatrix& a, std::mt19937_64& rng);

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Runs every structural property and the three chain lemmas on `trials`
/// random idempotents (and absorbing pairs) of R_n. Trials are sharded across
/// `threads` workers with independent seeds derived from `seed`.
std::vector<PropertyTally> run_property_fuzz(std::size_t n, std::size_t trials,
                                             std::uint64_t seed,
                                             unsigned threads = 1);

/// Renders an index set as "{1,3}" with 1-based indices.
std::string format_index_set(std::uint64_t set);

}  // namespace monoid_ramsey
