#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monoid_ramsey/green.hpp"
#include "monoid_ramsey/monoid.hpp"

namespace monoid_ramsey {

using BigInt = boost::multiprecision::cpp_int;

// All extraction routines accept words at least as long as they require and
// work on the prefix of exactly the required length; shorter words are a
// UsageError.

/// Ramsey k-decomposition in a group from the k|G| + 1 prefix reductions.
/// Cuts are the first k+1 occurrences of the first prefix value to occur k+1
/// times; every middle factor reduces to the neutral element.
RamseyDecomposition prefix_sequence_decomposition(const FiniteMonoid& group,
                                                  std::span<const Index> u,
                                                  std::size_t k);

/// Word of length k|G| - 1 without a Ramsey k-decomposition: its prefix
/// reductions are 1^k g_2^k ... g_|G|^k, elements taken in index order with
/// the neutral element first.
Word group_witness(const FiniteMonoid& group, std::size_t k);

/// Divide-and-conquer extraction in the max monoid H_n from a word of length
/// k^n (letters are H_n indices, value v at index v - 1). Cuts are in u's
/// coordinates.
RamseyDecomposition divide_and_conquer_decomposition(std::size_t n,
                                                     std::span<const Index> u,
                                                     std::size_t k);

/// Word of length k^n - 1 over H_n without a Ramsey k-decomposition:
/// w_1 = 1^(k-1) and w_n = (w_{n-1} n)^(k-1) w_{n-1}.
Word max_witness(std::size_t n, std::size_t k);

/// From a word of length m|M|^2, an m-decomposition x y_1 ... y_m z in which
/// x and z absorb every y_i: reduce(x y_i) = reduce(x) and
/// reduce(y_i z) = reduce(z). The cuts are the first m+1 positions sharing
/// the first (prefix, suffix) reduction pair to occur m+1 times.
KDecomposition absorbing_decomposition(const FiniteMonoid& m,
                                       std::span<const Index> u,
                                       std::size_t multiplicity);

/// Half-open interval of positions in the original input word.
struct Interval {
  std::size_t begin;
  std::size_t end;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// For each letter of a derived word, the interval of the original word it
/// was reduced from. Consecutive letters map to adjacent intervals.
using PositionMap = std::vector<Interval>;

/// Record of one round of the descent.
struct DescentLevel {
  std::size_t j;                // the round, counting down from n
  Index idempotent;             // e_{j+1}
  Index prefix_reduction;       // reduce(x)
  Index suffix_reduction;       // reduce(z)
  Index word_reduction;         // reduce(u_j)
  Word next_word;               // u_{j-1}, empty when the round succeeded
  PositionMap next_positions;   // where u_{j-1}'s letters come from in u
};

/// Either a Ramsey k-decomposition of the input, or an embedding
/// e_1 = 1_M, e_2, ..., e_{n+1} of the max monoid H_{n+1}.
struct DescentOutcome {
  std::variant<RamseyDecomposition, MaxEmbedding> result;
  std::vector<DescentLevel> levels;

  bool found_decomposition() const noexcept { return result.index() == 0; }
  const RamseyDecomposition& decomposition() const {
    return std::get<RamseyDecomposition>(result);
  }
  const MaxEmbedding& embedding() const { return std::get<MaxEmbedding>(result); }
};

#ifdef NDEBUG
inline constexpr bool kCheckDescentInvariants = false;
#else
inline constexpr bool kCheckDescentInvariants = true;
#endif

/// The general extraction: on a word of length (k|M|^4)^n either returns a
/// Ramsey k-decomposition of u or a copy of H_{n+1} inside M. With
/// `check_invariants`, the per-round identities
///   reduce(u_j) = reduce(x z) = reduce(x)·e_{j+1}·reduce(z),
///   e_{j+1}·a = e_{j+1} = a·e_{j+1} for every letter a of u_{j-1},
///   reduce(u_{j-1}) != e_{j+1}
/// are checked and violations raise InternalError.
DescentOutcome ramsey_or_embedding(const FiniteMonoid& m,
                                   std::span<const Index> u, std::size_t k,
                                   std::size_t n,
                                   bool check_invariants = kCheckDescentInvariants);

/// (k|M|^4)^n, or nullopt if it does not fit in std::size_t.
std::optional<std::size_t> descent_word_length(std::size_t monoid_size,
                                               std::size_t k, std::size_t n);

/// k^L <= R_M(k) <= (k|M|^4)^L for the regular 𝒟-length L.
struct RamseyBounds {
  std::size_t regular_d_length;
  BigInt lower;
  BigInt upper;
};

RamseyBounds ramsey_bounds(const FiniteMonoid& m, std::size_t k);
RamseyBounds ramsey_bounds(std::size_t monoid_size, std::size_t regular_d_length,
                           std::size_t k);

/// The max-monoid witness of length k^L - 1 mapped letter by letter through
/// an embedding of H_L.
Word embedded_witness(const FiniteMonoid& m, const MaxEmbedding& embedding,
                      std::size_t k);
/// Same, with the embedding built from a longest chain of regular 𝒟-classes.
Word embedded_witness(const FiniteMonoid& m, std::size_t k);

struct OracleOptions {
  std::size_t max_len = 0;
  unsigned threads = 1;
  // Refuse rather than enumerate more than this many words of one length.
  std::size_t max_words = 10'000'000;
};

struct OracleResult {
  std::size_t value;           // exact R_M(k)
  Word counterexample;         // a word of length value - 1 with no Ramsey k-decomposition
};

/// Exact R_M(k) by exhaustive enumeration of all words of increasing length.
/// Returns nullopt if every length up to max_len still has a counterexample;
/// throws ResourceRefusal when a length would need more than max_words
/// words.
std::optional<OracleResult> ramsey_oracle(const FiniteMonoid& m, std::size_t k,
                                          const OracleOptions& options);

}  // namespace monoid_ramsey
