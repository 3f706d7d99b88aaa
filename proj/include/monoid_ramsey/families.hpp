#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monoid_ramsey/bool_matrix.hpp"
#include "monoid_ramsey/monoid.hpp"

namespace monoid_ramsey {

/// The max monoid H_n: {1, ..., n} under max, neutral 1. Element value v is
/// stored at index v - 1 and the monoid carries label_base 1.
FiniteMonoid make_max(std::size_t n);

/// The cyclic group Z_n under addition mod n, neutral 0.
FiniteMonoid make_cyclic(std::size_t n);

/// A partial function on {1, ..., n}: entry x - 1 holds f(x) in [1, n], or 0
/// when f is undefined at x.
using PartialFunction = std::vector<std::uint8_t>;

/// Base-(n+1) encoding of a partial function; the first point is the least
/// significant digit.
Index encode_transformation(const PartialFunction& f);
PartialFunction decode_transformation(std::size_t n, Index code);

/// Letters act on the right: (f·g)(x) = g(f(x)), defined iff both steps are.
PartialFunction compose_right(const PartialFunction& f,
                              const PartialFunction& g);

/// The transformation monoid T_n of all partial functions, (n+1)^n elements
/// indexed by encode_transformation. Table form requires n <= 3.
FiniteMonoid make_transformation(std::size_t n);

/// The Boolean matrix monoid R_n, 2^(n^2) elements indexed by
/// encode_boolmat. Table form requires n <= 3; larger n is handled
/// element-wise on BoolMatrix values.
FiniteMonoid make_boolmat_monoid(std::size_t n);

/// A submonoid re-indexed as a FiniteMonoid, with the embedding into its
/// parent. Index 0 is always the neutral element.
struct Submonoid {
  FiniteMonoid monoid;
  std::vector<Index> embedding;
};

/// Closure of gens ∪ {1_M} under multiplication. Throws UsageError if a
/// generator is not an element of `m`.
Submonoid generated_submonoid(const FiniteMonoid& m,
                              std::span<const Index> gens);

/// A submonoid of R_n built directly from matrices, without a table for R_n.
struct BoolMatrixSubmonoid {
  FiniteMonoid monoid;
  std::vector<BoolMatrix> matrices;
};

/// Closure of gens ∪ {identity} in R_n. Throws ResourceRefusal once the
/// closure exceeds `max_size` elements and UsageError on mixed dimensions.
BoolMatrixSubmonoid generated_boolmat_submonoid(
    std::span<const BoolMatrix> gens, std::size_t max_size = 4096);

}  // namespace monoid_ramsey
