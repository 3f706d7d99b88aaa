#pragma once

#include <vector>

#include "monoid_ramsey/bool_matrix.hpp"
#include "monoid_ramsey/families.hpp"

namespace fixtures {

using monoid_ramsey::BoolMatrix;

// Generators of a six-element submonoid of R_4 whose elements are all
// idempotent. test_families re-derives them by searching R_4.
inline BoolMatrix example_a() {
  return BoolMatrix::from_rows({"1010", "0101", "1010", "0101"});
}
inline BoolMatrix example_b() {
  return BoolMatrix::from_rows({"1111", "0001", "0001", "0001"});
}
inline BoolMatrix example_ab() {
  return BoolMatrix::from_rows({"1111", "0001", "1111", "0001"});
}
inline BoolMatrix example_ba() {
  return BoolMatrix::from_rows({"1111", "0101", "0101", "0101"});
}
inline BoolMatrix example_aba() {
  return BoolMatrix::from_rows({"1111", "0101", "1111", "0101"});
}

inline monoid_ramsey::BoolMatrixSubmonoid example_submonoid() {
  const std::vector<BoolMatrix> gens{example_a(), example_b()};
  return monoid_ramsey::generated_boolmat_submonoid(gens);
}

}  // namespace fixtures
