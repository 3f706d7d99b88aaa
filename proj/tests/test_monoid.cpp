#include <random>

#include "doctest.h"
#include "monoid_ramsey/errors.hpp"
#include "monoid_ramsey/families.hpp"
#include "monoid_ramsey/monoid.hpp"
#include "support/brute_force.hpp"

using namespace monoid_ramsey;

namespace {

// H_n letters by value.
Word max_word(std::initializer_list<Index> values) {
  Word u;
  for (Index v : values) u.push_back(v - 1);
  return u;
}

}  // namespace

TEST_CASE("multiply looks up the table") {
  const FiniteMonoid h3 = make_max(3);
  CHECK(multiply(element(h3, 1), element(h3, 2)).index == 2);  // max(2, 3) = 3
  const FiniteMonoid z2 = make_cyclic(2);
  CHECK(multiply(element(z2, 1), element(z2, 1)).index == 0);

  const FiniteMonoid r2 = make_boolmat_monoid(2);
  const Index nilpotent = encode_boolmat(BoolMatrix::from_rows({"01", "00"}));
  CHECK(decode_boolmat(2, r2(nilpotent, nilpotent)) == BoolMatrix::zero(2));
}

TEST_CASE("multiply rejects elements of different monoids") {
  const FiniteMonoid a = make_cyclic(2);
  const FiniteMonoid b = make_cyclic(2);
  CHECK_THROWS_AS(multiply(element(a, 1), element(b, 1)), UsageError);
  CHECK_THROWS_AS(multiply(element(a, 2), element(a, 1)), UsageError);
  CHECK_THROWS_AS(a.multiply(0, 5), UsageError);
}

TEST_CASE("reduce") {
  const FiniteMonoid h3 = make_max(3);
  CHECK(reduce(h3, Word{}) == h3.neutral());
  CHECK(reduce(h3, max_word({1, 2, 1, 3, 1, 2, 1})) == 2);
  CHECK(reduce(make_cyclic(2), Word{0, 1, 0}) == 1);
}

TEST_CASE("reduce is a homomorphism from concatenation") {
  std::mt19937_64 rng(11);
  const FiniteMonoid t2 = make_transformation(2);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = brute::random_word(rng, t2.size(), rng() % 9);
    const Word v = brute::random_word(rng, t2.size(), rng() % 9);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    REQUIRE(reduce(t2, uv) == t2(reduce(t2, u), reduce(t2, v)));
  }
}

TEST_CASE("prefix and suffix reductions") {
  const FiniteMonoid z3 = make_cyclic(3);
  const Word u{1, 2, 0};
  CHECK(prefix_reductions(z3, u) == std::vector<Index>{0, 1, 0, 0});
  CHECK(suffix_reductions(z3, u) == std::vector<Index>{0, 2, 0, 0});
}

TEST_CASE("idempotent power") {
  const FiniteMonoid z3 = make_cyclic(3);
  CHECK(z3.idempotent_power(1) == 0);
  CHECK(z3.idempotent_power(0) == 0);
  CHECK(make_max(5).idempotent_power(3) == 3);

  const FiniteMonoid t3 = make_transformation(3);
  for (Index a = 0; a < t3.size(); ++a) {
    const Index e = t3.idempotent_power(a);
    REQUIRE(t3.is_idempotent(e));
    REQUIRE(t3.idempotent_power(e) == e);
  }
}

TEST_CASE("is_ramsey") {
  const FiniteMonoid h1 = make_max(1);
  CHECK(is_ramsey(h1, Word{0, 0}, KDecomposition{{0, 1, 2}}));
  const FiniteMonoid h2 = make_max(2);
  CHECK_FALSE(is_ramsey(h2, max_word({1, 2}), KDecomposition{{0, 1, 2}}));

  const FiniteMonoid h3 = make_max(3);
  const Word w = max_word({1, 2, 1, 3, 1, 2, 1});
  for (std::size_t a = 0; a <= w.size(); ++a)
    for (std::size_t b = a + 1; b <= w.size(); ++b)
      for (std::size_t c = b + 1; c <= w.size(); ++c)
        REQUIRE_FALSE(is_ramsey(h3, w, KDecomposition{{a, b, c}}));
}

TEST_CASE("is_ramsey rejects malformed cuts") {
  const FiniteMonoid h2 = make_max(2);
  const Word u = max_word({1, 1});
  CHECK_THROWS_AS(is_ramsey(h2, u, KDecomposition{{0, 1, 3}}), UsageError);
  CHECK_THROWS_AS(is_ramsey(h2, u, KDecomposition{{1, 1}}), UsageError);
  CHECK_THROWS_AS(is_ramsey(h2, u, KDecomposition{{0}}), UsageError);
}

TEST_CASE("has_ramsey_decomposition examples") {
  const FiniteMonoid z2 = make_cyclic(2);
  CHECK_FALSE(has_ramsey_decomposition(z2, Word{1}, 2));

  const Word ones{1, 1, 1, 1};
  const auto d = has_ramsey_decomposition(z2, ones, 2);
  REQUIRE(d);
  CHECK(d->idempotent == 0);
  CHECK(d->decomposition.cuts == std::vector<std::size_t>{0, 2, 4});

  CHECK_FALSE(has_ramsey_decomposition(make_max(3), max_word({1, 2, 1, 3, 1, 2, 1}), 2));
}

TEST_CASE("has_ramsey_decomposition agrees with cut enumeration") {
  std::mt19937_64 rng(2024);
  const std::vector<FiniteMonoid> monoids{make_cyclic(2), make_cyclic(3), make_max(3),
                                          make_transformation(2),
                                          make_boolmat_monoid(2)};
  for (const FiniteMonoid& m : monoids) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t k = 1 + rng() % 3;
      const Word u = brute::random_word(rng, m.size(), rng() % 13);
      const auto found = has_ramsey_decomposition(m, u, k);
      REQUIRE(found.has_value() == brute::has_ramsey_decomposition(m, u, k));
      if (found) {
        REQUIRE(found->decomposition.k() == k);
        REQUIRE(is_ramsey(m, u, found->decomposition));
        REQUIRE(brute::product(m, u, found->decomposition.cuts[0],
                               found->decomposition.cuts[1]) == found->idempotent);
      }
    }
  }
}

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteMonoid(2, {0, 1, 1, 0}, 0));
  CHECK_THROWS_AS(FiniteMonoid(0, {}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 2}, 0), UsageError);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 0}, 1), UsageError);
  // Left-zero semigroup {1, 2} with an identity adjoined, then a copy where
  // (1·1)·1 = 2 but 1·(1·1) = 1.
  CHECK_NOTHROW(FiniteMonoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0));
  CHECK_THROWS_AS(FiniteMonoid(3, {0, 1, 2, 1, 2, 1, 2, 2, 2}, 0), UsageError);
}

TEST_CASE("corrupted tables are rejected exactly when they break the axioms") {
  std::mt19937_64 rng(7);
  const std::vector<FiniteMonoid> bases{make_transformation(2), make_boolmat_monoid(2),
                                        make_max(4), make_cyclic(5)};
  std::size_t rejected = 0;
  std::size_t accepted = 0;
  for (const FiniteMonoid& base : bases) {
    const std::size_t n = base.size();
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Index> table = base.table();
      const int edits = 1 + static_cast<int>(rng() % 3);
      for (int e = 0; e < edits; ++e) {
        table[rng() % table.size()] = static_cast<Index>(rng() % n);
      }
      const bool valid = brute::associative(n, table) && brute::neutral_ok(n, table, base.neutral());
      bool threw = false;
      try {
        FiniteMonoid candidate(n, table, base.neutral());
      } catch (const UsageError&) {
        threw = true;
      }
      REQUIRE(threw == !valid);
      ++(threw ? rejected : accepted);
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("validated tables survive random small monoids") {
  // Every 2-element table: exactly those that are associative with a neutral
  // element pass.
  for (Index code = 0; code < 16; ++code) {
    std::vector<Index> table{Index(code & 1), Index(code >> 1 & 1), Index(code >> 2 & 1),
                             Index(code >> 3 & 1)};
    for (Index neutral = 0; neutral < 2; ++neutral) {
      const bool valid = brute::associative(2, table) && brute::neutral_ok(2, table, neutral);
      bool ok = true;
      try {
        FiniteMonoid(2, table, neutral);
      } catch (const UsageError&) {
        ok = false;
      }
      CHECK(ok == valid);
    }
  }
}

TEST_CASE("group detection and inverses") {
  CHECK(make_cyclic(4).is_group());
  CHECK_FALSE(make_max(2).is_group());
  CHECK(make_max(1).is_group());
  const FiniteMonoid z5 = make_cyclic(5);
  CHECK(z5.inverse(2) == Index{3});
  CHECK_FALSE(make_max(2).inverse(1).has_value());
}
