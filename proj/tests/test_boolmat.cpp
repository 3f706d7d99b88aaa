#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "monoid_ramsey/boolmat_analysis.hpp"
#include "monoid_ramsey/errors.hpp"
#include "monoid_ramsey/families.hpp"
#include "monoid_ramsey/green.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace monoid_ramsey;

namespace {

std::uint64_t set_of(std::initializer_list<int> one_based) {
  std::uint64_t s = 0;
  for (int i : one_based) s |= std::uint64_t{1} << (i - 1);
  return s;
}

std::set<std::pair<std::size_t, std::size_t>> as_set(const std::vector<FreePair>& pairs) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const FreePair& p : pairs) out.insert({p.first, p.second});
  return out;
}

void check_against_definitions(const BoolMatrix& a) {
  const PositiveSetFamily family = positive_sets(a);
  REQUIRE(std::set<std::uint64_t>(family.sets.begin(), family.sets.end()) ==
          brute::positive_sets(a));
  REQUIRE(std::is_sorted(family.sets.begin(), family.sets.end(),
                         [](std::uint64_t x, std::uint64_t y) {
                           return std::countr_zero(x) < std::countr_zero(y);
                         }));
  const ArrowRelation arrows = arrow_relation(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) REQUIRE(arrows(i, j) == brute::arrow(a, i, j));
  const std::vector<FreePair> pairs = free_pairs(a);
  REQUIRE(std::is_sorted(pairs.begin(), pairs.end()));
  REQUIRE(as_set(pairs) == brute::free_pairs(a));
}

std::vector<BoolMatrix> all_idempotents(std::size_t n) {
  std::vector<BoolMatrix> out;
  for (Index code = 0; code < (Index{1} << (n * n)); ++code) {
    const BoolMatrix m = decode_boolmat(n, code);
    if (brute::multiply(m, m) == m) out.push_back(m);
  }
  return out;
}

std::vector<BoolMatrix> decoded(std::size_t n, const MaxEmbedding& e) {
  std::vector<BoolMatrix> out;
  for (Index code : e.images) out.push_back(decode_boolmat(n, code));
  return out;
}

}  // namespace

TEST_CASE("idempotent and stable matrices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_idempotent(BoolMatrix::identity(n)));
    CHECK(is_idempotent(BoolMatrix::upper_triangular(n)));
    CHECK(is_stable(BoolMatrix::zero(n)));
  }
  const BoolMatrix nilpotent = BoolMatrix::from_rows({"01", "00"});
  CHECK_FALSE(is_idempotent(nilpotent));
  CHECK_FALSE(is_stable(nilpotent));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const BoolMatrix a = random_matrix(1 + rng() % 6, rng);
    const BoolMatrix e = idempotent_power(a);
    REQUIRE(brute::multiply(e, e) == e);
    if (is_idempotent(a)) REQUIRE(is_stable(a));
  }
}

TEST_CASE("positive sets") {
  const PositiveSetFamily diagonal = positive_sets(BoolMatrix::identity(4));
  CHECK(diagonal.sets == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(positive_sets(fixtures::example_a()).sets ==
        std::vector<std::uint64_t>{set_of({1, 3}), set_of({2, 4})});
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(positive_sets(BoolMatrix::upper_triangular(n)).count() == n);
  CHECK(positive_sets(BoolMatrix::zero(3)).count() == 0);
  CHECK_THROWS_AS(positive_sets(BoolMatrix::from_rows({"01", "00"})), UsageError);
}

TEST_CASE("arrow relation") {
  const ArrowRelation d = arrow_relation(BoolMatrix::identity(4));
  CHECK(d.holds == BoolMatrix::identity(4));

  const ArrowRelation a = arrow_relation(fixtures::example_a());
  BoolMatrix expected = BoolMatrix::identity(4);
  expected.set(0, 2, true);
  expected.set(2, 0, true);
  expected.set(1, 3, true);
  expected.set(3, 1, true);
  CHECK(a.holds == expected);

  // Row 1 is empty yet 1 -/-> 3: the quantifier reads column i and row j.
  const BoolMatrix empty_row = BoolMatrix::from_rows({"000", "110", "001"});
  REQUIRE(is_idempotent(empty_row));
  const ArrowRelation r = arrow_relation(empty_row);
  CHECK_FALSE(r(0, 2));
  CHECK(brute::arrow(empty_row, 2, 0));
  CHECK(r(2, 0));

  const ArrowRelation b = arrow_relation(fixtures::example_b());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(b(i, j) == !(i == 3 && j == 0));
}

TEST_CASE("free pairs") {
  CHECK(free_pairs(BoolMatrix::identity(4)).size() == 6);
  CHECK(free_pairs(fixtures::example_a()) ==
        std::vector<FreePair>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  for (const BoolMatrix& m : {fixtures::example_b(), fixtures::example_ab(),
                              fixtures::example_ba(), fixtures::example_aba()}) {
    CHECK(free_pairs(m).empty());
  }
  CHECK(count_pair(fixtures::example_a()) == CountPair{2, 4});
  CHECK(format_index_set(set_of({1, 3})) == "{1,3}");
  CHECK(format_index_set(0) == "{}");
}

TEST_CASE("structure agrees with the definitions on every idempotent of R_3 and R_4") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const BoolMatrix& a : all_idempotents(n)) check_against_definitions(a);
}

TEST_CASE("structure agrees with the definitions on larger random idempotents") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    check_against_definitions(random_idempotent(5 + rng() % 4, rng));
  }
}

TEST_CASE("chain lemmas") {
  const BoolMatrix a = fixtures::example_a();
  CHECK(positive_sets_refine(a, a));
  CHECK(free_pairs_inherited(a, a));
  CHECK(counts_determine_matrix(a, a));
  // A·B·A absorbs A, A·B does not: (A·B)·A != A·B.
  CHECK(positive_sets_refine(a, fixtures::example_aba()));
  CHECK(free_pairs_inherited(a, fixtures::example_aba()));
  CHECK_THROWS_AS(positive_sets_refine(a, fixtures::example_ab()), UsageError);
  CHECK_THROWS_AS(counts_determine_matrix(a, BoolMatrix::from_rows({"0100", "0000", "0000",
                                                                     "0000"})),
                  UsageError);
}

TEST_CASE("chain lemmas hold on every absorbing pair of R_3") {
  const std::vector<BoolMatrix> idempotents = all_idempotents(3);
  std::size_t pairs = 0;
  for (const BoolMatrix& a : idempotents) {
    for (const BoolMatrix& b : idempotents) {
      const bool absorbing = a * b == b && b * a == b;
      if (!absorbing) {
        REQUIRE_THROWS_AS(positive_sets_refine(a, b), UsageError);
        continue;
      }
      ++pairs;
      REQUIRE(positive_sets_refine(a, b));
      REQUIRE(free_pairs_inherited(a, b));
      REQUIRE(counts_determine_matrix(a, b));
      // Refinement from the definition: each set of B contains a set of A.
      for (std::uint64_t sb : brute::positive_sets(b)) {
        bool contained = false;
        for (std::uint64_t sa : brute::positive_sets(a)) contained = contained || (sa & ~sb) == 0;
        REQUIRE(contained);
      }
      for (const auto& p : brute::free_pairs(b)) REQUIRE(brute::free_pairs(a).contains(p));
    }
  }
  CHECK(pairs > idempotents.size());
}

TEST_CASE("the chain in R_4") {
  const std::vector<BoolMatrix> chain = max_monoid_boolmat_chain(4);
  REQUIRE(chain.size() == 11);
  CHECK(chain.front() == BoolMatrix::identity(4));
  CHECK(chain[6] == BoolMatrix::upper_triangular(4));
  CHECK(chain.back() == BoolMatrix::zero(4));
  const std::vector<CountPair> expected{{4, 6}, {4, 5}, {4, 4}, {4, 3}, {4, 2}, {4, 1},
                                        {4, 0}, {3, 0}, {2, 0}, {1, 0}, {0, 0}};
  std::vector<CountPair> counts;
  for (const BoolMatrix& m : chain) counts.push_back(count_pair(m));
  CHECK(counts == expected);
  CHECK(counts_strictly_decrease(chain));
}

TEST_CASE("the chain for small and larger n") {
  CHECK(max_monoid_boolmat_chain(1) ==
        std::vector<BoolMatrix>{BoolMatrix::identity(1), BoolMatrix::zero(1)});
  const std::vector<BoolMatrix> two = max_monoid_boolmat_chain(2);
  CHECK(two == std::vector<BoolMatrix>{BoolMatrix::identity(2),
                                       BoolMatrix::upper_triangular(2),
                                       BoolMatrix::from_rows({"11", "00"}),
                                       BoolMatrix::zero(2)});
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::vector<BoolMatrix> chain = max_monoid_boolmat_chain(n);
    REQUIRE(chain.size() == (n * n + n + 2) / 2);
    REQUIRE(verify_monomorphism(chain));
    REQUIRE(counts_strictly_decrease(chain));
  }
  CHECK_THROWS_AS(max_monoid_boolmat_chain(0), UsageError);
}

TEST_CASE("verify_monomorphism rejects bad chains") {
  std::vector<BoolMatrix> chain = max_monoid_boolmat_chain(3);
  std::vector<BoolMatrix> repeated = chain;
  repeated.insert(repeated.begin() + 2, chain[2]);
  CHECK_FALSE(verify_monomorphism(repeated));
  std::vector<BoolMatrix> swapped = chain;
  std::swap(swapped[1], swapped[3]);
  CHECK_FALSE(verify_monomorphism(swapped));
  const std::vector<BoolMatrix> not_idempotent{BoolMatrix::identity(2),
                                               BoolMatrix::from_rows({"01", "00"})};
  CHECK_FALSE(verify_monomorphism(not_idempotent));
  CHECK(verify_monomorphism(std::vector<BoolMatrix>{BoolMatrix::identity(3)}));
}

TEST_CASE("counts decrease along embeddings found in R_2 and R_3") {
  CHECK(counts_strictly_decrease(std::vector<BoolMatrix>{BoolMatrix::zero(3)}));
  for (std::size_t n : {2u, 3u}) {
    const FiniteMonoid r = make_boolmat_monoid(n);
    const MaxEmbedding e = regular_d_length_embedding(r, r.size());
    CHECK(e.length() == max_monoid_boolmat_chain(n).size());
    CHECK(counts_strictly_decrease(decoded(n, e)));
    const GreenStructure g = green_structure(r);
    for (const RegularChain& chain : all_longest_regular_chains(g, 50)) {
      REQUIRE(counts_strictly_decrease(decoded(n, chain_to_monomorphism(r, g, chain.classes))));
    }
  }
  const std::vector<BoolMatrix> unordered{BoolMatrix::zero(2), BoolMatrix::identity(2)};
  CHECK_THROWS_AS(counts_strictly_decrease(unordered), UsageError);
}

TEST_CASE("random absorbing pairs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const BoolMatrix a = random_idempotent(n, rng);
    const BoolMatrix b = random_absorbed(a, rng);
    REQUIRE(is_idempotent(b));
    REQUIRE(a * b == b);
    REQUIRE(b * a == b);
  }
}

TEST_CASE("property fuzz reports no failures") {
  for (std::size_t n : {3u, 4u, 5u}) {
    const std::vector<PropertyTally> tallies = run_property_fuzz(n, 400, 7, 3);
    REQUIRE(tallies.size() == 9);
    for (const PropertyTally& t : tallies) {
      INFO(t.name);
      REQUIRE(t.failed == 0);
      REQUIRE(t.passed > 0);
    }
  }
}

TEST_CASE("property fuzz is reproducible") {
  const auto first = run_property_fuzz(4, 200, 99, 2);
  const auto second = run_property_fuzz(4, 200, 99, 2);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].name == second[i].name);
    CHECK(first[i].passed == second[i].passed);
  }
}
