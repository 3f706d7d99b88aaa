#include "monoid_ramsey/boolmat_analysis.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

namespace {

void require_idempotent(const BoolMatrix& a) {
  if (!is_idempotent(a)) throw UsageError("matrix is not idempotent");
}

void require_absorbing_pair(const BoolMatrix& a, const BoolMatrix& b) {
  require_idempotent(a);
  require_idempotent(b);
  if (a * b != b || b * a != a * b) {
    throw UsageError("precondition A·B = B = B·A does not hold");
  }
}

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

}  // namespace

bool is_idempotent(const BoolMatrix& a) { return a * a == a; }

bool is_stable(const BoolMatrix& a) {
  const std::size_t n = a.dim();
  std::uint64_t diagonal = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(j, j)) diagonal |= bit(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Entries reachable from i through a reflexive middle index.
    std::uint64_t through = 0;
    for (std::uint64_t js = a.row(i) & diagonal; js != 0; js &= js - 1) {
      through |= a.row(static_cast<std::size_t>(std::countr_zero(js)));
    }
    if ((a.row(i) & ~through) != 0) return false;
  }
  return true;
}

BoolMatrix idempotent_power(const BoolMatrix& a) {
  BoolMatrix power = a;
  while (!is_idempotent(power)) power = power * a;
  return power;
}

PositiveSetFamily positive_sets(const BoolMatrix& a) {
  require_idempotent(a);
  const std::size_t n = a.dim();
  PositiveSetFamily family{a, {}};
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a(i, i) || (assigned & bit(i))) continue;
    std::uint64_t set = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(j, j) && a(i, j) && a(j, i)) set |= bit(j);
    }
    // Check the defining clauses: all ones inside, and every outside index
    // is blocked by some member.
    for (std::uint64_t s = set; s != 0; s &= s - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(s));
      if ((a.row(p) & set) != set) throw InternalError("positive set not all ones");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (set & bit(k)) continue;
      bool blocked = false;
      for (std::uint64_t s = set; s != 0 && !blocked; s &= s - 1) {
        const auto p = static_cast<std::size_t>(std::countr_zero(s));
        blocked = !a(p, k) || !a(k, p);
      }
      if (!blocked) throw InternalError("positive set is not maximal");
    }
    assigned |= set;
    family.sets.push_back(set);
  }
  return family;
}

ArrowRelation arrow_relation(const BoolMatrix& a) {
  require_idempotent(a);
  const std::size_t n = a.dim();
  ArrowRelation rel{a, BoolMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t sources = a.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t targets = a.row(j);
      bool holds = true;
      for (std::uint64_t s = sources; s != 0 && holds; s &= s - 1) {
        const auto i2 = static_cast<std::size_t>(std::countr_zero(s));
        holds = (a.row(i2) & targets) == targets;
      }
      rel.holds.set(i, j, holds);
    }
  }
  return rel;
}

std::vector<FreePair> free_pairs(const BoolMatrix& a) {
  const ArrowRelation rel = arrow_relation(a);
  std::vector<FreePair> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (!rel(i, j) && !rel(j, i)) out.push_back({i, j});
    }
  }
  return out;
}

CountPair count_pair(const BoolMatrix& a) {
  return CountPair{positive_sets(a).count(), free_pairs(a).size()};
}

bool positive_sets_refine(const BoolMatrix& a, const BoolMatrix& b) {
  require_absorbing_pair(a, b);
  const PositiveSetFamily of_a = positive_sets(a);
  for (std::uint64_t outer : positive_sets(b).sets) {
    const bool contains_one = std::any_of(
        of_a.sets.begin(), of_a.sets.end(),
        [&](std::uint64_t inner) { return (inner & ~outer) == 0; });
    if (!contains_one) return false;
  }
  return true;
}

bool free_pairs_inherited(const BoolMatrix& a, const BoolMatrix& b) {
  require_absorbing_pair(a, b);
  const std::vector<FreePair> of_a = free_pairs(a);
  for (const FreePair& p : free_pairs(b)) {
    if (!std::binary_search(of_a.begin(), of_a.end(), p)) return false;
  }
  return true;
}

bool counts_determine_matrix(const BoolMatrix& a, const BoolMatrix& b) {
  require_absorbing_pair(a, b);
  return count_pair(a) != count_pair(b) || a == b;
}

std::vector<BoolMatrix> max_monoid_boolmat_chain(std::size_t n) {
  std::vector<BoolMatrix> out;
  BoolMatrix current = BoolMatrix::identity(n);
  out.push_back(current);
  // Above-diagonal positions in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      current.set(i, j);
      out.push_back(current);
    }
  }
  for (std::size_t row = n; row-- > 0;) {
    current.set_row(row, 0);
    out.push_back(current);
  }
  return out;
}

bool verify_monomorphism(std::span<const BoolMatrix> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i; j < seq.size(); ++j) {
      if (i != j && seq[i] == seq[j]) return false;
      if (seq[i] * seq[j] != seq[j] || seq[j] * seq[i] != seq[j]) return false;
    }
  }
  return true;
}

bool counts_strictly_decrease(std::span<const BoolMatrix> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require_idempotent(chain[i]);
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (chain[i] == chain[j]) throw UsageError("chain entries are not distinct");
    }
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    require_absorbing_pair(chain[i - 1], chain[i]);
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const CountPair before = count_pair(chain[i - 1]);
    const CountPair after = count_pair(chain[i]);
    if (after.positive_sets > before.positive_sets ||
        after.free_pairs > before.free_pairs || after == before) {
      return false;
    }
  }
  return true;
}

BoolMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set_row(i, rng());
  return a;
}

BoolMatrix random_idempotent(std::size_t n, std::mt19937_64& rng) {
  return idempotent_power(random_matrix(n, rng));
}

BoolMatrix random_absorbed(const BoolMatrix& a, std::mt19937_64& rng) {
  return idempotent_power(a * random_matrix(a.dim(), rng) * a);
}

namespace {

enum Property : std::size_t {
  kStable,
  kDisjointPositiveSets,
  kArrowReflexive,
  kOnesImplyArrow,
  kEmptyLinesImplyArrow,
  kPositiveSetsRefine,
  kFreePairsInherited,
  kCountsDetermineMatrix,
  kCountsMonotone,
  kPropertyCount
};

const char* property_name(std::size_t p) {
  switch (p) {
    case kStable: return "idempotents are stable";
    case kDisjointPositiveSets: return "positive sets are disjoint";
    case kArrowReflexive: return "arrow relation is reflexive";
    case kOnesImplyArrow: return "A_ij = 1 implies i -> j";
    case kEmptyLinesImplyArrow: return "empty column i or empty row j gives i -> j";
    case kPositiveSetsRefine: return "positive sets of B contain positive sets of A";
    case kFreePairsInherited: return "free pairs of B are free pairs of A";
    case kCountsDetermineMatrix: return "equal counts imply A = B";
    case kCountsMonotone: return "counts never increase along A -> B";
    default: return "?";
  }
}

void run_trials(std::size_t n, std::size_t trials, std::uint64_t seed,
                std::vector<PropertyTally>& tally) {
  std::mt19937_64 rng(seed);
  auto record = [&](std::size_t p, bool ok) { ++(ok ? tally[p].passed : tally[p].failed); };
  for (std::size_t t = 0; t < trials; ++t) {
    const BoolMatrix a = random_idempotent(n, rng);
    record(kStable, is_stable(a));

    const PositiveSetFamily sets = positive_sets(a);
    std::uint64_t seen = 0;
    bool disjoint = true;
    for (std::uint64_t s : sets.sets) {
      disjoint = disjoint && s != 0 && (seen & s) == 0;
      seen |= s;
    }
    record(kDisjointPositiveSets, disjoint && sets.count() <= n);

    const ArrowRelation rel = arrow_relation(a);
    bool reflexive = true;
    bool ones = true;
    bool empty_lines = true;
    for (std::size_t i = 0; i < n; ++i) {
      reflexive = reflexive && rel(i, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j)) ones = ones && rel(i, j);
        // A zero column i leaves i -> j vacuous; likewise a zero row j.
        if (a.column(i) == 0) empty_lines = empty_lines && rel(i, j);
        if (a.row(i) == 0) empty_lines = empty_lines && rel(j, i);
      }
    }
    record(kArrowReflexive, reflexive);
    record(kOnesImplyArrow, ones);
    record(kEmptyLinesImplyArrow, empty_lines);

    const BoolMatrix b = random_absorbed(a, rng);
    record(kPositiveSetsRefine, positive_sets_refine(a, b));
    record(kFreePairsInherited, free_pairs_inherited(a, b));
    record(kCountsDetermineMatrix, counts_determine_matrix(a, b));
    const CountPair ca = count_pair(a);
    const CountPair cb = count_pair(b);
    record(kCountsMonotone, cb.positive_sets <= ca.positive_sets &&
                                cb.free_pairs <= ca.free_pairs &&
                                (a == b || !(ca == cb)));
  }
}

}  // namespace

std::vector<PropertyTally> run_property_fuzz(std::size_t n, std::size_t trials,
                                             std::uint64_t seed, unsigned threads) {
  if (n == 0 || n > BoolMatrix::kMaxDim) throw UsageError("dimension out of range");
  threads = std::max(1u, threads);
  std::vector<std::vector<PropertyTally>> shards(
      threads, std::vector<PropertyTally>(kPropertyCount));
  std::seed_seq sequence{seed};
  std::vector<std::uint64_t> seeds(threads);
  sequence.generate(seeds.begin(), seeds.end());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t share = trials / threads + (t < trials % threads ? 1 : 0);
      if (threads == 1) {
        run_trials(n, share, seeds[t], shards[t]);
      } else {
        pool.emplace_back([&, t, share] { run_trials(n, share, seeds[t], shards[t]); });
      }
    }
  }
  std::vector<PropertyTally> total(kPropertyCount);
  for (std::size_t p = 0; p < kPropertyCount; ++p) {
    total[p].name = property_name(p);
    for (const auto& shard : shards) {
      total[p].passed += shard[p].passed;
      total[p].failed += shard[p].failed;
    }
  }
  return total;
}

std::string format_index_set(std::uint64_t set) {
  std::string out = "{";
  bool first = true;
  for (; set != 0; set &= set - 1) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(set) + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace monoid_ramsey
