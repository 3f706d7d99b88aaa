#include "monoid_ramsey/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

namespace {

std::optional<std::size_t> checked_mul(std::size_t a, std::size_t b) {
  std::size_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

void require_k(std::size_t k) {
  if (k == 0) throw UsageError("k must be positive");
}

std::size_t required_length(std::optional<std::size_t> need,
                            std::size_t have, const char* what) {
  if (!need || have < *need) {
    throw UsageError(std::string(what) + " needs a word of length " +
                     (need ? std::to_string(*need) : std::string("beyond 2^64")) +
                     ", got " + std::to_string(have));
  }
  return *need;
}

}  // namespace

RamseyDecomposition prefix_sequence_decomposition(const FiniteMonoid& group,
                                                  std::span<const Index> u,
                                                  std::size_t k) {
  require_k(k);
  if (!group.is_group()) throw UsageError("monoid is not a group");
  const std::size_t need = required_length(checked_mul(k, group.size()),
                                           u.size(), "prefix sequence extraction");
  u = u.first(need);
  validate_word(group, u);

  const std::vector<Index> prefixes = prefix_reductions(group, u);
  std::vector<std::vector<std::size_t>> seen(group.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    auto& positions = seen[prefixes[i]];
    positions.push_back(i);
    if (positions.size() == k + 1) {
      return RamseyDecomposition{KDecomposition{positions}, group.neutral()};
    }
  }
  throw InternalError("pigeonhole failed: no prefix value repeated k+1 times");
}

Word group_witness(const FiniteMonoid& group, std::size_t k) {
  require_k(k);
  if (!group.is_group()) throw UsageError("monoid is not a group");
  std::vector<Index> order{group.neutral()};
  for (Index g = 0; g < group.size(); ++g) {
    if (g != group.neutral()) order.push_back(g);
  }
  std::vector<Index> inverse(group.size());
  for (Index g = 0; g < group.size(); ++g) inverse[g] = *group.inverse(g);

  Word prefixes;
  prefixes.reserve(k * group.size());
  for (Index g : order) prefixes.insert(prefixes.end(), k, g);
  Word out;
  out.reserve(prefixes.size() - 1);
  for (std::size_t i = 0; i + 1 < prefixes.size(); ++i) {
    out.push_back(group(inverse[prefixes[i]], prefixes[i + 1]));
  }
  return out;
}

RamseyDecomposition divide_and_conquer_decomposition(std::size_t n,
                                                     std::span<const Index> u,
                                                     std::size_t k) {
  require_k(k);
  if (n == 0) throw UsageError("max monoid needs n >= 1");
  const std::size_t need =
      required_length(checked_pow(k, n), u.size(), "divide-and-conquer extraction");
  u = u.first(need);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= n) {
      throw UsageError("letter at position " + std::to_string(i) +
                       " is not an element of H_" + std::to_string(n));
    }
  }

  // Invariant: u[lo, lo + len) has length k^j and all its letters are <= j.
  std::size_t lo = 0;
  std::size_t len = need;
  for (std::size_t j = n; j > 0; --j) {
    const std::size_t part = len / k;
    const Index top = static_cast<Index>(j - 1);
    std::optional<std::size_t> missing;
    for (std::size_t i = 0; i < k && !missing; ++i) {
      auto piece = u.subspan(lo + i * part, part);
      if (std::find(piece.begin(), piece.end(), top) == piece.end()) missing = i;
    }
    if (!missing) {
      KDecomposition d;
      for (std::size_t i = 0; i <= k; ++i) d.cuts.push_back(lo + i * part);
      return RamseyDecomposition{std::move(d), top};
    }
    lo += *missing * part;
    len = part;
  }
  throw InternalError("divide-and-conquer descent ran out of letters");
}

Word max_witness(std::size_t n, std::size_t k) {
  require_k(k);
  if (n == 0) throw UsageError("max monoid needs n >= 1");
  auto length = checked_pow(k, n);
  if (!length || *length > (std::size_t{1} << 30)) {
    throw ResourceRefusal("max-monoid witness would exceed 2^30 letters");
  }
  Word w(k - 1, 0);
  for (std::size_t level = 2; level <= n; ++level) {
    Word next;
    next.reserve(*length);
    for (std::size_t copy = 0; copy + 1 < k; ++copy) {
      next.insert(next.end(), w.begin(), w.end());
      next.push_back(static_cast<Index>(level - 1));
    }
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return w;
}

KDecomposition absorbing_decomposition(const FiniteMonoid& m,
                                       std::span<const Index> u,
                                       std::size_t multiplicity) {
  require_k(multiplicity);
  auto squared = checked_mul(m.size(), m.size());
  const std::size_t need =
      required_length(squared ? checked_mul(multiplicity, *squared) : std::nullopt,
                      u.size(), "absorbing decomposition");
  u = u.first(need);
  validate_word(m, u);

  const std::vector<Index> prefixes = prefix_reductions(m, u);
  const std::vector<Index> suffixes = suffix_reductions(m, u);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  for (std::size_t s = 0; s < prefixes.size(); ++s) {
    const std::uint64_t key = std::uint64_t{prefixes[s]} * m.size() + suffixes[s];
    auto& positions = seen[key];
    positions.push_back(s);
    if (positions.size() == multiplicity + 1) return KDecomposition{positions};
  }
  throw InternalError("pigeonhole failed: no (prefix, suffix) pair repeated");
}

std::optional<std::size_t> descent_word_length(std::size_t monoid_size,
                                               std::size_t k, std::size_t n) {
  auto fourth = checked_pow(monoid_size, 4);
  if (!fourth) return std::nullopt;
  auto base = checked_mul(k, *fourth);
  if (!base) return std::nullopt;
  return checked_pow(*base, n);
}

namespace {

struct DerivedWord {
  Word letters;
  PositionMap positions;
  Index prefix_reduction;
  Index suffix_reduction;
};

// Reduces the middle factors of an absorbing decomposition to single letters,
// carrying their source intervals along.
DerivedWord collapse_middle(const FiniteMonoid& m, std::span<const Index> word,
                            const PositionMap& positions,
                            const KDecomposition& d) {
  DerivedWord out;
  out.letters.reserve(d.k());
  out.positions.reserve(d.k());
  for (std::size_t i = 1; i < d.cuts.size(); ++i) {
    const std::size_t from = d.cuts[i - 1];
    const std::size_t to = d.cuts[i];
    out.letters.push_back(reduce(m, word.subspan(from, to - from)));
    out.positions.push_back({positions[from].begin, positions[to - 1].end});
  }
  out.prefix_reduction = reduce(m, word.first(d.cuts.front()));
  out.suffix_reduction = reduce(m, word.subspan(d.cuts.back()));
  return out;
}

std::size_t exact_quotient(std::size_t total, std::size_t divisor,
                           const char* what) {
  if (divisor == 0 || total % divisor != 0) {
    throw InternalError(std::string("length of ") + what +
                        " is not an exact multiple");
  }
  return total / divisor;
}

void invariant(bool holds, const char* what) {
  if (!holds) throw InternalError(std::string("descent invariant violated: ") + what);
}

}  // namespace

DescentOutcome ramsey_or_embedding(const FiniteMonoid& m,
                                   std::span<const Index> u, std::size_t k,
                                   std::size_t n, bool check_invariants) {
  require_k(k);
  const std::size_t need = required_length(descent_word_length(m.size(), k, n),
                                           u.size(), "general extraction");
  u = u.first(need);
  validate_word(m, u);

  DescentOutcome outcome;
  Word letters(u.begin(), u.end());
  PositionMap positions(need);
  for (std::size_t i = 0; i < need; ++i) positions[i] = {i, i + 1};
  const std::size_t squared = m.size() * m.size();
  std::vector<Index> found;  // e_{n+1}, e_n, ...

  for (std::size_t j = n; j > 0; --j) {
    const std::size_t multiplicity = exact_quotient(letters.size(), squared, "u_j");
    const KDecomposition first = absorbing_decomposition(m, letters, multiplicity);
    DerivedWord v = collapse_middle(m, letters, positions, first);

    const std::size_t multiplicity2 = exact_quotient(v.letters.size(), squared, "v");
    const KDecomposition second = absorbing_decomposition(m, v.letters, multiplicity2);
    DerivedWord w = collapse_middle(m, v.letters, v.positions, second);
    const Index e = m.idempotent_power(m(w.suffix_reduction, w.prefix_reduction));
    found.push_back(e);

    DescentLevel level{j, e, v.prefix_reduction, v.suffix_reduction,
                       reduce(m, letters), {}, {}};
    if (check_invariants) {
      invariant(level.word_reduction == m(level.prefix_reduction, level.suffix_reduction),
                "reduce(u_j) != reduce(x z)");
      invariant(level.word_reduction ==
                    m(m(level.prefix_reduction, e), level.suffix_reduction),
                "reduce(u_j) != reduce(x)·e·reduce(z)");
    }

    const std::size_t piece = exact_quotient(w.letters.size(), k, "w");
    std::optional<std::size_t> failing;
    for (std::size_t i = 0; i < k && !failing; ++i) {
      if (reduce(m, std::span<const Index>(w.letters).subspan(i * piece, piece)) != e) {
        failing = i;
      }
    }
    if (!failing) {
      KDecomposition d;
      for (std::size_t i = 0; i < k; ++i) d.cuts.push_back(w.positions[i * piece].begin);
      d.cuts.push_back(w.positions[k * piece - 1].end);
      outcome.levels.push_back(std::move(level));
      if (check_invariants) invariant(is_ramsey(m, u, d), "transferred cuts not Ramsey");
      outcome.result = RamseyDecomposition{std::move(d), e};
      return outcome;
    }

    const auto from = static_cast<std::ptrdiff_t>(*failing * piece);
    const auto to = from + static_cast<std::ptrdiff_t>(piece);
    letters.assign(w.letters.begin() + from, w.letters.begin() + to);
    positions.assign(w.positions.begin() + from, w.positions.begin() + to);
    if (check_invariants) {
      for (Index a : letters) {
        invariant(m(e, a) == e && m(a, e) == e, "e does not absorb a letter of u_{j-1}");
      }
      invariant(reduce(m, letters) != e, "u_{j-1} reduces to e");
    }
    level.next_word = letters;
    level.next_positions = positions;
    outcome.levels.push_back(std::move(level));
  }

  MaxEmbedding embedding;
  embedding.images.push_back(m.neutral());
  embedding.images.insert(embedding.images.end(), found.rbegin(), found.rend());
  if (check_invariants) {
    invariant(is_max_embedding(m, embedding), "returned idempotents are not an embedding");
  }
  outcome.result = std::move(embedding);
  return outcome;
}

RamseyBounds ramsey_bounds(std::size_t monoid_size, std::size_t regular_d_length,
                           std::size_t k) {
  require_k(k);
  const auto exponent = static_cast<unsigned>(regular_d_length);
  BigInt size(monoid_size);
  BigInt lower = boost::multiprecision::pow(BigInt(k), exponent);
  BigInt upper = boost::multiprecision::pow(BigInt(k) * size * size * size * size, exponent);
  return RamseyBounds{regular_d_length, std::move(lower), std::move(upper)};
}

RamseyBounds ramsey_bounds(const FiniteMonoid& m, std::size_t k) {
  return ramsey_bounds(m.size(), regular_d_length_chains(m), k);
}

Word embedded_witness(const FiniteMonoid& m, const MaxEmbedding& embedding,
                      std::size_t k) {
  if (auto defect = max_embedding_defect(m, embedding, false)) {
    throw UsageError("not a max-monoid embedding: " + *defect);
  }
  Word w = max_witness(embedding.length(), k);
  for (Index& letter : w) letter = embedding.images[letter];
  return w;
}

Word embedded_witness(const FiniteMonoid& m, std::size_t k) {
  GreenStructure g = green_structure(m);
  RegularChain chain = longest_regular_chain(g);
  return embedded_witness(m, chain_to_monomorphism(m, g, chain.classes), k);
}

namespace {

// Smallest-index word of length n (base-|M| digits, most significant first)
// without a Ramsey k-decomposition, or nullopt.
std::optional<Word> first_counterexample(const FiniteMonoid& m, std::size_t k,
                                         std::size_t n, std::size_t total,
                                         unsigned threads) {
  constexpr std::size_t kChunk = 1024;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> best{kNone};
  const std::size_t base = m.size();

  auto worker = [&] {
    Word word(n);
    for (;;) {
      const std::size_t start = next_chunk.fetch_add(kChunk);
      if (start >= total || start > best.load()) return;
      std::size_t rest = start;
      for (std::size_t i = n; i-- > 0;) {
        word[i] = static_cast<Index>(rest % base);
        rest /= base;
      }
      const std::size_t stop = std::min(total, start + kChunk);
      for (std::size_t index = start; index < stop && index < best.load(); ++index) {
        if (!has_ramsey_decomposition(m, word, k)) {
          std::size_t current = best.load();
          while (index < current && !best.compare_exchange_weak(current, index)) {
          }
          break;
        }
        for (std::size_t i = n; i-- > 0;) {
          if (++word[i] < base) break;
          word[i] = 0;
        }
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (best.load() == kNone) return std::nullopt;
  Word out(n);
  std::size_t rest = best.load();
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Index>(rest % base);
    rest /= base;
  }
  return out;
}

}  // namespace

std::optional<OracleResult> ramsey_oracle(const FiniteMonoid& m, std::size_t k,
                                          const OracleOptions& options) {
  require_k(k);
  // No word shorter than k has k non-empty factors.
  Word counterexample(k - 1, m.neutral());
  for (std::size_t n = k; n <= options.max_len; ++n) {
    auto total = checked_pow(m.size(), n);
    if (!total || *total > options.max_words) {
      throw ResourceRefusal("enumerating all words of length " + std::to_string(n) +
                            " over " + std::to_string(m.size()) +
                            " elements exceeds the limit of " +
                            std::to_string(options.max_words) + " words");
    }
    auto failure = first_counterexample(m, k, n, *total, std::max(1u, options.threads));
    if (!failure) return OracleResult{n, std::move(counterexample)};
    counterexample = std::move(*failure);
  }
  return std::nullopt;
}

}  // namespace monoid_ramsey
