#include "monoid_ramsey/monoid.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

namespace {

void check_shape(std::size_t size, std::span<const Index> table,
                 Index neutral) {
  if (size == 0) throw UsageError("monoid must have at least one element");
  if (size > kMaxTableSize) {
    throw UsageError("monoid of size " + std::to_string(size) +
                     " exceeds the table limit of " +
                     std::to_string(kMaxTableSize));
  }
  if (table.size() != size * size) {
    throw UsageError("Cayley table has " + std::to_string(table.size()) +
                     " entries, expected " + std::to_string(size * size));
  }
  if (neutral >= size) {
    throw UsageError("neutral index " + std::to_string(neutral) +
                     " out of range");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size) {
      std::ostringstream msg;
      msg << "table entry (" << i / size << ", " << i % size
          << ") = " << table[i] << " out of range";
      throw UsageError(msg.str());
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    if (table[neutral * size + a] != a || table[a * size + neutral] != a) {
      throw UsageError("element " + std::to_string(neutral) +
                       " is not neutral for " + std::to_string(a));
    }
  }
}

void check_associative(std::size_t size, std::span<const Index> table) {
  auto mul = [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(table[a * size + b]);
  };
  // Greedy generating set: the right closure of the generators must cover
  // every element. The neutral element is good for Light's test for free.
  std::vector<char> reached(size, 0);
  std::vector<std::size_t> gens;
  std::vector<std::size_t> frontier;
  std::size_t reached_count = 0;
  auto reach = [&](std::size_t a) {
    if (!reached[a]) {
      reached[a] = 1;
      ++reached_count;
      frontier.push_back(a);
    }
  };
  std::vector<std::size_t> members;
  for (std::size_t candidate = 0; reached_count < size; ++candidate) {
    if (reached[candidate]) continue;
    gens.push_back(candidate);
    for (std::size_t m : members) reach(mul(m, candidate));
    reach(candidate);
    while (!frontier.empty()) {
      std::size_t a = frontier.back();
      frontier.pop_back();
      members.push_back(a);
      for (std::size_t g : gens) reach(mul(a, g));
    }
  }
  for (std::size_t g : gens) {
    for (std::size_t x = 0; x < size; ++x) {
      std::size_t xg = mul(x, g);
      for (std::size_t y = 0; y < size; ++y) {
        if (mul(xg, y) != mul(x, mul(g, y))) {
          std::ostringstream msg;
          msg << "table is not associative at (" << x << ", " << g << ", "
              << y << ")";
          throw UsageError(msg.str());
        }
      }
    }
  }
}

}  // namespace

void validate_table(std::size_t size, std::span<const Index> table,
                    Index neutral) {
  check_shape(size, table, neutral);
  check_associative(size, table);
}

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Index> table,
                           Index neutral, Index label_base)
    : size_(size),
      table_(std::move(table)),
      neutral_(neutral),
      label_base_(label_base) {
  validate_table(size_, table_, neutral_);
}

FiniteMonoid::FiniteMonoid(TrustedTag, std::size_t size,
                           std::vector<Index> table, Index neutral,
                           Index label_base)
    : size_(size),
      table_(std::move(table)),
      neutral_(neutral),
      label_base_(label_base) {
  check_shape(size_, table_, neutral_);
}

FiniteMonoid FiniteMonoid::trusted(std::size_t size, std::vector<Index> table,
                                   Index neutral, Index label_base) {
  return FiniteMonoid(TrustedTag{}, size, std::move(table), neutral,
                      label_base);
}

Index FiniteMonoid::multiply(Index a, Index b) const {
  if (!contains(a) || !contains(b)) {
    throw UsageError("element index out of range");
  }
  return (*this)(a, b);
}

Index FiniteMonoid::idempotent_power(Index m) const {
  if (!contains(m)) throw UsageError("element index out of range");
  Index power = m;
  for (std::size_t p = 1; p <= 2 * size_; ++p) {
    if (is_idempotent(power)) return power;
    power = (*this)(power, m);
  }
  throw InternalError("no idempotent power found; table is not a monoid");
}

std::vector<Index> FiniteMonoid::idempotents() const {
  std::vector<Index> out;
  for (Index a = 0; a < size_; ++a) {
    if (is_idempotent(a)) out.push_back(a);
  }
  return out;
}

std::optional<Index> FiniteMonoid::inverse(Index a) const {
  for (Index b = 0; b < size_; ++b) {
    if ((*this)(a, b) == neutral_ && (*this)(b, a) == neutral_) return b;
  }
  return std::nullopt;
}

bool FiniteMonoid::is_group() const {
  // In a finite monoid a one-sided unit is a unit, and a monoid is a group
  // iff every row is a permutation.
  std::vector<char> seen(size_);
  for (Index a = 0; a < size_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index b : row(a)) {
      if (seen[b]) return false;
      seen[b] = 1;
    }
  }
  return true;
}

Element multiply(Element a, Element b) {
  if (a.monoid == nullptr || a.monoid != b.monoid) {
    throw UsageError("cannot multiply elements of different monoids");
  }
  return Element{a.monoid, a.monoid->multiply(a.index, b.index)};
}

void validate_word(const FiniteMonoid& m, std::span<const Index> u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!m.contains(u[i])) {
      throw UsageError("letter " + std::to_string(u[i]) + " at position " +
                       std::to_string(i) + " is not an element of the monoid");
    }
  }
}

Index reduce(const FiniteMonoid& m, std::span<const Index> u) {
  Index acc = m.neutral();
  for (Index letter : u) acc = m(acc, letter);
  return acc;
}

std::vector<Index> prefix_reductions(const FiniteMonoid& m,
                                     std::span<const Index> u) {
  std::vector<Index> out(u.size() + 1);
  out[0] = m.neutral();
  for (std::size_t i = 0; i < u.size(); ++i) out[i + 1] = m(out[i], u[i]);
  return out;
}

std::vector<Index> suffix_reductions(const FiniteMonoid& m,
                                     std::span<const Index> u) {
  std::vector<Index> out(u.size() + 1);
  out[u.size()] = m.neutral();
  for (std::size_t i = u.size(); i-- > 0;) out[i] = m(u[i], out[i + 1]);
  return out;
}

void validate_cuts(const KDecomposition& d, std::size_t length) {
  if (d.cuts.size() < 2) {
    throw UsageError("a k-decomposition needs k >= 1 (at least two cuts)");
  }
  for (std::size_t j = 1; j < d.cuts.size(); ++j) {
    if (d.cuts[j - 1] >= d.cuts[j]) {
      throw UsageError("cut positions must be strictly increasing");
    }
  }
  if (d.cuts.back() > length) {
    throw UsageError("cut position " + std::to_string(d.cuts.back()) +
                     " beyond word length " + std::to_string(length));
  }
}

bool is_ramsey(const FiniteMonoid& m, std::span<const Index> u,
               const KDecomposition& d) {
  validate_cuts(d, u.size());
  std::optional<Index> common;
  for (std::size_t j = 1; j < d.cuts.size(); ++j) {
    Index r = reduce(m, u.subspan(d.cuts[j - 1], d.cuts[j] - d.cuts[j - 1]));
    if (common && *common != r) return false;
    common = r;
  }
  return m.is_idempotent(*common);
}

std::optional<RamseyDecomposition> has_ramsey_decomposition(
    const FiniteMonoid& m, std::span<const Index> u, std::size_t k) {
  if (k == 0) throw UsageError("k must be positive");
  const std::size_t n = u.size();
  if (n < k) return std::nullopt;

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> slot(m.size(), kNone);
  std::vector<Index> idempotents = m.idempotents();
  for (std::uint32_t s = 0; s < idempotents.size(); ++s) {
    slot[idempotents[s]] = s;
  }
  const std::size_t stride = n + 1;
  // links[s * stride + j]: longest chain of e_s-factors ending at position j.
  std::vector<std::uint32_t> links(idempotents.size() * stride, 0);
  std::vector<std::uint32_t> parent(idempotents.size() * stride, kNone);

  for (std::size_t i = 0; i < n; ++i) {
    Index p = m.neutral();
    for (std::size_t j = i + 1; j <= n; ++j) {
      p = m(p, u[j - 1]);
      std::uint32_t s = slot[p];
      if (s == kNone) continue;
      std::uint32_t candidate = links[s * stride + i] + 1;
      if (candidate <= links[s * stride + j]) continue;
      links[s * stride + j] = candidate;
      parent[s * stride + j] = static_cast<std::uint32_t>(i);
      if (candidate == k) {
        KDecomposition d;
        d.cuts.resize(k + 1);
        std::size_t pos = j;
        for (std::size_t c = k + 1; c-- > 0;) {
          d.cuts[c] = pos;
          if (c > 0) pos = parent[s * stride + pos];
        }
        return RamseyDecomposition{std::move(d), p};
      }
    }
  }
  return std::nullopt;
}

}  // namespace monoid_ramsey
