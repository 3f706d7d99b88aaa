#include "monoid_ramsey/families.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

namespace {

void require_positive(std::size_t n, const char* family) {
  if (n == 0) {
    throw UsageError(std::string(family) + " needs a positive parameter");
  }
}

std::size_t transformation_size(std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= n + 1;
  return size;
}

}  // namespace

FiniteMonoid make_max(std::size_t n) {
  require_positive(n, "max monoid");
  if (n > kMaxTableSize) throw UsageError("max monoid too large for a table");
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<Index>(std::max(a, b));
    }
  }
  return FiniteMonoid::trusted(n, std::move(table), 0, 1);
}

FiniteMonoid make_cyclic(std::size_t n) {
  require_positive(n, "cyclic group");
  if (n > kMaxTableSize) throw UsageError("cyclic group too large for a table");
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<Index>((a + b) % n);
    }
  }
  return FiniteMonoid::trusted(n, std::move(table), 0);
}

Index encode_transformation(const PartialFunction& f) {
  const std::size_t n = f.size();
  Index code = 0;
  for (std::size_t x = n; x-- > 0;) {
    if (f[x] > n) throw UsageError("partial function value out of range");
    code = code * static_cast<Index>(n + 1) + f[x];
  }
  return code;
}

PartialFunction decode_transformation(std::size_t n, Index code) {
  PartialFunction f(n);
  for (std::size_t x = 0; x < n; ++x) {
    f[x] = static_cast<std::uint8_t>(code % (n + 1));
    code /= static_cast<Index>(n + 1);
  }
  return f;
}

PartialFunction compose_right(const PartialFunction& f,
                              const PartialFunction& g) {
  if (f.size() != g.size()) {
    throw UsageError("cannot compose partial functions of different degree");
  }
  PartialFunction out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    out[x] = f[x] == 0 ? 0 : g[f[x] - 1];
  }
  return out;
}

FiniteMonoid make_transformation(std::size_t n) {
  require_positive(n, "transformation monoid");
  if (n > 3) {
    throw UsageError("transformation monoid T_" + std::to_string(n) +
                     " is too large for table form (n <= 3)");
  }
  const std::size_t size = transformation_size(n);
  std::vector<PartialFunction> elements(size);
  for (std::size_t c = 0; c < size; ++c) {
    elements[c] = decode_transformation(n, static_cast<Index>(c));
  }
  std::vector<Index> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] =
          encode_transformation(compose_right(elements[a], elements[b]));
    }
  }
  PartialFunction id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<std::uint8_t>(x + 1);
  return FiniteMonoid::trusted(size, std::move(table),
                               encode_transformation(id));
}

FiniteMonoid make_boolmat_monoid(std::size_t n) {
  require_positive(n, "Boolean matrix monoid");
  if (n > 3) {
    throw UsageError("Boolean matrix monoid R_" + std::to_string(n) +
                     " is too large for table form (n <= 3)");
  }
  const std::size_t size = std::size_t{1} << (n * n);
  std::vector<BoolMatrix> elements;
  elements.reserve(size);
  for (std::size_t c = 0; c < size; ++c) {
    elements.push_back(decode_boolmat(n, static_cast<Index>(c)));
  }
  std::vector<Index> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = encode_boolmat(elements[a] * elements[b]);
    }
  }
  return FiniteMonoid::trusted(size, std::move(table),
                               encode_boolmat(BoolMatrix::identity(n)));
}

Submonoid generated_submonoid(const FiniteMonoid& m,
                              std::span<const Index> gens) {
  validate_word(m, gens);
  constexpr Index kAbsent = std::numeric_limits<Index>::max();
  std::vector<Index> local(m.size(), kAbsent);
  std::vector<Index> members{m.neutral()};
  local[m.neutral()] = 0;
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (Index g : gens) {
      Index p = m(members[next], g);
      if (local[p] == kAbsent) {
        local[p] = static_cast<Index>(members.size());
        members.push_back(p);
      }
    }
  }
  const std::size_t size = members.size();
  std::vector<Index> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = local[m(members[a], members[b])];
    }
  }
  return Submonoid{FiniteMonoid::trusted(size, std::move(table), 0),
                   std::move(members)};
}

BoolMatrixSubmonoid generated_boolmat_submonoid(
    std::span<const BoolMatrix> gens, std::size_t max_size) {
  if (gens.empty()) {
    throw UsageError("need at least one generator to fix the dimension");
  }
  const std::size_t n = gens.front().dim();
  for (const BoolMatrix& g : gens) {
    if (g.dim() != n) throw UsageError("generators have mixed dimensions");
  }
  std::unordered_map<BoolMatrix, Index, BoolMatrixHash> local;
  std::vector<BoolMatrix> members{BoolMatrix::identity(n)};
  local.emplace(members.front(), 0);
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (const BoolMatrix& g : gens) {
      BoolMatrix p = members[next] * g;
      if (local.contains(p)) continue;
      if (members.size() >= max_size) {
        throw ResourceRefusal("generated submonoid exceeds " +
                              std::to_string(max_size) + " elements");
      }
      local.emplace(p, static_cast<Index>(members.size()));
      members.push_back(std::move(p));
    }
  }
  const std::size_t size = members.size();
  std::vector<Index> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = local.at(members[a] * members[b]);
    }
  }
  return BoolMatrixSubmonoid{FiniteMonoid::trusted(size, std::move(table), 0),
                             std::move(members)};
}

}  // namespace monoid_ramsey
