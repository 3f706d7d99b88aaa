#include "monoid_ramsey/green.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "monoid_ramsey/errors.hpp"

namespace monoid_ramsey {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

// Groups elements by key, numbering groups by their smallest element.
template <typename Key>
std::pair<std::vector<ClassId>, std::vector<std::vector<Index>>> partition_by(
    std::size_t count, const std::function<Key(Index)>& key_of) {
  std::map<Key, ClassId> ids;
  std::vector<ClassId> class_of(count);
  std::vector<std::vector<Index>> members;
  for (Index a = 0; a < count; ++a) {
    auto [it, inserted] =
        ids.emplace(key_of(a), static_cast<ClassId>(members.size()));
    if (inserted) members.emplace_back();
    class_of[a] = it->second;
    members[it->second].push_back(a);
  }
  return {std::move(class_of), std::move(members)};
}

}  // namespace

std::size_t GreenStructure::regular_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(dclass_idempotents_.begin(), dclass_idempotents_.end(),
                    [](const auto& v) { return !v.empty(); }));
}

bool GreenStructure::strictly_below(ClassId lower, ClassId upper) const {
  if (lower == upper) return false;
  return test(ideal_.at(dclass_members_.at(upper).front()),
              dclass_members_.at(lower).front());
}

bool GreenStructure::d_leq(Index m, Index m_prime) const {
  return test(ideal_.at(m_prime), m);
}

bool GreenStructure::h_leq(Index m, Index m_prime) const {
  return test(left_ideal_.at(m_prime), m) && test(right_ideal_.at(m_prime), m);
}

GreenStructure green_structure(const FiniteMonoid& m, std::size_t max_size) {
  const std::size_t size = m.size();
  if (size > max_size) {
    throw ResourceRefusal("Green's structure limited to " +
                          std::to_string(max_size) + " elements, monoid has " +
                          std::to_string(size));
  }
  const std::size_t words = (size + 63) / 64;
  GreenStructure g;
  g.left_ideal_.assign(size, Bits(words, 0));
  g.right_ideal_.assign(size, Bits(words, 0));
  g.ideal_.assign(size, Bits(words, 0));
  for (Index a = 0; a < size; ++a) {
    for (Index b = 0; b < size; ++b) {
      Index ab = m(a, b);
      set_bit(g.right_ideal_[a], ab);
      set_bit(g.left_ideal_[b], ab);
    }
  }
  // M·a·M is the union of the left ideals of the members of a·M.
  for (Index a = 0; a < size; ++a) {
    Bits& ideal = g.ideal_[a];
    const Bits& right = g.right_ideal_[a];
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = right[w]; bits != 0; bits &= bits - 1) {
        const Bits& left =
            g.left_ideal_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        for (std::size_t v = 0; v < words; ++v) ideal[v] |= left[v];
      }
    }
  }

  std::tie(g.dclass_of_, g.dclass_members_) = partition_by<Bits>(
      size, [&](Index a) { return g.ideal_[a]; });
  std::tie(g.hclass_of_, g.hclass_members_) =
      partition_by<std::pair<Bits, Bits>>(size, [&](Index a) {
        return std::make_pair(g.left_ideal_[a], g.right_ideal_[a]);
      });

  g.dclass_idempotents_.assign(g.dclass_members_.size(), {});
  for (Index a = 0; a < size; ++a) {
    if (m.is_idempotent(a)) g.dclass_idempotents_[g.dclass_of_[a]].push_back(a);
  }
  return g;
}

namespace {

// Regular classes sorted so that every class precedes those strictly below
// it: a strictly smaller class has a strictly smaller ideal.
std::vector<ClassId> regular_classes_top_down(const GreenStructure& g) {
  std::vector<ClassId> order;
  std::vector<std::size_t> ideal_size(g.dclass_count(), 0);
  for (ClassId c = 0; c < g.dclass_count(); ++c) {
    if (!g.is_regular(c)) continue;
    order.push_back(c);
    Index rep = g.dclass_members(c).front();
    for (Index x = 0; x < g.element_count(); ++x) {
      if (g.d_leq(x, rep)) ++ideal_size[c];
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](ClassId a, ClassId b) {
    return ideal_size[a] > ideal_size[b];
  });
  return order;
}

// depth[c]: length of the longest regular chain starting at c and going down.
std::vector<std::size_t> chain_depths(const GreenStructure& g,
                                      const std::vector<ClassId>& order) {
  std::vector<std::size_t> depth(g.dclass_count(), 0);
  for (std::size_t i = order.size(); i-- > 0;) {
    std::size_t best = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (g.strictly_below(order[j], order[i])) {
        best = std::max(best, depth[order[j]]);
      }
    }
    depth[order[i]] = best + 1;
  }
  return depth;
}

}  // namespace

RegularChain longest_regular_chain(const GreenStructure& g) {
  std::vector<ClassId> order = regular_classes_top_down(g);
  std::vector<std::size_t> depth = chain_depths(g, order);
  RegularChain chain;
  std::optional<ClassId> current;
  for (ClassId c : order) {
    if (!current || depth[c] > depth[*current]) current = c;
  }
  while (current) {
    chain.classes.push_back(*current);
    std::optional<ClassId> next;
    for (ClassId c : order) {
      if (depth[c] + 1 == depth[*current] && g.strictly_below(c, *current)) {
        next = c;
        break;
      }
    }
    current = next;
  }
  return chain;
}

std::vector<RegularChain> all_longest_regular_chains(const GreenStructure& g,
                                                     std::size_t limit) {
  std::vector<ClassId> order = regular_classes_top_down(g);
  std::vector<std::size_t> depth = chain_depths(g, order);
  std::size_t best = 0;
  for (ClassId c : order) best = std::max(best, depth[c]);

  std::vector<RegularChain> out;
  RegularChain partial;
  std::function<void(ClassId)> extend = [&](ClassId c) {
    if (out.size() >= limit) return;
    partial.classes.push_back(c);
    if (depth[c] == 1) {
      out.push_back(partial);
    } else {
      for (ClassId next : order) {
        if (depth[next] + 1 == depth[c] && g.strictly_below(next, c)) {
          extend(next);
        }
      }
    }
    partial.classes.pop_back();
  };
  for (ClassId c : order) {
    if (depth[c] == best) extend(c);
  }
  return out;
}

std::size_t regular_d_length_chains(const FiniteMonoid& m) {
  return longest_regular_chain(green_structure(m)).length();
}

std::optional<std::string> max_embedding_defect(const FiniteMonoid& m,
                                                const MaxEmbedding& e,
                                                bool anchored) {
  const auto& im = e.images;
  if (im.empty()) return "embedding is empty";
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (!m.contains(im[i])) return "image " + std::to_string(i + 1) + " out of range";
    if (!m.is_idempotent(im[i])) {
      return "image " + std::to_string(i + 1) + " is not idempotent";
    }
  }
  if (anchored && im.front() != m.neutral()) {
    return "first image is not the neutral element";
  }
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = i + 1; j < im.size(); ++j) {
      if (im[i] == im[j]) {
        return "images " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1) + " coincide";
      }
      if (m(im[i], im[j]) != im[j] || m(im[j], im[i]) != im[j]) {
        return "images " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1) + " do not multiply as max";
      }
    }
  }
  return std::nullopt;
}

MaxEmbedding regular_d_length_embedding(const FiniteMonoid& m,
                                        std::size_t cap) {
  if (m.size() > cap) {
    throw ResourceRefusal("embedding search limited to " + std::to_string(cap) +
                          " elements, monoid has " + std::to_string(m.size()));
  }
  const std::vector<Index> idempotents = m.idempotents();
  // Extending a chain only depends on its last element: anything absorbing
  // the last element absorbs the whole chain and differs from every member.
  std::vector<std::size_t> longest(m.size(), 0);
  std::vector<std::optional<Index>> successor(m.size());
  std::function<std::size_t(Index)> explore = [&](Index prev) -> std::size_t {
    if (longest[prev] != 0) return longest[prev];
    std::size_t best = 1;
    for (Index e : idempotents) {
      if (e == prev || m(e, prev) != e || m(prev, e) != e) continue;
      std::size_t candidate = 1 + explore(e);
      if (candidate > best) {
        best = candidate;
        successor[prev] = e;
      }
    }
    return longest[prev] = best;
  };
  explore(m.neutral());
  MaxEmbedding out;
  for (std::optional<Index> cur = m.neutral(); cur; cur = successor[*cur]) {
    out.images.push_back(*cur);
  }
  return out;
}

MaxEmbedding chain_to_monomorphism(const FiniteMonoid& m,
                                   const GreenStructure& g,
                                   std::span<const ClassId> chain) {
  if (chain.empty()) throw UsageError("chain of 𝒟-classes is empty");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= g.dclass_count()) throw UsageError("unknown 𝒟-class id");
    if (!g.is_regular(chain[i])) {
      throw UsageError("𝒟-class " + std::to_string(chain[i]) +
                       " in the chain is not regular");
    }
    if (i > 0 && !g.strictly_below(chain[i], chain[i - 1])) {
      throw UsageError("chain is not strictly descending at position " +
                       std::to_string(i + 1));
    }
  }
  MaxEmbedding out;
  out.images.push_back(g.dclass_idempotents(chain.front()).front());
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Index e = out.images.back();
    const Index f = g.dclass_idempotents(chain[i]).front();
    std::optional<std::pair<Index, Index>> factors;
    for (Index s = 0; s < m.size() && !factors; ++s) {
      const Index se = m(s, e);
      for (Index t = 0; t < m.size(); ++t) {
        if (m(se, t) == f) {
          factors.emplace(s, t);
          break;
        }
      }
    }
    if (!factors) {
      throw InternalError("no factorization f = s·e·t below a larger class");
    }
    const auto [s, t] = *factors;
    out.images.push_back(m(m(m(m(e, t), f), s), e));
  }
  return out;
}

}  // namespace monoid_ramsey
