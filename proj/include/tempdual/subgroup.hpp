#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "tempdual/errors.hpp"
#include "tempdual/signed_perm.hpp"

namespace tempdual {

// 2^(r+1) · r!, the order of the ambient group; saturates at UINT64_MAX.
inline std::uint64_t ambient_order(std::size_t r) {
  std::uint64_t order = std::uint64_t{2} << r;
  for (std::size_t k = 2; k <= r; ++k) order *= k;
  return order;
}

// A finite subgroup of S_r ⋉ (Z/2)^(r+1) with its complete element list.
class Subgroup {
 public:
  Subgroup() : Subgroup(0) {}
  explicit Subgroup(std::size_t r) : rank_(r), elements_{SignedPerm::identity(r)} { index(); }

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SignedPerm>& generators() const { return generators_; }
  const std::vector<SignedPerm>& elements() const { return elements_; }

  bool contains(const SignedPerm& w) const {
    return w.rank() == rank_ && std::binary_search(keys_.begin(), keys_.end(), w.key());
  }

  bool is_subset_of(const Subgroup& other) const {
    if (other.rank_ != rank_) return false;
    return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
  }

  // Equality of element sets; designated generators are ignored.
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.rank_ == b.rank_ && a.keys_ == b.keys_;
  }

  // Sorted words of the designated generators.
  std::vector<std::string> generator_words() const {
    std::vector<std::string> words;
    for (const auto& g : generators_) words.push_back(g.word());
    std::sort(words.begin(), words.end());
    return words;
  }

  friend Subgroup generate_subgroup(std::span<const SignedPerm> gens, std::size_t r);
  friend Subgroup subgroup_from_elements(std::vector<SignedPerm> elements, std::size_t r);

 private:
  void index() {
    std::sort(elements_.begin(), elements_.end(),
              [](const SignedPerm& a, const SignedPerm& b) { return a.key() < b.key(); });
    keys_.clear();
    keys_.reserve(elements_.size());
    for (const auto& e : elements_) keys_.push_back(e.key());
  }

  std::size_t rank_;
  std::vector<SignedPerm> generators_;
  std::vector<SignedPerm> elements_;
  std::vector<std::uint64_t> keys_;
};

// Breadth-first saturation of the identity under left multiplication by the
// generators. In a finite group this is the generated subgroup.
inline Subgroup generate_subgroup(std::span<const SignedPerm> gens, std::size_t r) {
  Subgroup out(r);
  for (const auto& g : gens) {
    if (g.rank() != r) throw DimensionError("generate_subgroup: generator has wrong rank");
    if (!g.is_identity()) out.generators_.push_back(g);
  }
  const std::uint64_t cap = ambient_order(r);
  std::unordered_set<std::uint64_t> seen{SignedPerm::identity(r).key()};
  std::vector<SignedPerm> elements{SignedPerm::identity(r)};
  std::deque<SignedPerm> frontier{SignedPerm::identity(r)};
  while (!frontier.empty()) {
    const SignedPerm x = frontier.front();
    frontier.pop_front();
    for (const auto& g : out.generators_) {
      SignedPerm y = compose(g, x);
      if (seen.insert(y.key()).second) {
        if (elements.size() >= cap) throw ConsistencyError("subgroup closure exceeded 2^(r+1)·r!");
        elements.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  out.elements_ = std::move(elements);
  out.index();
  return out;
}

inline Subgroup generate_subgroup(const std::vector<SignedPerm>& gens, std::size_t r) {
  return generate_subgroup(std::span<const SignedPerm>(gens), r);
}

// Wraps an element list that is already a subgroup (checked) and picks a
// small generating set greedily in key order.
inline Subgroup subgroup_from_elements(std::vector<SignedPerm> elements, std::size_t r) {
  Subgroup probe(r);
  probe.elements_ = std::move(elements);
  probe.index();
  probe.keys_.erase(std::unique(probe.keys_.begin(), probe.keys_.end()), probe.keys_.end());
  if (probe.keys_.size() != probe.elements_.size()) throw DomainError("subgroup_from_elements: duplicates");
  if (!probe.contains(SignedPerm::identity(r))) throw DomainError("subgroup_from_elements: identity missing");
  for (const auto& a : probe.elements_) {
    if (a.rank() != r) throw DimensionError("subgroup_from_elements: element has wrong rank");
    if (!probe.contains(inverse(a))) throw DomainError("subgroup_from_elements: not inverse-closed");
  }
  std::vector<SignedPerm> gens;
  Subgroup current(r);
  for (const auto& a : probe.elements_) {
    if (current.order() == probe.order()) break;
    if (current.contains(a)) continue;
    gens.push_back(a);
    current = generate_subgroup(gens, r);
  }
  if (!(current == probe)) throw DomainError("subgroup_from_elements: not closed under composition");
  return current;
}

// h normal in g; conjugating generators by generators suffices.
inline bool is_normal(const Subgroup& h, const Subgroup& g) {
  if (!h.is_subset_of(g)) throw ContainmentError("is_normal: h is not contained in g");
  for (const auto& x : g.generators()) {
    const SignedPerm x_inv = inverse(x);
    for (const auto& y : h.generators()) {
      if (!h.contains(compose(compose(x, y), x_inv))) return false;
    }
  }
  return true;
}

// w = w' ⋊ R: w' normal, trivial intersection, orders multiply.
inline bool check_semidirect(const Subgroup& w, const Subgroup& wprime, const Subgroup& rgrp) {
  if (!wprime.is_subset_of(w) || !rgrp.is_subset_of(w)) {
    throw ContainmentError("check_semidirect: factor not contained in the whole group");
  }
  if (wprime.order() * rgrp.order() != w.order()) return false;
  for (const auto& rho : rgrp.elements()) {
    if (!rho.is_identity() && wprime.contains(rho)) return false;
  }
  return is_normal(wprime, w);
}

// Slot-disjoint join: embeds groups on complementary slot sets into rank r
// and returns the subgroup they generate.
inline SignedPerm embed(const SignedPerm& w, const std::vector<std::size_t>& slots, std::size_t r) {
  if (slots.size() != w.rank()) throw DimensionError("embed: slot list length differs from rank");
  std::vector<std::size_t> image(r);
  for (std::size_t i = 0; i < r; ++i) image[i] = i;
  std::uint32_t signs = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    image[slots[k]] = slots[w.image(k)];
    if (w.sign(k)) signs |= 1u << slots[k];
  }
  return SignedPerm::from_parts(image, signs, w.spec());
}

inline Subgroup join(const Subgroup& a, const std::vector<std::size_t>& a_slots, const Subgroup& b,
                     const std::vector<std::size_t>& b_slots, std::size_t r) {
  std::vector<SignedPerm> gens;
  for (const auto& g : a.generators()) gens.push_back(embed(g, a_slots, r));
  for (const auto& g : b.generators()) gens.push_back(embed(g, b_slots, r));
  return generate_subgroup(gens, r);
}

}  // namespace tempdual
