#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tempdual/errors.hpp"

namespace tempdual {

inline constexpr std::size_t kMaxBlocks = 12;

// An element s·c of S_r ⋉ (Z/2)^(r+1), acting on signed basis vectors by
// e_i -> (-1)^{sign(i)} e_{image(i)}. The extra bit is the classical-block
// sign change, on which no permutation acts. Slots are 0-based.
class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(std::size_t r) {
    check_rank(r);
    SignedPerm w;
    w.rank_ = static_cast<std::uint8_t>(r);
    for (std::size_t i = 0; i < r; ++i) w.image_[i] = static_cast<std::uint8_t>(i);
    return w;
  }

  static SignedPerm transposition(std::size_t r, std::size_t i, std::size_t j) {
    SignedPerm w = identity(r);
    w.check_slot(i);
    w.check_slot(j);
    std::swap(w.image_[i], w.image_[j]);
    return w;
  }

  static SignedPerm sign_change(std::size_t r, std::size_t i) {
    SignedPerm w = identity(r);
    w.check_slot(i);
    w.signs_ = static_cast<std::uint16_t>(1u << i);
    return w;
  }

  static SignedPerm spec_change(std::size_t r) {
    SignedPerm w = identity(r);
    w.spec_ = true;
    return w;
  }

  // `image[i]` is the slot that slot i is sent to; bit i of `signs` is the
  // sign attached to source slot i.
  static SignedPerm from_parts(std::span<const std::size_t> image, std::uint32_t signs, bool spec) {
    SignedPerm w = identity(image.size());
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
      w.check_slot(image[i]);
      seen |= 1u << image[i];
      w.image_[i] = static_cast<std::uint8_t>(image[i]);
    }
    if (seen != (1u << image.size()) - 1u) throw DomainError("from_parts: image is not a bijection");
    if (signs >> image.size()) throw DomainError("from_parts: sign bits beyond rank");
    w.signs_ = static_cast<std::uint16_t>(signs);
    w.spec_ = spec;
    return w;
  }

  std::size_t rank() const { return rank_; }
  std::size_t image(std::size_t i) const { return image_[i]; }
  bool sign(std::size_t i) const { return (signs_ >> i) & 1u; }
  std::uint32_t sign_mask() const { return signs_; }
  bool spec() const { return spec_; }

  bool permutation_is_identity() const {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  bool is_identity() const { return permutation_is_identity() && signs_ == 0 && !spec_; }

  // Injective packing: 4 bits per image slot, then signs, then spec.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < rank_; ++i) k |= static_cast<std::uint64_t>(image_[i]) << (4 * i);
    k |= static_cast<std::uint64_t>(signs_) << 48;
    k |= static_cast<std::uint64_t>(spec_) << 60;
    return k;
  }

  // Word in the letters (i,j,...), c_i, c_spec with 1-based slots:
  // cycles of the permutation, then the sign changes applied first.
  std::string word() const {
    std::string out;
    std::uint32_t visited = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      if ((visited >> i) & 1u || image_[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!((visited >> j) & 1u)) {
        visited |= 1u << j;
        if (!first) out += ',';
        out += std::to_string(j + 1);
        first = false;
        j = image_[j];
      }
      out += ')';
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (sign(i)) out += "c_" + std::to_string(i + 1);
    }
    if (spec_) out += "c_spec";
    return out.empty() ? std::string("e") : out;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.rank_ == b.rank_ && a.key() == b.key();
  }

  friend SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
  friend SignedPerm inverse(const SignedPerm& w);

 private:
  static void check_rank(std::size_t r) {
    if (r > kMaxBlocks) throw DomainError("signed permutations support at most 12 blocks");
  }
  void check_slot(std::size_t i) const {
    if (i >= rank_) throw DomainError("slot index out of range");
  }

  std::array<std::uint8_t, kMaxBlocks> image_{};
  std::uint16_t signs_ = 0;
  std::uint8_t rank_ = 0;
  bool spec_ = false;
};

// (a∘b): apply b first. sign(i) = sign_a(image_b(i)) xor sign_b(i).
inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank_ != b.rank_) throw DimensionError("compose: operands have different ranks");
  SignedPerm out = a;
  std::uint16_t signs = 0;
  for (std::size_t i = 0; i < b.rank_; ++i) {
    out.image_[i] = a.image_[b.image_[i]];
    signs |= static_cast<std::uint16_t>((a.sign(b.image_[i]) ^ b.sign(i)) << i);
  }
  out.signs_ = signs;
  out.spec_ = a.spec_ != b.spec_;
  return out;
}

inline SignedPerm inverse(const SignedPerm& w) {
  SignedPerm out = w;
  std::uint16_t signs = 0;
  for (std::size_t i = 0; i < w.rank_; ++i) {
    out.image_[w.image_[i]] = static_cast<std::uint8_t>(i);
    signs |= static_cast<std::uint16_t>(w.sign(i) << w.image_[i]);
  }
  out.signs_ = signs;
  return out;
}

inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) { return compose(a, b); }

// Product of sign changes over the slots in `slots`.
inline SignedPerm sign_product(std::size_t r, const std::vector<std::size_t>& slots) {
  SignedPerm w = SignedPerm::identity(r);
  for (std::size_t i : slots) w = compose(w, SignedPerm::sign_change(r, i));
  return w;
}

}  // namespace tempdual

template <>
struct std::hash<tempdual::SignedPerm> {
  std::size_t operator()(const tempdual::SignedPerm& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key());
  }
};
