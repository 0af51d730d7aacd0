#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "tempdual/signed_perm.hpp"

namespace tempdual {

enum class RootKind { Difference, Sum, Short };

// e_i - e_j, e_i + e_j (i < j) or the short/long root on slot i. 0-based.
struct RootLabel {
  RootKind kind = RootKind::Short;
  std::size_t i = 0;
  std::size_t j = 0;

  static RootLabel difference(std::size_t a, std::size_t b) { return {RootKind::Difference, a, b}; }
  static RootLabel sum(std::size_t a, std::size_t b) { return {RootKind::Sum, a, b}; }
  static RootLabel short_root(std::size_t a) { return {RootKind::Short, a, a}; }

  std::string to_string() const {
    switch (kind) {
      case RootKind::Difference:
        return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1);
      case RootKind::Sum:
        return "e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1);
      case RootKind::Short:
        break;
    }
    return "e" + std::to_string(i + 1);
  }

  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

// `spec_on_short` realizes c_i as c_i·c_spec (even orthogonal, odd block).
inline SignedPerm reflection_of_root(const RootLabel& root, std::size_t r, bool spec_on_short = false) {
  const bool pair = root.kind != RootKind::Short;
  if (root.i >= r || (pair && (root.j >= r || root.i >= root.j))) {
    throw DomainError("reflection_of_root: index out of range");
  }
  switch (root.kind) {
    case RootKind::Difference:
      return SignedPerm::transposition(r, root.i, root.j);
    case RootKind::Sum:
      return compose(SignedPerm::transposition(r, root.i, root.j),
                     sign_product(r, {root.i, root.j}));
    case RootKind::Short:
      break;
  }
  SignedPerm c = SignedPerm::sign_change(r, root.i);
  return spec_on_short ? compose(c, SignedPerm::spec_change(r)) : c;
}

// Image of a root under w, as a signed root: returns the label of ±w(root)
// and whether the sign is +. Sum/Difference images are normalized to i < j.
struct SignedRoot {
  RootLabel root;
  bool positive = true;
};

inline SignedRoot apply_to_root(const SignedPerm& w, const RootLabel& root) {
  // w(e_k) = s_k e_{image(k)}; represent a root as a·e_p + b·e_q.
  const auto coeff = [&](std::size_t k) { return w.sign(k) ? -1 : 1; };
  if (root.kind == RootKind::Short) {
    return {RootLabel::short_root(w.image(root.i)), coeff(root.i) > 0};
  }
  std::size_t p = w.image(root.i);
  std::size_t q = w.image(root.j);
  int a = coeff(root.i);
  int b = coeff(root.j) * (root.kind == RootKind::Difference ? -1 : 1);
  if (p > q) {
    std::swap(p, q);
    std::swap(a, b);
  }
  // a e_p + b e_q with p < q; positive roots are e_p ± e_q.
  const bool positive = a > 0;
  if (!positive) {
    a = -a;
    b = -b;
  }
  return {b > 0 ? RootLabel::sum(p, q) : RootLabel::difference(p, q), positive};
}

}  // namespace tempdual
