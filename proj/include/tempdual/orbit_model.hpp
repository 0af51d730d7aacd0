#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempdual/errors.hpp"
#include "tempdual/rational.hpp"
#include "tempdual/signed_perm.hpp"

namespace tempdual {

enum class GroupKind { Sp, SO_odd, SO_even_split, SO_even_quasisplit, U_even, U_odd };

inline bool is_even_orthogonal(GroupKind k) {
  return k == GroupKind::SO_even_split || k == GroupKind::SO_even_quasisplit;
}

inline std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::SO_odd: return "SO_odd";
    case GroupKind::SO_even_split: return "SO_even_split";
    case GroupKind::SO_even_quasisplit: return "SO_even_quasisplit";
    case GroupKind::U_even: return "U_even";
    case GroupKind::U_odd: return "U_odd";
  }
  return "?";
}

inline std::optional<GroupKind> parse_group_kind(const std::string& s) {
  for (GroupKind k : {GroupKind::Sp, GroupKind::SO_odd, GroupKind::SO_even_split,
                      GroupKind::SO_even_quasisplit, GroupKind::U_even, GroupKind::U_odd}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct LeviSignature {
  std::vector<int> block_sizes;
  int q = 0;
};

// Discrete-series class of a GL block: a circle of circumference 1/torsion.
struct InertialClass {
  std::string id;
  int size = 1;
  int torsion = 1;
  std::string dual_id;
  Rational dual_offset{0};
  // Keyed by self-dual parameter; only for self-dual classes.
  std::vector<std::pair<Rational, bool>> reducibility;
};

enum class TildeStatus { NotApplicable, Equivalent, Inequivalent };

inline std::string to_string(TildeStatus s) {
  switch (s) {
    case TildeStatus::NotApplicable: return "not_applicable";
    case TildeStatus::Equivalent: return "equivalent";
    case TildeStatus::Inequivalent: return "inequivalent";
  }
  return "?";
}

struct TauTag {
  std::string label = "1";
  TildeStatus tilde = TildeStatus::NotApplicable;
};

struct RawBlock {
  std::string class_id;
  Rational t{0};
};

// Bilinear ±1 cocycle on R_σ in coordinates of its designated generators:
// eta(x, y) = (-1)^{x^T B y}.
using BilinearCocycle = std::vector<std::vector<int>>;

struct Scenario {
  GroupKind kind = GroupKind::Sp;
  int n = 1;
  LeviSignature levi;
  std::vector<InertialClass> classes;
  std::vector<RawBlock> blocks;
  TauTag tau;
  // Character of SO(2) for split even orthogonal groups with q = 1.
  std::optional<RawBlock> torus_block;
  std::optional<BilinearCocycle> cocycle;
};

struct Violation {
  std::string code;
  std::string message;
};

// Block state: class index into the model's class table plus reduced coordinate.
struct BlockState {
  std::size_t cls = 0;
  Rational t{0};
  friend bool operator==(const BlockState&, const BlockState&) = default;
};

struct SigmaPoint {
  std::vector<BlockState> blocks;
  bool tau_tilde = false;  // true once the classical block reads τ̃
  friend bool operator==(const SigmaPoint&, const SigmaPoint&) = default;
};

struct SigmaPointHash {
  std::size_t operator()(const SigmaPoint& p) const noexcept {
    std::uint64_t h = p.tau_tilde ? 0x9e3779b97f4a7c15ull : 0;
    for (const auto& b : p.blocks) {
      for (std::uint64_t v : {static_cast<std::uint64_t>(b.cls), static_cast<std::uint64_t>(b.t.numerator()),
                              static_cast<std::uint64_t>(b.t.denominator())}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
    }
    return static_cast<std::size_t>(h);
  }
};

// Angles modulo 1, one per GL block.
struct Twist {
  std::vector<Rational> angles;
  friend bool operator==(const Twist&, const Twist&) = default;
};

// How sign changes on a block are realized in W(G,M).
enum class Regime {
  Symplectic,      // every c_i exists
  SpecSymplectic,  // even orthogonal, τ̃ ≃ τ: odd blocks use c_i·c_spec
  ParitySplit,     // even orthogonal otherwise: odd blocks only in pairs
};

// SO(2n) with q = 1 is rewritten with the SO(2) factor as an extra GL(1) block.
inline Scenario normalize_scenario(Scenario s) {
  if (s.kind == GroupKind::SO_even_split && s.levi.q == 1 && s.torus_block) {
    s.levi.block_sizes.push_back(1);
    s.levi.q = 0;
    s.blocks.push_back(*s.torus_block);
    s.torus_block.reset();
    s.tau.tilde = TildeStatus::NotApplicable;
  }
  return s;
}

inline bool tilde_expected(GroupKind kind, int q) {
  if (kind == GroupKind::SO_even_split) return q >= 2;
  if (kind == GroupKind::SO_even_quasisplit) return q >= 1;
  return false;
}

inline Regime regime_of(GroupKind kind, int q, TildeStatus tilde) {
  if (!is_even_orthogonal(kind)) return Regime::Symplectic;
  if (q >= 1 && tilde == TildeStatus::Equivalent) return Regime::SpecSymplectic;
  return Regime::ParitySplit;
}

// Self-dual parameters δ/2 and δ/2 + 1/(2m), reduced mod 1/m.
inline std::pair<Rational, Rational> self_dual_parameters(const Rational& delta, int torsion) {
  const Rational d = reduce_mod(delta, torsion);
  return {reduce_mod(d / 2, torsion), reduce_mod(d / 2 + Rational(1, 2 * torsion), torsion)};
}

// Checks a normalized scenario; never throws.
inline std::vector<Violation> validate_scenario(const Scenario& raw) {
  const Scenario s = normalize_scenario(raw);
  std::vector<Violation> out;
  const auto report = [&](std::string code, std::string msg) { out.push_back({std::move(code), std::move(msg)}); };

  if (s.n < 1) report("rank-positive", "group rank n must be at least 1");
  int total = s.levi.q;
  for (int size : s.levi.block_sizes) {
    if (size < 1) report("block-size", "block sizes must be positive");
    total += size;
  }
  if (s.levi.q < 0) report("levi-q", "classical block parameter q must be nonnegative");
  if (total != s.n) {
    report("levi-sum", "block sizes plus q sum to " + std::to_string(total) + ", expected " + std::to_string(s.n));
  }
  if (s.levi.block_sizes.size() > kMaxBlocks) report("rank-limit", "at most 12 GL blocks are supported");
  if (is_even_orthogonal(s.kind) && s.levi.q == 1 && s.kind == GroupKind::SO_even_split) {
    report("so-even-q1", "split even orthogonal scenario with q = 1 needs a torus_block to normalize");
  }
  if (tilde_expected(s.kind, s.levi.q)) {
    if (s.tau.tilde == TildeStatus::NotApplicable) {
      report("tilde-status", "even orthogonal classical block requires an equivalent/inequivalent tilde status");
    }
  } else if (s.tau.tilde != TildeStatus::NotApplicable) {
    report("tilde-status", "tilde status only applies to even orthogonal groups with a classical block");
  }

  std::map<std::string, const InertialClass*> by_id;
  for (const auto& c : s.classes) {
    if (!by_id.emplace(c.id, &c).second) report("duplicate-class", "class id '" + c.id + "' defined twice");
  }
  for (const auto& c : s.classes) {
    const std::string where = "class '" + c.id + "': ";
    if (c.size < 1 || c.torsion < 1) {
      report("torsion-divides-size", where + "size and torsion must be positive");
      continue;
    }
    if (c.size % c.torsion != 0) {
      report("torsion-divides-size",
             where + "torsion " + std::to_string(c.torsion) + " does not divide size " + std::to_string(c.size));
      continue;
    }
    auto dual_it = by_id.find(c.dual_id);
    if (dual_it == by_id.end()) {
      report("dual-unknown", where + "dual class '" + c.dual_id + "' is not defined");
      continue;
    }
    const InertialClass& d = *dual_it->second;
    if (d.dual_id != c.id) report("dual-involution", where + "duality is not an involution");
    if (d.size != c.size || d.torsion != c.torsion) {
      report("dual-shape", where + "dual class must have the same size and torsion");
    } else if (reduce_mod(d.dual_offset, d.torsion) != reduce_mod(c.dual_offset, c.torsion)) {
      report("dual-offset", where + "dual offset differs from that of its dual class");
    }
    if (c.dual_id == c.id) {
      const auto [p0, p1] = self_dual_parameters(c.dual_offset, c.torsion);
      std::set<Rational> keys;
      bool ok = c.reducibility.size() == 2;
      for (const auto& [key, flag] : c.reducibility) {
        const Rational k = reduce_mod(key, c.torsion);
        if (k != p0 && k != p1) ok = false;
        keys.insert(k);
      }
      if (!ok || keys.size() != 2) {
        report("flag-key", where + "reducibility must be keyed exactly at " + to_string(p0) + " and " + to_string(p1));
      }
    } else if (!c.reducibility.empty()) {
      report("flag-key", where + "reducibility flags are only meaningful on self-dual classes");
    }
  }

  if (s.blocks.size() != s.levi.block_sizes.size()) {
    report("block-count", "sigma lists " + std::to_string(s.blocks.size()) + " blocks but the Levi has " +
                              std::to_string(s.levi.block_sizes.size()));
  } else {
    const Regime regime = regime_of(s.kind, s.levi.q, s.tau.tilde);
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
      auto it = by_id.find(s.blocks[i].class_id);
      const std::string where = "block " + std::to_string(i + 1) + ": ";
      if (it == by_id.end()) {
        report("unknown-class", where + "class '" + s.blocks[i].class_id + "' is not defined");
        continue;
      }
      const InertialClass& c = *it->second;
      if (c.size != s.levi.block_sizes[i]) report("block-class-size", where + "class size differs from block size");
      // On odd blocks of SO(2n) outside the τ̃ ≃ τ case, C holds exactly at
      // self-dual points, so a false flag there is contradictory input.
      if (regime == Regime::ParitySplit && c.size % 2 == 1 && c.dual_id == c.id) {
        for (const auto& [key, flag] : c.reducibility) {
          if (!flag) report("so-odd-flag", where + "odd even-orthogonal block needs both reducibility flags true");
        }
      }
    }
  }
  return out;
}

class ValidationFailed : public InputError {
 public:
  explicit ValidationFailed(std::vector<Violation> v)
      : InputError("scenario failed validation: " + (v.empty() ? std::string() : v.front().code)),
        violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Validated, normalized scenario with class data resolved to indices.
class Model {
 public:
  static Model build(const Scenario& raw) {
    auto violations = validate_scenario(raw);
    if (!violations.empty()) throw ValidationFailed(std::move(violations));
    const Scenario s = normalize_scenario(raw);
    Model m;
    m.kind_ = s.kind;
    m.n_ = s.n;
    m.levi_ = s.levi;
    m.tau_ = s.tau;
    m.cocycle_ = s.cocycle;
    m.regime_ = regime_of(s.kind, s.levi.q, s.tau.tilde);
    std::map<std::string, std::size_t> index;
    for (const auto& c : s.classes) {
      index.emplace(c.id, m.classes_.size());
      Entry e;
      e.info = c;
      e.info.dual_offset = reduce_mod(c.dual_offset, c.torsion);
      for (const auto& [key, flag] : c.reducibility) e.flags[reduce_mod(key, c.torsion)] = flag;
      e.info.reducibility.assign(e.flags.begin(), e.flags.end());
      m.classes_.push_back(std::move(e));
    }
    for (auto& e : m.classes_) e.dual = index.at(e.info.dual_id);
    for (const auto& b : s.blocks) {
      const std::size_t cls = index.at(b.class_id);
      m.base_.blocks.push_back({cls, reduce_mod(b.t, m.classes_[cls].info.torsion)});
    }
    return m;
  }

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int q() const { return levi_.q; }
  const LeviSignature& levi() const { return levi_; }
  const TauTag& tau() const { return tau_; }
  Regime regime() const { return regime_; }
  const std::optional<BilinearCocycle>& cocycle() const { return cocycle_; }
  std::size_t rank() const { return levi_.block_sizes.size(); }
  int block_size(std::size_t i) const { return levi_.block_sizes.at(i); }
  const SigmaPoint& base_point() const { return base_; }

  std::size_t class_count() const { return classes_.size(); }
  const InertialClass& class_info(std::size_t cls) const { return classes_.at(cls).info; }
  int torsion(std::size_t cls) const { return classes_.at(cls).info.torsion; }
  std::size_t dual_class(std::size_t cls) const { return classes_.at(cls).dual; }
  bool class_self_dual(std::size_t cls) const { return dual_class(cls) == cls; }

  // Odd block whose sign change exists only paired with another odd one.
  bool parity_restricted(std::size_t slot) const {
    return regime_ == Regime::ParitySplit && block_size(slot) % 2 == 1;
  }
  // Odd block whose sign change is realized as c_i·c_spec.
  bool spec_attached(std::size_t slot) const {
    return regime_ == Regime::SpecSymplectic && block_size(slot) % 2 == 1;
  }
  // The element of W(G,M) that acts on slot i alone by duality.
  SignedPerm single_sign(std::size_t slot) const {
    if (parity_restricted(slot)) throw DomainError("single sign change does not exist on this odd block");
    SignedPerm c = SignedPerm::sign_change(rank(), slot);
    return spec_attached(slot) ? compose(c, SignedPerm::spec_change(rank())) : c;
  }

  BlockState dual(const BlockState& b) const {
    const auto& e = classes_.at(b.cls);
    return {e.dual, reduce_mod(e.info.dual_offset - b.t, e.info.torsion)};
  }

  bool equivalent(const BlockState& a, const BlockState& b) const {
    if (class_info(a.cls).size != class_info(b.cls).size) {
      throw DomainError("equivalent: blocks of different GL sizes are not comparable");
    }
    return a.cls == b.cls && a.t == b.t;
  }

  bool is_self_dual(const BlockState& b) const { return dual(b) == b; }

  std::pair<Rational, Rational> self_dual_parameters(std::size_t cls) const {
    if (!class_self_dual(cls)) throw DomainError("self_dual_parameters: class is not self-dual");
    const auto& info = class_info(cls);
    return tempdual::self_dual_parameters(info.dual_offset, info.torsion);
  }

  bool flag_at(std::size_t cls, const Rational& t) const {
    const auto& flags = classes_.at(cls).flags;
    auto it = flags.find(t);
    return it != flags.end() && it->second;
  }

  bool satisfies_C(const BlockState& b) const { return is_self_dual(b) && flag_at(b.cls, b.t); }

  BlockState twist_block(const BlockState& b, const Rational& angle) const {
    return {b.cls, reduce_mod(b.t + angle, torsion(b.cls))};
  }

  SigmaPoint act(const SignedPerm& w, const SigmaPoint& p) const {
    const std::size_t r = rank();
    if (w.rank() != r || p.blocks.size() != r) throw DimensionError("act: rank mismatch");
    SigmaPoint out = p;
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t dest = w.image(j);
      if (block_size(dest) != block_size(j)) throw DomainError("act: permutation mixes blocks of different sizes");
      out.blocks[dest] = w.sign(j) ? dual(p.blocks[j]) : p.blocks[j];
    }
    if (w.spec() && tau_.tilde == TildeStatus::Inequivalent) out.tau_tilde = !out.tau_tilde;
    return out;
  }

  // Class-level image: does w send the class pattern of p to itself?
  bool preserves_classes(const SignedPerm& w, const SigmaPoint& p) const {
    for (std::size_t j = 0; j < rank(); ++j) {
      const std::size_t dest = w.image(j);
      if (block_size(dest) != block_size(j)) return false;
      const std::size_t cls = w.sign(j) ? dual_class(p.blocks[j].cls) : p.blocks[j].cls;
      if (cls != p.blocks[dest].cls) return false;
    }
    return !(w.spec() && tau_.tilde == TildeStatus::Inequivalent);
  }

  SigmaPoint twist_apply(const SigmaPoint& p, const Twist& x) const {
    if (x.angles.size() != p.blocks.size()) throw DimensionError("twist_apply: twist length differs from rank");
    SigmaPoint out = p;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) out.blocks[i] = twist_block(p.blocks[i], x.angles[i]);
    return out;
  }

  // w·x: the twist moved along with the blocks, negated under duality.
  Twist act_on_twist(const SignedPerm& w, const Twist& x) const {
    Twist out{std::vector<Rational>(x.angles.size())};
    for (std::size_t j = 0; j < x.angles.size(); ++j) {
      out.angles[w.image(j)] = reduce_mod(w.sign(j) ? -x.angles[j] : x.angles[j], 1);
    }
    return out;
  }

  std::string block_text(const BlockState& b) const { return class_info(b.cls).id + "@" + to_string(b.t); }

 private:
  struct Entry {
    InertialClass info;
    std::size_t dual = 0;
    std::map<Rational, bool> flags;
  };

  GroupKind kind_ = GroupKind::Sp;
  int n_ = 0;
  LeviSignature levi_;
  TauTag tau_;
  Regime regime_ = Regime::Symplectic;
  std::optional<BilinearCocycle> cocycle_;
  std::vector<Entry> classes_;
  SigmaPoint base_;
};

inline Twist zero_twist(std::size_t r) { return Twist{std::vector<Rational>(r, Rational(0))}; }

inline Twist add_twists(const Twist& a, const Twist& b) {
  if (a.angles.size() != b.angles.size()) throw DimensionError("add_twists: length mismatch");
  Twist out = a;
  for (std::size_t i = 0; i < a.angles.size(); ++i) out.angles[i] = reduce_mod(a.angles[i] + b.angles[i], 1);
  return out;
}

}  // namespace tempdual
