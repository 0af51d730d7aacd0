#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempdual/errors.hpp"
#include "tempdual/orbit_model.hpp"
#include "tempdual/rational.hpp"
#include "tempdual/roots.hpp"
#include "tempdual/signed_perm.hpp"
#include "tempdual/subgroup.hpp"

namespace tempdual {

// ---------------------------------------------------------------- orbits

enum class OrbitType { PureI, PureII, Mixed };

inline std::string to_string(OrbitType t) {
  switch (t) {
    case OrbitType::PureI: return "PureI";
    case OrbitType::PureII: return "PureII";
    case OrbitType::Mixed: return "Mixed";
  }
  return "?";
}

struct OrbitInfo {
  std::vector<std::size_t> members;  // sorted
  OrbitType type = OrbitType::PureII;
  std::size_t base = 0;
  std::vector<std::size_t> per;   // same class as the base
  std::vector<std::size_t> flip;  // dual class of the base (Mixed only)
};

// Which index anchors a Mixed orbit. The second option swaps the roles of
// the per and flip halves and exists to test that nothing depends on it.
enum class MixedLabeling { SmallestIndex, SmallestFlip };

inline std::vector<OrbitInfo> orbit_partition(const Model& model, const SigmaPoint& p,
                                              MixedLabeling labeling = MixedLabeling::SmallestIndex) {
  const std::size_t r = model.rank();
  std::vector<std::size_t> root(r);
  std::iota(root.begin(), root.end(), 0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (model.block_size(i) != model.block_size(j)) continue;
      const std::size_t ci = p.blocks[i].cls;
      const std::size_t cj = p.blocks[j].cls;
      if (cj == ci || cj == model.dual_class(ci)) {
        root[j] = root[i];
        break;
      }
    }
  }
  std::map<std::size_t, OrbitInfo> grouped;
  for (std::size_t i = 0; i < r; ++i) grouped[root[i]].members.push_back(i);

  std::vector<OrbitInfo> out;
  for (auto& [anchor, orbit] : grouped) {
    std::size_t base = orbit.members.front();
    const std::size_t base_cls = p.blocks[base].cls;
    for (std::size_t i : orbit.members) {
      (p.blocks[i].cls == base_cls ? orbit.per : orbit.flip).push_back(i);
    }
    if (model.class_self_dual(base_cls)) {
      orbit.type = OrbitType::PureI;
    } else if (orbit.flip.empty()) {
      orbit.type = OrbitType::PureII;
    } else {
      orbit.type = OrbitType::Mixed;
      if (labeling == MixedLabeling::SmallestFlip) {
        std::swap(orbit.per, orbit.flip);
        base = orbit.per.front();
      }
    }
    orbit.base = base;
    out.push_back(std::move(orbit));
  }
  return out;
}

// ------------------------------------------------------------ Weyl groups

inline Subgroup full_weyl_group(const Model& model) {
  const std::size_t r = model.rank();
  std::vector<SignedPerm> gens;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (model.block_size(i) == model.block_size(j)) gens.push_back(SignedPerm::transposition(r, i, j));
    }
  }
  const bool even_orthogonal = is_even_orthogonal(model.kind());
  for (std::size_t i = 0; i < r; ++i) {
    const bool odd = model.block_size(i) % 2 == 1;
    if (!even_orthogonal || !odd) {
      gens.push_back(SignedPerm::sign_change(r, i));
    } else if (model.q() >= 1) {
      gens.push_back(compose(SignedPerm::sign_change(r, i), SignedPerm::spec_change(r)));
    } else {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (model.block_size(j) % 2 == 1) gens.push_back(sign_product(r, {i, j}));
      }
    }
  }
  return generate_subgroup(gens, r);
}

// Designated generators of W_Θ, read off the class pattern of p.
inline Subgroup w_theta(const Model& model, const SigmaPoint& p) {
  const std::size_t r = model.rank();
  std::vector<SignedPerm> gens;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (model.block_size(i) != model.block_size(j)) continue;
      const std::size_t ci = p.blocks[i].cls;
      const std::size_t cj = p.blocks[j].cls;
      if (ci == cj) gens.push_back(SignedPerm::transposition(r, i, j));
      if (!model.class_self_dual(ci) && model.dual_class(ci) == cj) {
        gens.push_back(reflection_of_root(RootLabel::sum(i, j), r));
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!model.class_self_dual(p.blocks[i].cls)) continue;
    if (!model.parity_restricted(i)) {
      gens.push_back(model.single_sign(i));
      continue;
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      if (model.parity_restricted(j) && model.class_self_dual(p.blocks[j].cls)) {
        gens.push_back(sign_product(r, {i, j}));
      }
    }
  }
  return generate_subgroup(gens, r);
}

inline Subgroup w_theta(const Model& model) { return w_theta(model, model.base_point()); }

// Oracle: every element of W(G,M) that maps p to a twist of itself.
inline Subgroup w_theta_bruteforce(const Model& model, const SigmaPoint& p) {
  const Subgroup full = full_weyl_group(model);
  std::vector<SignedPerm> kept;
  for (const auto& w : full.elements()) {
    if (model.preserves_classes(w, p)) kept.push_back(w);
  }
  return subgroup_from_elements(std::move(kept), model.rank());
}

inline bool is_fixed(const Model& model, const SigmaPoint& p, const Subgroup& group) {
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const SignedPerm& w) { return model.act(w, p) == p; });
}

// ------------------------------------------------------------ fixed point

struct FixedPoint {
  Twist twist;
  SigmaPoint point;
};

inline FixedPoint find_fixed_point(const Model& model, const SigmaPoint& p,
                                   MixedLabeling labeling = MixedLabeling::SmallestIndex) {
  Twist chi = zero_twist(model.rank());
  const auto align = [&](std::size_t i, const Rational& target) {
    chi.angles[i] = reduce_mod(target - p.blocks[i].t, model.torsion(p.blocks[i].cls));
  };
  for (const auto& orbit : orbit_partition(model, p, labeling)) {
    const BlockState& base = p.blocks[orbit.base];
    switch (orbit.type) {
      case OrbitType::PureI: {
        const Rational target = model.self_dual_parameters(base.cls).first;
        for (std::size_t i : orbit.members) align(i, target);
        break;
      }
      case OrbitType::PureII:
        for (std::size_t i : orbit.members) align(i, base.t);
        break;
      case OrbitType::Mixed: {
        const Rational flipped = model.dual(base).t;
        for (std::size_t i : orbit.per) align(i, base.t);
        for (std::size_t i : orbit.flip) align(i, flipped);
        break;
      }
    }
  }
  FixedPoint out{chi, model.twist_apply(p, chi)};
  const Subgroup wt = w_theta(model, p);
  for (const auto& w : wt.elements()) {
    if (!(model.act(w, out.point) == out.point)) {
      throw ConsistencyError("find_fixed_point: result moved by " + w.word());
    }
  }
  return out;
}

// ---------------------------------------------------------- Knapp–Stein

inline Subgroup stabilizer(const Model& model, const SigmaPoint& p, const Subgroup& base_w_theta) {
  std::vector<SignedPerm> kept;
  for (const auto& w : base_w_theta.elements()) {
    if (model.act(w, p) == p) kept.push_back(w);
  }
  return subgroup_from_elements(std::move(kept), model.rank());
}

inline std::vector<RootLabel> relevant_roots(const Model& model, const SigmaPoint& p) {
  const std::size_t r = model.rank();
  std::vector<RootLabel> roots;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (model.block_size(i) != model.block_size(j)) continue;
      if (model.equivalent(p.blocks[i], p.blocks[j])) roots.push_back(RootLabel::difference(i, j));
      if (model.equivalent(p.blocks[i], model.dual(p.blocks[j]))) roots.push_back(RootLabel::sum(i, j));
    }
    // On parity-restricted blocks C holds at every self-dual point.
    if (!model.parity_restricted(i) && model.is_self_dual(p.blocks[i]) && !model.satisfies_C(p.blocks[i])) {
      roots.push_back(RootLabel::short_root(i));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline Subgroup w_prime(const Model& model, const std::vector<RootLabel>& roots) {
  std::vector<SignedPerm> gens;
  for (const auto& root : roots) {
    const bool spec = root.kind == RootKind::Short && model.spec_attached(root.i);
    gens.push_back(reflection_of_root(root, model.rank(), spec));
  }
  return generate_subgroup(gens, model.rank());
}

// One sign change per maximal class of equivalent blocks satisfying C, on
// the largest index of the class; on parity-restricted blocks, products of
// consecutive representatives of the distinct self-dual values. The largest
// index is the choice that preserves the lexicographic positive system.
inline Subgroup r_group(const Model& model, const SigmaPoint& p) {
  const std::size_t r = model.rank();
  std::vector<std::size_t> c_reps;
  std::vector<std::size_t> parity_reps;
  std::vector<bool> taken(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (taken[i]) continue;
    std::size_t last = i;
    for (std::size_t j = i + 1; j < r; ++j) {
      if (model.block_size(j) == model.block_size(i) && p.blocks[j] == p.blocks[i]) {
        taken[j] = true;
        last = j;
      }
    }
    if (model.parity_restricted(i)) {
      if (model.is_self_dual(p.blocks[i])) parity_reps.push_back(last);
    } else if (model.satisfies_C(p.blocks[i])) {
      c_reps.push_back(last);
    }
  }
  std::vector<SignedPerm> gens;
  for (std::size_t i : c_reps) gens.push_back(model.single_sign(i));
  for (std::size_t k = 0; k + 1 < parity_reps.size(); ++k) {
    gens.push_back(sign_product(r, {parity_reps[k], parity_reps[k + 1]}));
  }
  return generate_subgroup(gens, r);
}

struct KnappSteinData {
  Subgroup w_stab;
  std::vector<RootLabel> relevant_roots;
  Subgroup w_prime;
  Subgroup r_group;
  bool decomposition_ok = false;
};

inline bool r_elements_unpermuted(const Subgroup& r) {
  return std::all_of(r.elements().begin(), r.elements().end(),
                     [](const SignedPerm& w) { return w.permutation_is_identity(); });
}

// Throws ConsistencyError unless W_τ = W'_τ ⋊ R_τ with R_τ made of pure sign
// changes, unless `checked` is false.
inline KnappSteinData knapp_stein(const Model& model, const SigmaPoint& p, const Subgroup& base_w_theta,
                                  bool checked = true) {
  KnappSteinData out;
  out.w_stab = stabilizer(model, p, base_w_theta);
  out.relevant_roots = relevant_roots(model, p);
  out.w_prime = w_prime(model, out.relevant_roots);
  out.r_group = r_group(model, p);
  try {
    out.decomposition_ok = check_semidirect(out.w_stab, out.w_prime, out.r_group) && r_elements_unpermuted(out.r_group);
  } catch (const ContainmentError&) {
    out.decomposition_ok = false;
  }
  if (checked && !out.decomposition_ok) {
    std::string where;
    for (const auto& b : p.blocks) where += model.block_text(b) + " ";
    throw ConsistencyError("Knapp-Stein decomposition fails at " + where);
  }
  return out;
}

inline KnappSteinData knapp_stein(const Model& model, const SigmaPoint& p) {
  return knapp_stein(model, p, w_theta(model, p));
}

// --------------------------------------------------------- classification

enum class RelevanceStatus { NotWeaklyRelevant, WeaklyOnly, SuperRelevantSingleton, WeaklyRelevantNonSingleton };

inline std::string to_string(RelevanceStatus s) {
  switch (s) {
    case RelevanceStatus::NotWeaklyRelevant: return "not-weakly-relevant";
    case RelevanceStatus::WeaklyOnly: return "weakly-only";
    case RelevanceStatus::SuperRelevantSingleton: return "super-relevant-singleton";
    case RelevanceStatus::WeaklyRelevantNonSingleton: return "weakly-relevant-non-singleton";
  }
  return "?";
}

struct Relevance {
  bool weakly = false;
  bool super = false;
  bool relevant = false;
  RelevanceStatus status = RelevanceStatus::NotWeaklyRelevant;
};

inline Relevance orbit_relevance(const Model& model, const OrbitInfo& orbit, const SigmaPoint& p) {
  Relevance out;
  if (orbit.type != OrbitType::PureI) return out;
  const BlockState& base = p.blocks[orbit.base];
  const auto [p0, p1] = model.self_dual_parameters(base.cls);
  const bool f0 = model.flag_at(base.cls, p0);
  const bool f1 = model.flag_at(base.cls, p1);
  out.weakly = f0 || f1;
  out.super = f0 && f1;
  out.relevant = model.satisfies_C(base);
  if (!out.weakly) return out;
  if (orbit.members.size() > 1) {
    out.status = RelevanceStatus::WeaklyRelevantNonSingleton;
  } else {
    out.status = out.super ? RelevanceStatus::SuperRelevantSingleton : RelevanceStatus::WeaklyOnly;
  }
  return out;
}

enum class Verdict { Good, Bad };

inline std::string to_string(Verdict v) { return v == Verdict::Good ? "Good" : "Bad"; }

struct Witness {
  Twist chi;
  std::string proof_case;
  std::size_t orbit_base = 0;
  std::size_t r_before = 0;
  std::size_t r_after = 0;
  std::size_t wprime_before = 0;
  std::size_t wprime_after = 0;

  bool r_grows() const { return r_after > r_before; }
  bool wprime_grows() const { return wprime_after > wprime_before; }
  bool validated() const { return r_grows() || wprime_grows(); }
};

struct OrbitVerdict {
  OrbitInfo orbit;
  Relevance relevance;
};

struct Classification {
  Verdict verdict = Verdict::Good;
  std::vector<OrbitVerdict> per_orbit;
  std::optional<Witness> witness;
};

inline Witness witness_for_bad(const Model& model, const SigmaPoint& p, const Subgroup& base_w_theta);

inline Classification classify(const Model& model, const SigmaPoint& p, const Subgroup& base_w_theta,
                               bool with_witness = true) {
  if (!is_fixed(model, p, base_w_theta)) throw PreconditionError("classify: point is not fixed by W_Θ");
  Classification out;
  for (auto& orbit : orbit_partition(model, p)) {
    const Relevance rel = orbit_relevance(model, orbit, p);
    if (rel.status == RelevanceStatus::WeaklyOnly || rel.status == RelevanceStatus::WeaklyRelevantNonSingleton) {
      out.verdict = Verdict::Bad;
    }
    out.per_orbit.push_back({std::move(orbit), rel});
  }
  if (out.verdict == Verdict::Bad && with_witness) out.witness = witness_for_bad(model, p, base_w_theta);
  return out;
}

inline Classification classify(const Model& model, const SigmaPoint& p) {
  return classify(model, p, w_theta(model, p));
}

// Tries the witness constructions "1a" to "2b" in order; the first twist
// whose R-group or W'-group strictly grows is returned.
inline Witness witness_for_bad(const Model& model, const SigmaPoint& p, const Subgroup& base_w_theta) {
  const Classification verdict = classify(model, p, base_w_theta, false);
  if (verdict.verdict != Verdict::Bad) throw PreconditionError("witness_for_bad: point is classified Good");
  const KnappSteinData before = knapp_stein(model, p, base_w_theta);

  struct Candidate {
    std::string proof_case;
    const OrbitInfo* orbit;
    bool whole_orbit;
  };
  std::vector<Candidate> candidates;
  for (const char* label : {"1a", "1b", "1c", "2a", "2b"}) {
    const std::string name(label);
    for (const auto& [orbit, rel] : verdict.per_orbit) {
      if (orbit.type != OrbitType::PureI || !rel.weakly) continue;
      const BlockState& base = p.blocks[orbit.base];
      if (!model.is_self_dual(base)) continue;
      const auto [p0, p1] = model.self_dual_parameters(base.cls);
      const bool own = model.flag_at(base.cls, base.t);
      const bool other = model.flag_at(base.cls, base.t == p0 ? p1 : p0);
      const bool singleton = orbit.members.size() == 1;
      const bool applies = (name == "1a" && !singleton && own && !other) ||
                           (name == "1b" && !singleton && own && other) ||
                           (name == "1c" && !singleton && !own && other) ||
                           (name == "2a" && singleton && own && !other) ||
                           (name == "2b" && singleton && !own && other);
      if (applies) candidates.push_back({name, &orbit, name == "1a"});
    }
  }
  for (const auto& cand : candidates) {
    const BlockState& base = p.blocks[cand.orbit->base];
    const auto [p0, p1] = model.self_dual_parameters(base.cls);
    const Rational nu = reduce_mod((base.t == p0 ? p1 : p0) - base.t, 1);
    Witness w;
    w.chi = zero_twist(model.rank());
    if (cand.whole_orbit) {
      for (std::size_t i : cand.orbit->members) w.chi.angles[i] = nu;
    } else {
      w.chi.angles[cand.orbit->members.front()] = nu;
    }
    const KnappSteinData after = knapp_stein(model, model.twist_apply(p, w.chi), base_w_theta);
    w.proof_case = cand.proof_case;
    w.orbit_base = cand.orbit->base;
    w.r_before = before.r_group.order();
    w.r_after = after.r_group.order();
    w.wprime_before = before.w_prime.order();
    w.wprime_after = after.w_prime.order();
    if (w.validated()) return w;
  }
  throw ConsistencyError("witness_for_bad: no proof case produced a growing R- or W'-group");
}

inline Witness witness_for_bad(const Model& model, const SigmaPoint& p) {
  return witness_for_bad(model, p, w_theta(model, p));
}

// ------------------------------------------------------------------ grids

inline std::int64_t default_resolution(const Model& model) {
  std::int64_t L = 2;
  for (const auto& b : model.base_point().blocks) L = lcm_of(L, 2 * static_cast<std::int64_t>(model.torsion(b.cls)));
  return L;
}

// Visits every twist in (1/L)Z^r, one representative per point of the orbit
// (angles k/L with 0 ≤ k < L/m_i), in lexicographic order.
inline void for_each_grid_twist(const Model& model, std::int64_t L, const std::function<void(const Twist&)>& visit) {
  const std::size_t r = model.rank();
  std::vector<std::int64_t> limit(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t m = model.torsion(model.base_point().blocks[i].cls);
    if (L % m != 0) throw DomainError("grid resolution must be a multiple of every torsion order");
    limit[i] = L / m;
  }
  std::vector<std::int64_t> k(r, 0);
  Twist chi = zero_twist(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chi.angles[i] = Rational(k[i], L);
    visit(chi);
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++k[pos] < limit[pos]) break;
      k[pos] = 0;
      if (pos == 0) return;
    }
    if (r == 0) return;
  }
}

struct InclusionViolation {
  Twist chi;
  bool wprime_contained = true;
  bool r_contained = true;
};

struct InclusionReport {
  std::int64_t resolution = 0;
  std::size_t points = 0;
  std::vector<InclusionViolation> violations;
};

inline InclusionReport verify_inclusions(const Model& model, const SigmaPoint& p, std::int64_t L,
                                         const Subgroup& base_w_theta) {
  InclusionReport out;
  out.resolution = L;
  const KnappSteinData at_p = knapp_stein(model, p, base_w_theta);
  for_each_grid_twist(model, L, [&](const Twist& chi) {
    ++out.points;
    const SigmaPoint tau = model.twist_apply(p, chi);
    const Subgroup roots_group = w_prime(model, relevant_roots(model, tau));
    const Subgroup rg = r_group(model, tau);
    InclusionViolation v{chi, roots_group.is_subset_of(at_p.w_prime), rg.is_subset_of(at_p.r_group)};
    if (!v.wprime_contained || !v.r_contained) out.violations.push_back(std::move(v));
  });
  return out;
}

// Grid twists of p that are again W_Θ-fixed and classify as Good.
inline std::vector<Twist> good_grid_twists(const Model& model, const SigmaPoint& p, std::int64_t L,
                                           const Subgroup& base_w_theta) {
  std::vector<Twist> out;
  for_each_grid_twist(model, L, [&](const Twist& chi) {
    const SigmaPoint tau = model.twist_apply(p, chi);
    if (!is_fixed(model, tau, base_w_theta)) return;
    if (classify(model, tau, base_w_theta, false).verdict == Verdict::Good) out.push_back(chi);
  });
  return out;
}

// ------------------------------------------------- even orthogonal split

// Keeps only the blocks of the given parity; everything else is unchanged.
inline Scenario restrict_to_parity(const Scenario& raw, bool odd) {
  Scenario s = normalize_scenario(raw);
  Scenario out = s;
  out.levi.block_sizes.clear();
  out.blocks.clear();
  out.n = s.levi.q;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if ((s.levi.block_sizes[i] % 2 == 1) != odd) continue;
    out.levi.block_sizes.push_back(s.levi.block_sizes[i]);
    out.blocks.push_back(s.blocks[i]);
    out.n += s.levi.block_sizes[i];
  }
  return out;
}

struct FactorizationReport {
  KnappSteinData full;
  KnappSteinData joined;  // r_group and w_prime carry joined generators
  bool stabilizers_equal = false;
  bool roots_equal = false;
  bool wprime_equal = false;
  bool rgroup_equal = false;
  bool equal() const { return stabilizers_equal && roots_equal && wprime_equal && rgroup_equal; }
};

// Compares the Knapp–Stein data of σ⊗χ with the slot-disjoint join of the
// odd-block and even-block computations.
inline FactorizationReport so_even_factorization(const Scenario& raw, const Twist& chi) {
  const Model full = Model::build(raw);
  if (!is_even_orthogonal(full.kind())) throw DomainError("so_even_factorization: not an even orthogonal scenario");
  std::vector<std::size_t> odd_slots;
  std::vector<std::size_t> even_slots;
  for (std::size_t i = 0; i < full.rank(); ++i) (full.block_size(i) % 2 ? odd_slots : even_slots).push_back(i);

  const auto part = [&](bool odd, const std::vector<std::size_t>& slots) {
    const Model sub = Model::build(restrict_to_parity(raw, odd));
    Twist sub_chi = zero_twist(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) sub_chi.angles[k] = chi.angles[slots[k]];
    return knapp_stein(sub, sub.twist_apply(sub.base_point(), sub_chi), w_theta(sub));
  };
  const KnappSteinData odd = part(true, odd_slots);
  const KnappSteinData even = part(false, even_slots);

  FactorizationReport out;
  out.full = knapp_stein(full, full.twist_apply(full.base_point(), chi), w_theta(full));
  const std::size_t r = full.rank();
  out.joined.w_stab = join(odd.w_stab, odd_slots, even.w_stab, even_slots, r);
  out.joined.w_prime = join(odd.w_prime, odd_slots, even.w_prime, even_slots, r);
  out.joined.r_group = join(odd.r_group, odd_slots, even.r_group, even_slots, r);
  const auto lift = [](RootLabel root, const std::vector<std::size_t>& slots) {
    root.i = slots[root.i];
    root.j = slots[root.j];
    return root;
  };
  for (const auto& root : odd.relevant_roots) out.joined.relevant_roots.push_back(lift(root, odd_slots));
  for (const auto& root : even.relevant_roots) out.joined.relevant_roots.push_back(lift(root, even_slots));
  std::sort(out.joined.relevant_roots.begin(), out.joined.relevant_roots.end());
  out.joined.decomposition_ok = odd.decomposition_ok && even.decomposition_ok;

  out.stabilizers_equal = out.full.w_stab == out.joined.w_stab;
  out.roots_equal = out.full.relevant_roots == out.joined.relevant_roots;
  out.wprime_equal = out.full.w_prime == out.joined.w_prime;
  out.rgroup_equal = out.full.r_group == out.joined.r_group &&
                     out.full.r_group.generator_words() == out.joined.r_group.generator_words();
  return out;
}

}  // namespace tempdual
