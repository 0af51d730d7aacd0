#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tempdual/analyzer.hpp"
#include "tempdual/finrep.hpp"

namespace tempdual {

namespace detail {

// Sign pattern of a pure sign change, spec bit as the top coordinate.
inline std::uint32_t sign_vector(const SignedPerm& w) {
  if (!w.permutation_is_identity()) throw DomainError("expected a pure sign change");
  return w.sign_mask() | (static_cast<std::uint32_t>(w.spec()) << w.rank());
}

// Coordinates over GF(2) with respect to independent pure sign changes.
class SignBasis {
 public:
  explicit SignBasis(const std::vector<SignedPerm>& gens) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::uint32_t v = sign_vector(gens[k]);
      std::uint32_t tag = 1u << k;
      reduce(v, tag);
      if (v == 0) throw DomainError("R-group generators are not independent");
      rows_.push_back({v, tag});
    }
  }

  std::uint32_t coordinates(const SignedPerm& w) const {
    std::uint32_t v = sign_vector(w);
    std::uint32_t tag = 0;
    reduce(v, tag);
    if (v != 0) throw DomainError("element is outside the span of the basis");
    return tag;
  }

 private:
  struct Row {
    std::uint32_t vec;
    std::uint32_t tag;
  };
  void reduce(std::uint32_t& v, std::uint32_t& tag) const {
    for (const auto& row : rows_) {
      const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(row.vec));
      if (v & pivot) {
        v ^= row.vec;
        tag ^= row.tag;
      }
    }
  }
  std::vector<Row> rows_;
};

inline std::vector<std::uint64_t> element_keys(const Subgroup& g) {
  std::vector<std::uint64_t> keys;
  for (const auto& w : g.elements()) keys.push_back(w.key());
  return keys;
}

}  // namespace detail

// Number of irreducibles of the ±1 extension of R_τ with central character
// -1, for the bilinear cocycle given on R_σ; |R_τ| without a cocycle.
inline std::size_t constituent_count(const Subgroup& r_tau, const Subgroup& r_sigma,
                                     const std::optional<BilinearCocycle>& cocycle) {
  if (!cocycle) return r_tau.order();
  const auto& form = *cocycle;
  if (form.size() != r_sigma.generators().size()) {
    throw InputError("cocycle matrix size must equal the number of R-group generators");
  }
  const detail::SignBasis sigma_basis(r_sigma.generators());
  const auto& gens = r_tau.generators();
  const std::size_t d = gens.size();
  std::vector<std::uint32_t> coords;
  for (const auto& g : gens) coords.push_back(sigma_basis.coordinates(g));
  // Element x of (Z/2)^d maps to Σ x_k·coords[k] in R_σ coordinates.
  const auto in_sigma = [&](std::size_t x) {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if ((x >> k) & 1) c ^= coords[k];
    }
    return c;
  };
  const std::size_t n = std::size_t{1} << d;
  finrep::TwoCocycle eta(n, std::vector<int>(n, 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t cx = in_sigma(x);
      const std::uint32_t cy = in_sigma(y);
      int parity = 0;
      for (std::size_t a = 0; a < form.size(); ++a) {
        for (std::size_t b = 0; b < form.size(); ++b) parity ^= ((cx >> a) & (cy >> b) & 1) & (form[a][b] & 1);
      }
      eta[x][y] = parity ? -1 : 1;
    }
  }
  return finrep::elementary_extension_characters(d, eta).genuine_count();
}

// { ρ ∈ R_σ : ρ maps the W'_σ-orbit of `point` to itself }.
inline Subgroup coset_r_group(const Model& model, const KnappSteinData& at_fixed, const SigmaPoint& point) {
  std::unordered_set<SigmaPoint, SigmaPointHash> coset;
  for (const auto& w : at_fixed.w_prime.elements()) coset.insert(model.act(w, point));
  std::vector<SignedPerm> kept;
  for (const auto& rho : at_fixed.r_group.elements()) {
    if (coset.count(model.act(rho, point))) kept.push_back(rho);
  }
  return subgroup_from_elements(std::move(kept), model.rank());
}

struct CensusStratum {
  Subgroup r_group;
  std::size_t orbits = 0;
  std::size_t points = 0;
};

struct CensusTable {
  std::int64_t resolution = 0;
  std::size_t grid_points = 0;
  std::vector<CensusStratum> strata;                     // sorted by generator words
  std::map<std::size_t, std::size_t> constituent_histogram;  // count -> quotient points
  std::size_t total_spectrum_points = 0;

  std::size_t orbit_count() const {
    std::size_t total = 0;
    for (const auto& s : strata) total += s.orbits;
    return total;
  }
};

struct CensusPoint {
  SigmaPoint representative;
  Twist chi;
  std::size_t orbit_size = 0;
  std::size_t constituents = 0;
};

// Census of (O/W'_σ)//R_σ on the grid (1/L)Z^r. Refuses Bad points.
inline CensusTable census(const Model& model, const SigmaPoint& p, std::int64_t L, const Subgroup& base_w_theta,
                          std::vector<CensusPoint>* points_out = nullptr) {
  if (classify(model, p, base_w_theta, false).verdict != Verdict::Good) {
    throw PreconditionError("census refused: the fixed point is Bad, so no extended-quotient census applies");
  }
  if (L <= 0 || L % default_resolution(model) != 0) {
    throw DomainError("census resolution must be a positive multiple of lcm(2m_i)");
  }
  const KnappSteinData at_fixed = knapp_stein(model, p, base_w_theta);

  std::vector<std::pair<SigmaPoint, Twist>> grid;
  std::unordered_map<SigmaPoint, std::size_t, SigmaPointHash> where;
  for_each_grid_twist(model, L, [&](const Twist& chi) {
    SigmaPoint tau = model.twist_apply(p, chi);
    where.emplace(tau, grid.size());
    grid.emplace_back(std::move(tau), chi);
  });

  CensusTable table;
  table.resolution = L;
  table.grid_points = grid.size();
  std::map<std::vector<std::uint64_t>, std::size_t> stratum_index;
  std::vector<bool> seen(grid.size(), false);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (seen[k]) continue;
    const SigmaPoint& tau = grid[k].first;
    std::size_t orbit_size = 0;
    for (const auto& w : base_w_theta.elements()) {
      auto it = where.find(model.act(w, tau));
      if (it == where.end()) throw ConsistencyError("census: W_Θ moved a grid point off the grid");
      if (!seen[it->second]) {
        seen[it->second] = true;
        ++orbit_size;
      }
    }
    const KnappSteinData data = knapp_stein(model, tau, base_w_theta);
    const Subgroup coset = coset_r_group(model, at_fixed, tau);
    if (!(coset == data.r_group)) throw ConsistencyError("census: coset stabilizer differs from the direct R-group");
    const std::size_t count = constituent_count(data.r_group, at_fixed.r_group, model.cocycle());

    auto key = detail::element_keys(data.r_group);
    auto [it, inserted] = stratum_index.emplace(key, table.strata.size());
    if (inserted) table.strata.push_back({data.r_group, 0, 0});
    table.strata[it->second].orbits += 1;
    table.strata[it->second].points += orbit_size;
    table.constituent_histogram[count] += 1;
    table.total_spectrum_points += count;
    if (points_out) points_out->push_back({tau, grid[k].second, orbit_size, count});
  }
  std::sort(table.strata.begin(), table.strata.end(), [](const CensusStratum& a, const CensusStratum& b) {
    return a.r_group.generator_words() < b.r_group.generator_words();
  });
  return table;
}

}  // namespace tempdual
