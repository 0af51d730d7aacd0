#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempdual/errors.hpp"

namespace tempdual::finrep {

// Gaussian integer a + b·i.
struct Gauss {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend Gauss operator+(Gauss a, Gauss b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(Gauss a, Gauss b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator*(Gauss a, Gauss b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend bool operator==(Gauss, Gauss) = default;
  Gauss conj() const { return {re, -im}; }
};

inline std::string to_string(Gauss z) {
  if (z.im == 0) return std::to_string(z.re);
  if (z.re == 0) return std::to_string(z.im) + "i";
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + std::to_string(z.im) + "i";
}

using CharacterVector = std::vector<Gauss>;  // indexed by group element
using TwoCocycle = std::vector<std::vector<int>>;  // values ±1, eta[a][b]

// A finite group given by its multiplication table on {0, ..., n-1}.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table) {
    FiniteGroup g;
    g.table_ = std::move(table);
    g.check_axioms();
    return g;
  }

  // (Z/2)^d with elements encoded as bit masks.
  static FiniteGroup elementary_abelian(std::size_t d) {
    if (d > 10) throw DomainError("elementary_abelian: rank too large");
    const std::size_t n = std::size_t{1} << d;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table[a][b] = a ^ b;
    }
    return from_table(std::move(table));
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  bool is_central(std::size_t z) const {
    for (std::size_t g = 0; g < order(); ++g) {
      if (mul(z, g) != mul(g, z)) return false;
    }
    return true;
  }

  bool is_abelian() const {
    for (std::size_t g = 0; g < order(); ++g) {
      if (!is_central(g)) return false;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> conjugacy_classes() const {
    std::vector<bool> seen(order(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < order(); ++x) {
      if (seen[x]) continue;
      std::vector<std::size_t> cls;
      for (std::size_t g = 0; g < order(); ++g) {
        const std::size_t y = mul(mul(g, x), inv(g));
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

 private:
  void check_axioms() {
    const std::size_t n = table_.size();
    if (n == 0) throw InputError("group table is empty");
    for (const auto& row : table_) {
      if (row.size() != n) throw InputError("group table is not square");
      for (std::size_t v : row) {
        if (v >= n) throw InputError("group table entry out of range");
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      found = true;
      for (std::size_t a = 0; a < n && found; ++a) found = table_[e][a] == a && table_[a][e] == a;
      if (found) identity_ = e;
    }
    if (!found) throw InputError("group table has no identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      }
      if (inverse_[a] == n) throw InputError("group table element without inverse");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InputError("group table is not associative");
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

inline void check_cocycle(const FiniteGroup& g, const TwoCocycle& eta) {
  const std::size_t n = g.order();
  if (eta.size() != n) throw InputError("cocycle table has the wrong size");
  for (const auto& row : eta) {
    if (row.size() != n) throw InputError("cocycle table has the wrong size");
    for (int v : row) {
      if (v != 1 && v != -1) throw InputError("cocycle values must be ±1");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (eta[a][b] * eta[g.mul(a, b)][c] != eta[b][c] * eta[a][g.mul(b, c)]) {
          throw InputError("table fails the 2-cocycle identity");
        }
      }
    }
  }
}

struct CoboundaryResult {
  std::optional<std::vector<int>> splitting;  // ξ with η(a,b) = ξ(ab)/(ξ(a)ξ(b))
  std::size_t candidates_examined = 0;
};

// Exhaustive search over ±1-valued ξ; ξ(e) is forced to η(e,e).
inline CoboundaryResult is_coboundary(const FiniteGroup& g, const TwoCocycle& eta) {
  check_cocycle(g, eta);
  const std::size_t n = g.order();
  if (n > 20) throw DomainError("is_coboundary: exhaustive search limited to groups of order ≤ 20");
  CoboundaryResult out;
  std::vector<std::size_t> free_slots;
  for (std::size_t a = 0; a < n; ++a) {
    if (a != g.identity()) free_slots.push_back(a);
  }
  std::vector<int> xi(n, 1);
  xi[g.identity()] = eta[g.identity()][g.identity()];
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_slots.size()); ++mask) {
    ++out.candidates_examined;
    for (std::size_t k = 0; k < free_slots.size(); ++k) xi[free_slots[k]] = ((mask >> k) & 1) ? -1 : 1;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) ok = eta[a][b] == xi[g.mul(a, b)] * xi[a] * xi[b];
    }
    if (ok) {
      out.splitting = xi;
      return out;
    }
  }
  return out;
}

// {±1} × G with (ε1,g1)(ε2,g2) = (ε1ε2η(g1,g2), g1g2). Element (ε,g) has
// index g for ε = 1 and g + |G| for ε = -1.
struct CentralExtension {
  FiniteGroup group;
  std::vector<std::size_t> projection;
  std::vector<std::size_t> center;  // {(1,e), (-1,e)}
  std::size_t minus_one = 0;
  std::vector<int> splitting;       // ξ(ε,g) = ε splits the pulled-back cocycle
};

inline CentralExtension central_extension(const FiniteGroup& g, const TwoCocycle& eta) {
  check_cocycle(g, eta);
  const std::size_t n = g.order();
  const auto index = [n](int eps, std::size_t x) { return eps > 0 ? x : x + n; };
  std::vector<std::vector<std::size_t>> table(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = 0; b < 2 * n; ++b) {
      const int ea = a < n ? 1 : -1;
      const int eb = b < n ? 1 : -1;
      const std::size_t ga = a % n;
      const std::size_t gb = b % n;
      table[a][b] = index(ea * eb * eta[ga][gb], g.mul(ga, gb));
    }
  }
  CentralExtension out{FiniteGroup::from_table(std::move(table)), {}, {}, 0, {}};
  for (std::size_t a = 0; a < 2 * n; ++a) {
    out.projection.push_back(a % n);
    out.splitting.push_back(a < n ? 1 : -1);
  }
  // The identity of the extension is (η(e,e), e).
  const std::size_t e = out.group.identity();
  out.minus_one = e < n ? e + n : e - n;
  out.center = {std::min(e, out.minus_one), std::max(e, out.minus_one)};
  if (!out.group.is_central(out.minus_one)) throw ConsistencyError("central_extension: kernel is not central");
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = 0; b < 2 * n; ++b) {
      const int pulled = eta[out.projection[a]][out.projection[b]];
      if (pulled != out.splitting[out.group.mul(a, b)] * out.splitting[a] * out.splitting[b]) {
        throw ConsistencyError("central_extension: pulled-back cocycle does not split");
      }
    }
  }
  return out;
}

inline Gauss inner_sum(const CharacterVector& a, const CharacterVector& b) {
  Gauss total;
  for (std::size_t k = 0; k < a.size(); ++k) total = total + a[k] * b[k].conj();
  return total;
}

// (1/|G|) Σ χ(g) conj(ψ(g)); must be a nonnegative integer.
inline std::size_t multiplicity(const CharacterVector& rep, const CharacterVector& irr, const FiniteGroup& g) {
  if (rep.size() != g.order() || irr.size() != g.order()) throw InputError("character length differs from group order");
  const Gauss s = inner_sum(rep, irr);
  const auto n = static_cast<std::int64_t>(g.order());
  if (s.im != 0 || s.re % n != 0 || s.re < 0) throw InputError("multiplicity is not a nonnegative integer");
  return static_cast<std::size_t>(s.re / n);
}

// Rows must be class functions and orthonormal.
inline void validate_irreducibles(const std::vector<CharacterVector>& table, const FiniteGroup& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  for (const auto& chi : table) {
    if (chi.size() != g.order()) throw InputError("character length differs from group order");
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t h = 0; h < g.order(); ++h) {
        if (!(chi[g.mul(g.mul(h, x), g.inv(h))] == chi[x])) throw InputError("character is not a class function");
      }
    }
  }
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      const Gauss s = inner_sum(table[a], table[b]);
      if (!(s == Gauss{a == b ? n : 0, 0})) throw InputError("character table fails row orthogonality");
    }
  }
}

// Ind_Z^G(ζ): |G|/|Z|·ζ on Z, zero elsewhere. `zeta[k]` is the value at z[k].
inline CharacterVector induced_central_character(const FiniteGroup& g, const std::vector<std::size_t>& z,
                                                 const CharacterVector& zeta) {
  if (z.size() != zeta.size() || z.empty() || g.order() % z.size() != 0) {
    throw InputError("induced_central_character: malformed central subgroup data");
  }
  const auto index = static_cast<std::int64_t>(g.order() / z.size());
  CharacterVector out(g.order());
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!g.is_central(z[k])) throw InputError("induced_central_character: element is not central");
    out[z[k]] = Gauss{index, 0} * zeta[k];
  }
  return out;
}

inline std::vector<bool> support(const CharacterVector& c, const std::vector<CharacterVector>& irr,
                                 const FiniteGroup& g) {
  std::vector<bool> out;
  for (const auto& chi : irr) out.push_back(multiplicity(c, chi, g) > 0);
  return out;
}

inline bool quasi_equivalent(const CharacterVector& c1, const CharacterVector& c2,
                             const std::vector<CharacterVector>& irr, const FiniteGroup& g) {
  validate_irreducibles(irr, g);
  return support(c1, irr, g) == support(c2, irr, g);
}

// Irreducible characters of the ±1 extension of (Z/2)^d by a normalized
// cocycle: the 2^d lifts of linear characters of the quotient, then the
// genuine ones, which vanish off the center and have degree 2^k where 2k
// is the rank of the commutator form.
struct ExtensionCharacters {
  CentralExtension extension;
  std::vector<CharacterVector> irreducibles;
  std::vector<bool> genuine;  // central character -1 on the kernel
  std::size_t form_rank = 0;

  std::size_t genuine_count() const { return static_cast<std::size_t>(std::count(genuine.begin(), genuine.end(), true)); }
};

inline ExtensionCharacters elementary_extension_characters(std::size_t d, const TwoCocycle& eta) {
  const FiniteGroup base = FiniteGroup::elementary_abelian(d);
  const std::size_t n = base.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (eta.size() == n && eta[a].size() == n && (eta[0][a] != 1 || eta[a][0] != 1)) {
      throw InputError("built-in character table needs a normalized cocycle");
    }
  }
  ExtensionCharacters out{central_extension(base, eta), {}, {}, 0};
  const FiniteGroup& ext = out.extension.group;

  const auto form = [&](std::size_t x, std::size_t y) { return eta[x][y] * eta[y][x]; };
  std::vector<std::size_t> radical;
  for (std::size_t x = 0; x < n; ++x) {
    bool in_radical = true;
    for (std::size_t y = 0; y < n && in_radical; ++y) in_radical = form(x, y) == 1;
    if (in_radical) radical.push_back(x);
  }
  const std::size_t quotient = n / radical.size();
  out.form_rank = static_cast<std::size_t>(std::countr_zero(quotient));
  const auto degree = static_cast<std::int64_t>(std::size_t{1} << (out.form_rank / 2));

  for (std::size_t a = 0; a < n; ++a) {
    CharacterVector chi(ext.order());
    for (std::size_t x = 0; x < ext.order(); ++x) {
      chi[x] = {std::popcount(a & out.extension.projection[x]) % 2 ? -1 : 1, 0};
    }
    out.irreducibles.push_back(std::move(chi));
    out.genuine.push_back(false);
  }

  // Genuine characters of the abelian preimage of the radical:
  // λ(ε,g) = ε·f(g) with f(g)f(h) = η(g,h)f(gh), f(e) = 1.
  std::vector<std::size_t> basis;
  std::vector<std::size_t> span{0};
  for (std::size_t x : radical) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    basis.push_back(x);
    const std::size_t before = span.size();
    for (std::size_t k = 0; k < before; ++k) span.push_back(span[k] ^ x);
  }
  std::vector<std::vector<Gauss>> functions{std::vector<Gauss>(n)};
  functions.front()[0] = {1, 0};
  std::vector<std::size_t> known{0};
  for (std::size_t b : basis) {
    const Gauss roots[2] = {eta[b][b] == 1 ? Gauss{1, 0} : Gauss{0, 1},
                            eta[b][b] == 1 ? Gauss{-1, 0} : Gauss{0, -1}};
    std::vector<std::vector<Gauss>> next;
    for (const auto& f : functions) {
      for (Gauss v : roots) {
        auto g = f;
        for (std::size_t x : known) g[x ^ b] = f[x] * v * Gauss{eta[x][b], 0};
        next.push_back(std::move(g));
      }
    }
    functions = std::move(next);
    const std::size_t before = known.size();
    for (std::size_t k = 0; k < before; ++k) known.push_back(known[k] ^ b);
  }
  for (const auto& f : functions) {
    for (std::size_t g : known) {
      for (std::size_t h : known) {
        if (!(f[g] * f[h] == Gauss{eta[g][h], 0} * f[g ^ h])) {
          throw ConsistencyError("genuine central character is not multiplicative");
        }
      }
    }
    CharacterVector chi(ext.order());
    for (std::size_t x = 0; x < ext.order(); ++x) {
      const std::size_t g = out.extension.projection[x];
      if (std::find(known.begin(), known.end(), g) == known.end()) continue;
      const std::int64_t eps = x < n ? 1 : -1;
      chi[x] = Gauss{degree * eps, 0} * f[g];
    }
    out.irreducibles.push_back(std::move(chi));
    out.genuine.push_back(true);
  }
  validate_irreducibles(out.irreducibles, ext);
  std::int64_t degree_sum = 0;
  for (const auto& chi : out.irreducibles) degree_sum += chi[ext.identity()].re * chi[ext.identity()].re;
  if (degree_sum != static_cast<std::int64_t>(ext.order())) {
    throw ConsistencyError("built-in character table is incomplete");
  }
  return out;
}

// η(x,y) = (-1)^{x^T B y} on (Z/2)^d with elements as bit masks.
inline TwoCocycle bilinear_cocycle(const std::vector<std::vector<int>>& form) {
  const std::size_t d = form.size();
  for (const auto& row : form) {
    if (row.size() != d) throw InputError("bilinear cocycle matrix must be square");
  }
  const std::size_t n = std::size_t{1} << d;
  TwoCocycle eta(n, std::vector<int>(n, 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int parity = 0;
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) parity ^= ((x >> a) & (y >> b) & 1) & (form[a][b] & 1);
      }
      eta[x][y] = parity ? -1 : 1;
    }
  }
  return eta;
}

}  // namespace tempdual::finrep
