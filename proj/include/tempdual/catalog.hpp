#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tempdual/orbit_model.hpp"

// Reference scenarios used by the self-check, the tests and the examples.
namespace tempdual::catalog {

inline InertialClass self_dual_class(std::string id, int size, int torsion, Rational delta, bool flag_low,
                                     bool flag_high) {
  const auto [p0, p1] = self_dual_parameters(delta, torsion);
  return {id, size, torsion, id, delta, {{p0, flag_low}, {p1, flag_high}}};
}

inline std::pair<InertialClass, InertialClass> dual_pair(std::string id, std::string dual_id, int size, int torsion,
                                                         Rational delta = Rational(0)) {
  return {{id, size, torsion, dual_id, delta, {}}, {dual_id, size, torsion, id, delta, {}}};
}

// Unramified principal series of Sp(4): both blocks trivial, C only at 1/2.
inline Scenario iwahori_sp4() {
  Scenario s;
  s.kind = GroupKind::Sp;
  s.n = 2;
  s.levi = {{1, 1}, 0};
  s.classes = {self_dual_class("unramified", 1, 1, Rational(0), false, true)};
  s.blocks = {{"unramified", Rational(0)}, {"unramified", Rational(0)}};
  return s;
}

// Sp(8): two inequivalent ramified quadratic characters and a pair of equal
// non-self-dual characters.
inline Scenario intro_sp8() {
  Scenario s;
  s.kind = GroupKind::Sp;
  s.n = 4;
  s.levi = {{1, 1, 1, 1}, 0};
  auto [cubic, cubic_inv] = dual_pair("cubic", "cubic_inv", 1, 1);
  s.classes = {self_dual_class("quadratic_a", 1, 1, Rational(0), true, true),
               self_dual_class("quadratic_b", 1, 1, Rational(0), true, true), cubic, cubic_inv};
  s.blocks = {{"quadratic_a", Rational(0)},
              {"quadratic_b", Rational(0)},
              {"cubic", Rational(0)},
              {"cubic", Rational(0)}};
  return s;
}

// A single GL(1) block whose class is super-relevant.
inline Scenario super_singleton() {
  Scenario s;
  s.kind = GroupKind::Sp;
  s.n = 1;
  s.levi = {{1}, 0};
  s.classes = {self_dual_class("quadratic", 1, 1, Rational(0), true, true)};
  s.blocks = {{"quadratic", Rational(0)}};
  return s;
}

inline Scenario pureii_pair() {
  Scenario s;
  s.kind = GroupKind::Sp;
  s.n = 2;
  s.levi = {{1, 1}, 0};
  auto [c, c_inv] = dual_pair("cubic", "cubic_inv", 1, 1);
  s.classes = {c, c_inv};
  s.blocks = {{"cubic", Rational(0)}, {"cubic", Rational(1, 3)}};
  return s;
}

inline Scenario mixed_pair() {
  Scenario s = pureii_pair();
  s.blocks = {{"cubic", Rational(1, 3)}, {"cubic_inv", Rational(0)}};
  return s;
}

// Two equivalent super-relevant blocks, which makes the point Bad.
inline Scenario equivalent_super_pair() {
  Scenario s = iwahori_sp4();
  s.classes = {self_dual_class("quadratic", 1, 1, Rational(0), true, true)};
  s.blocks = {{"quadratic", Rational(0)}, {"quadratic", Rational(0)}};
  return s;
}

// SO(10) split, q = 0: two odd GL(1) blocks and one GL(2) block.
inline Scenario so10_mixed_parity() {
  Scenario s;
  s.kind = GroupKind::SO_even_split;
  s.n = 5;
  s.levi = {{1, 2, 1, 1}, 0};
  s.classes = {self_dual_class("quadratic_a", 1, 1, Rational(0), true, true),
               self_dual_class("quadratic_b", 1, 1, Rational(0), true, true),
               self_dual_class("steinberg", 2, 1, Rational(0), false, true)};
  s.blocks = {{"quadratic_a", Rational(0)},
              {"steinberg", Rational(1, 4)},
              {"quadratic_b", Rational(1, 2)},
              {"quadratic_a", Rational(1, 3)}};
  return s;
}

}  // namespace tempdual::catalog
