#pragma once

#include <vector>

#include "actlab/act.hpp"
#include "actlab/monoid.hpp"
#include "actlab/nat_act.hpp"

namespace fixtures {

using actlab::ActPtr;
using actlab::FiniteAct;
using actlab::FiniteMonoid;
using actlab::Idx;
using actlab::MonoidPtr;

// The two-element group: 0 = identity, 1*1 = 0.
inline MonoidPtr z2() {
  return FiniteMonoid::make({{0, 1}, {1, 0}}, 0);
}

// The two-element semilattice: 0 = identity, 1 absorbing.
inline MonoidPtr sl2() {
  return FiniteMonoid::make({{0, 1}, {1, 1}}, 0);
}

// Identity plus two left zeros a = 1, b = 2; a*x = a and b*x = b.  The
// principal right ideals of a and b are disjoint.
inline MonoidPtr l3() {
  return FiniteMonoid::make({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
}

// Identity, a = 1, and the zero element 2, with a*a = 2.
inline MonoidPtr m3() {
  return FiniteMonoid::make({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
}

// The monoid acting on itself on the right.
inline ActPtr self_act(const MonoidPtr& m) {
  int n = m->order();
  std::vector<std::vector<Idx>> action(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < n; ++s) {
      action[static_cast<size_t>(x)].push_back(m->mul(x, s));
    }
  }
  return FiniteAct::make(m, action);
}

// The one-element act.
inline ActPtr theta(const MonoidPtr& m) {
  return FiniteAct::make(m, {std::vector<Idx>(static_cast<size_t>(m->order()), 0)});
}

// Over sl2: elements 0..size-2 plus a sink at size-1; x*identity = x and
// x*absorbing = sink.  Indecomposable with exactly one fixed point.
inline ActPtr sink_act_sl2(int size) {
  MonoidPtr m = sl2();
  std::vector<std::vector<Idx>> action(static_cast<size_t>(size));
  for (int x = 0; x < size; ++x) {
    action[static_cast<size_t>(x)] = {x, size - 1};
  }
  return FiniteAct::make(m, action);
}

// Natural act with a tail of length two feeding a three-cycle:
// 0 -> 1 -> 2 -> 3 -> 4 -> 2.
inline actlab::NatAct tail_cycle() {
  return actlab::NatAct::make({1, 2, 3, 4, 2});
}

}  // namespace fixtures
