#pragma once

#include <utility>
#include <vector>

#include "actlab/act.hpp"

namespace actlab {

// A right congruence on an act, stored as the canonical representative map:
// rep[x] is the least element of x's block.  Compatibility (x ~ y implies
// x*s ~ y*s) is guaranteed by every constructor.
struct RightCongruence {
  ActPtr act;
  std::vector<Idx> rep;

  bool related(Idx x, Idx y) const {
    return rep[static_cast<size_t>(x)] == rep[static_cast<size_t>(y)];
  }
  int block_count() const;
  std::vector<std::vector<Idx>> blocks() const;  // ordered by least member
  bool is_identity() const;
  bool is_universal() const;
};

bool operator==(const RightCongruence& a, const RightCongruence& b);

RightCongruence identity_congruence(const ActPtr& act);
RightCongruence universal_congruence(const ActPtr& act);

// Least right congruence containing the given pairs: union-find closure that
// re-queues (x*s, y*s) whenever two blocks merge.
RightCongruence generated_congruence(const ActPtr& act,
                                     const std::vector<std::pair<Idx, Idx>>& pairs);

// Wraps an arbitrary partition, rejecting it if it is not compatible with
// the action.  partition maps each element to any block label.
RightCongruence congruence_from_partition(const ActPtr& act,
                                          const std::vector<Idx>& partition);

struct CongruenceQuotient {
  ActPtr act;
  ActMap projection;
  std::vector<Idx> reps;  // block index -> least member of the block
};

// Carrier = blocks ordered by least member; action induced on representatives.
CongruenceQuotient quotient_act(const RightCongruence& rho);

// Fibre partition of a map; block labels are least preimages.
RightCongruence kernel(const ActMap& f);

// Every right congruence, finest first, then by representative vector.
// Throws BoundExceeded when the carrier exceeds the cap.
std::vector<RightCongruence> all_right_congruences(const ActPtr& act,
                                                   int cap = 8);

// a refines b: every block of a lies inside a block of b.
bool refines(const RightCongruence& a, const RightCongruence& b);

// Inclusion-minimal generating pair set obtained by greedy deletion from a
// spanning set, in deterministic order.
std::vector<std::pair<Idx, Idx>> minimal_generating_pairs(
    const RightCongruence& rho);

// Finiteness data for the congruence lattice of an act: in the finite case
// every chain and every generating set is finite, and this certificate
// exhibits the numbers.
struct NoetherianCertificate {
  int congruence_count = 0;
  int lattice_height = 0;           // longest chain, counted in nodes
  std::vector<Idx> act_generators;  // minimal generating set of the act
  bool all_finitely_generated = false;
};

NoetherianCertificate noetherian_certificate(const ActPtr& act, int cap = 8);

}  // namespace actlab
