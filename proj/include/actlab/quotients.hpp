#pragma once

#include <string>
#include <utility>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/monoid.hpp"

namespace actlab {

// The weak torsion relation on an act: pairs merged by some cancellative
// monoid element, stored as ordered pairs in lexicographic order. The
// congruence axioms are checked directly rather than assumed; over a right
// Ore monoid the check must come back positive.
struct WeakTorsionRelation {
  std::vector<std::pair<Idx, Idx>> pairs;
  bool is_congruence = false;
  std::string detail;

  bool related(Idx x, Idx y) const;
  bool is_identity() const;
};

WeakTorsionRelation weak_torsion_relation(const ActPtr& x);

// The monoid of right quotients by the cancellative submonoid C: classes
// of pairs (s, c) with c in C, identified when common right multiples
// align. Requires the right Ore condition; the construction audits
// well-definedness, the unit group and the embedding exhaustively and
// throws InvalidArgument if any audit fails.
struct QuotientMonoid {
  MonoidPtr base;
  MonoidPtr quotient;
  std::vector<Idx> cancellative;          // members of C, sorted
  std::vector<Idx> pair_class;            // (s, c) -> class, c indexed in C
  std::vector<std::pair<Idx, Idx>> reps;  // lex-least (s, c) per class
  std::vector<Idx> iota;                  // s -> class of (s, 1)
  std::vector<Idx> units;                 // classes of (c, d), sorted

  Idx class_of(Idx s, Idx c) const;
};

QuotientMonoid quotient_monoid(const MonoidPtr& m);

// The act of quotients: classes of pairs (x, c), acted on by the quotient
// monoid and, through the embedding, by the base monoid. theta sends x to
// the class of (x, 1); it is injective exactly when the act is weakly
// torsion free.
struct QuotientAct {
  ActPtr base;
  QuotientMonoid quotients;
  ActPtr over_quotient;
  ActPtr over_base;
  std::vector<Idx> pair_class;
  std::vector<std::pair<Idx, Idx>> reps;
  ActMap theta;
  bool theta_mono = false;

  Idx class_of(Idx x, Idx c) const;
};

QuotientAct act_of_quotients(const ActPtr& x);
QuotientAct act_of_quotients(const ActPtr& x, const QuotientMonoid& q);

// The inverse to theta on a weakly torsion free divisible act: sends the
// class of (x, c) to the unique y with y*c = x, and is audited to be an
// isomorphism with splitting_map ∘ theta the identity. Throws
// NotWeaklyTorsionFree or NotDivisible with a witness otherwise.
ActMap splitting_map(const QuotientAct& qx);

// Instance-level verification of the quotient theory over one monoid:
// cancellative elements forming a group coincides with the base being
// isomorphic to its quotient monoid; every act within bounds is recovered
// by its act of quotients; theta injectivity tracks weak torsion freeness;
// the quotient is a group exactly when the base is cancellative;
// indecomposability transfers both ways. Envelope-dependent checks run
// only for acts whose injective envelope is found within envelope_cap and
// are reported as skipped otherwise.
struct QuotientTheoryReport {
  bool ok = true;
  bool cancellative_form_group = false;
  bool base_isomorphic_to_quotient = false;
  bool quotient_is_group = false;
  bool base_cancellative = false;
  int acts_checked = 0;
  int max_indecomposable_size = 0;
  std::vector<std::string> lines;
  std::vector<std::string> skipped;
};

QuotientTheoryReport quotient_theory_check(const MonoidPtr& m, int act_size_bound,
                         int envelope_cap = 4);

}  // namespace actlab
