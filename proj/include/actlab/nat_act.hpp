#pragma once

#include <string>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/classes.hpp"
#include "actlab/monoid.hpp"
#include "actlab/quotients.hpp"

namespace actlab {

// A finite act over the naturals under addition, represented by the action
// of the generator alone; exponent n acts as the n-fold iterate and 0 acts
// trivially. Carriers are capped at 8: the doubled-carrier exponent window
// then dominates the preperiod plus period of the iteration, so every
// condition quantified over all naturals is certified by a finite scan.
struct NatAct {
  int size = 0;
  std::vector<Idx> step;

  static NatAct make(std::vector<Idx> step);

  Idx apply(Idx x, int exponent) const;
};

// All step functions on the given carrier, optionally one lex-least
// representative per relabelling class.
std::vector<NatAct> enumerate_nat_acts(int size, bool up_to_iso);

// The intersection of the forward images of the whole carrier: the largest
// subset on which the step restricts to a bijection. restriction holds that
// bijection in member indices.
struct EventualImage {
  std::vector<Idx> members;
  std::vector<Idx> restriction;
};

EventualImage eventual_image(const NatAct& x);

// Membership in the torsion free, weakly torsion free or divisible class.
// The verdict is computed from the step directly (injectivity for the
// torsion conditions, surjectivity for divisibility) and audited against a
// definitional scan over exponents up to twice the carrier size. Other
// labels are rejected.
ClassVerdict nat_class_check(const NatAct& x, ClassLabel label);

// All maps commuting with the steps, in lexicographic order.
std::vector<std::vector<Idx>> nat_homs(const NatAct& source,
                                       const NatAct& target);

// One representative per isomorphism class of acts with bijective step and
// size at most the bound: the disjoint cycle shapes.
std::vector<NatAct> nat_divisible_family(int size_bound);

// Certification that the eventual image inclusion is a cover with the
// unique mapping property relative to the divisible family within the
// bound. All three verdicts are computed, never assumed.
struct NatCoverCertificate {
  NatAct domain;
  std::vector<Idx> inclusion;
  int family_size = 0;
  int factorizations = 0;
  bool precover = false;
  bool cover = false;
  bool ump = false;
  std::string detail;
};

NatCoverCertificate nat_divisible_cover(const NatAct& x, int family_bound = 4);

// The weak torsion relation: pairs merged by some iterate of the step,
// with the congruence axioms checked over the certified window.
WeakTorsionRelation nat_weak_torsion(const NatAct& x);

// The act of quotients of a natural act: its carrier is the eventual
// image, the generator acts by the restricted step and acquires an
// inverse. theta sends a carrier point to the class its history collapses
// to; it is injective exactly when the step is. The normal form is audited
// against a windowed scan of the defining relation.
struct NatQuotientAct {
  NatAct act;
  std::vector<Idx> inverse_step;
  std::vector<Idx> members;  // eventual image members in the original act
  std::vector<Idx> theta;    // original carrier -> act carrier
  bool theta_mono = false;
};

NatQuotientAct nat_act_of_quotients(const NatAct& x);

// A bounded window onto the monoid of quotients of the naturals: classes
// of numerator-denominator pairs up to the window are in bijection with
// differences, and every class is invertible.
struct NatQuotientWindow {
  int window = 0;
  int classes = 0;
  bool difference_normal_form = false;
  bool is_group = false;
};

NatQuotientWindow nat_quotient_window(int window);

// Inverse of theta for an act with bijective step, as a carrier mapping
// from the act of quotients back to the original act. Throws
// NotWeaklyTorsionFree when the step merges two points.
std::vector<Idx> nat_splitting_map(const NatAct& x);

// Finite-table representation: the monoid of distinct step iterates under
// truncated exponent addition, acting on the original carrier.
struct NatAdapter {
  MonoidPtr monoid;
  ActPtr act;
  int threshold = 0;
  int period = 1;
};

NatAdapter to_finite_act(const NatAct& x);

// Consistency between an act and its finite-table representation. The
// table must reproduce every iterate, and each exponent's injectivity and
// surjectivity must match a fresh iteration. Class verdicts over the
// finite table are comparable to the direct ones only when no truncation
// occurs (threshold zero): truncated exponent monoids have no cancellative
// element besides the identity, which empties the torsion conditions of
// content, so for positive thresholds the check instead confirms that
// degeneration.
struct AdapterCoherence {
  bool ok = false;
  bool actions_agree = false;
  bool per_exponent_agree = false;
  bool class_verdicts_comparable = false;
  bool class_verdicts_agree = false;
  bool truncation_degenerate = false;
  std::string detail;
};

AdapterCoherence adapter_coherence(const NatAct& x);

}  // namespace actlab
