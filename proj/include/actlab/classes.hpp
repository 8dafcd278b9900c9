#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actlab/act.hpp"

namespace actlab {

enum class ClassLabel {
  Free,
  Projective,
  TorsionFree,
  WeaklyTorsionFree,
  Divisible,
  Injective,
  WeaklyInjective,
  PrincipallyWeaklyInjective,
  Generator,
};

std::string to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(const std::string& name);

// Outcome of a membership test.  For the universally quantified classes the
// witness on failure is the offending tuple (layout documented per label at
// act_in_class); for the existence-style classes (free, projective,
// generator) a failure witness records the exhausted search so the verdict
// can be replayed, and a success witness records the certifying data.
struct ClassVerdict {
  bool member = false;
  std::vector<Idx> witness;
  std::string detail;
};

// Definitional membership test.  Witness layouts:
//   TorsionFree / WeaklyTorsionFree: {x, y, c} with x*c = y*c, x != y.
//   Divisible: {a, c} with no d solving d*c = a.
//   Injective: on a missing fixed point, one moving s per element; on a
//     failed extension, {cyclic index, subact index, hom index} into the
//     canonical enumerations.
//   WeaklyInjective: {ideal index, hom index}.
//   PrincipallyWeaklyInjective: {s, hom index}.
//   Free: basis element per component on success, least element of the
//     offending component on failure.
//   Projective: idempotent per component on success, least element of the
//     offending component on failure.
//   Generator: epi mapping on success, total hom count on failure.
ClassVerdict act_in_class(const ActPtr& x, ClassLabel label);

// Independent route to the principally-weakly-injective verdict: search for
// an actual extension of every map from a principal right ideal to the whole
// monoid act, instead of scanning for the acting element z.  Must agree with
// act_in_class(x, PrincipallyWeaklyInjective) on every input.
ClassVerdict pwi_by_extension(const ActPtr& x);

// Greatest action-closed subset in which every element is divisible by every
// left cancellative monoid element; empty fixpoint yields nullopt.
std::optional<SubactHandle> largest_divisible_subact(const ActPtr& x);

// True iff every nonidentity right congruence on the target relates two
// distinct image points, i.e. nothing outside the image can be collapsed
// without touching it.  Throws NotMono if the map is not injective and
// BoundExceeded when the target exceeds the congruence-enumeration cap.
bool essential_extension_check(const ActMap& inclusion, int cap = 8);

struct Envelope {
  ActPtr act;
  ActMap embedding;
};

// Smallest injective essential extension of size <= cap, found by exhaustive
// search over enumerated acts; nullopt means none within the cap, which is
// inconclusive rather than a nonexistence proof.  Throws InvalidArgument when
// cap < |x|.
std::optional<Envelope> injective_envelope_bounded(const ActPtr& x, int cap);

}  // namespace actlab
