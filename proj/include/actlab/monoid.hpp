#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "actlab/error.hpp"

namespace actlab {

using Idx = int;

// A finite monoid given by its full multiplication table.  Instances are
// immutable; the factory checks closure, associativity and the identity laws
// and throws on the first violation.  Elements are plain indices 0..order-1.
class FiniteMonoid {
 public:
  static std::shared_ptr<const FiniteMonoid> make(
      const std::vector<std::vector<Idx>>& table, Idx identity);

  int order() const noexcept { return order_; }
  Idx identity() const noexcept { return identity_; }
  Idx mul(Idx s, Idx t) const { return table_[static_cast<size_t>(s * order_ + t)]; }
  const std::vector<Idx>& flat_table() const noexcept { return table_; }

 private:
  FiniteMonoid(int order, Idx identity, std::vector<Idx> table)
      : order_(order), identity_(identity), table_(std::move(table)) {}

  int order_;
  Idx identity_;
  std::vector<Idx> table_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

// Structural equality; acts over structurally equal monoids are compatible.
bool same_monoid(const FiniteMonoid& a, const FiniteMonoid& b);

enum class ElementKind {
  LeftCancellative,
  RightCancellative,
  Cancellative,
  LeftZero,
  Unit,
  Idempotent,
  Regular,
};

enum class MonoidKind {
  Group,
  LeftCancellative,
  RightCancellative,
  Cancellative,
  Commutative,
  LeftReversible,
  RightOre,  // every s and cancellative c admit s*d = c*t with d cancellative
  Divisible,
  Regular,
  HasLeftZero,
};

bool element_property(const FiniteMonoid& m, Idx e, ElementKind kind);

// Outcome of a monoid-level predicate.  When the predicate fails,
// counterexample holds the offending tuple; when it holds and the definition
// has existential content, witnesses lists one certifying tuple per
// universally quantified instance.
struct PropertyVerdict {
  bool holds = false;
  std::vector<Idx> counterexample;
  std::vector<std::array<Idx, 4>> witnesses;
};

PropertyVerdict monoid_property(const FiniteMonoid& m, MonoidKind kind);

// A subset of a monoid's elements, tagged with whether it is closed under
// multiplication and contains the identity.
struct ElementSubset {
  MonoidPtr monoid;
  std::vector<Idx> members;  // sorted
  bool is_submonoid = false;

  bool contains(Idx e) const;
};

// The set of two-sided cancellative elements; always a submonoid.
ElementSubset cancellative_submonoid(const MonoidPtr& m);

// All monoids of the given order in a deterministic order: every associative
// table with a two-sided identity when up_to_iso is false, otherwise one
// lexicographically least representative per isomorphism class with the
// identity relabelled to index 0.  Throws BoundExceeded above the cap.
std::vector<MonoidPtr> enumerate_monoids(int order, bool up_to_iso,
                                         int cap = 5);

// A bijection f with f(s*t) = f(s)*f(t) and f(1) = 1, or nullopt.
std::optional<std::vector<Idx>> find_monoid_isomorphism(const FiniteMonoid& a,
                                                        const FiniteMonoid& b);

}  // namespace actlab
