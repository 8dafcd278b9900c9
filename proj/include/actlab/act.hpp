#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "actlab/monoid.hpp"

namespace actlab {

class FiniteAct;
using ActPtr = std::shared_ptr<const FiniteAct>;

// A finite right act: a carrier 0..size-1 with an action table satisfying
// x*1 = x and (x*s)*t = x*(s*t).  Immutable after the validating factory.
class FiniteAct {
 public:
  static ActPtr make(MonoidPtr monoid,
                     const std::vector<std::vector<Idx>>& action);

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  int size() const noexcept { return size_; }
  Idx act(Idx x, Idx s) const {
    return action_[static_cast<size_t>(x * monoid_->order() + s)];
  }
  const std::vector<Idx>& flat_action() const noexcept { return action_; }

 private:
  FiniteAct(MonoidPtr monoid, int size, std::vector<Idx> action)
      : monoid_(std::move(monoid)), size_(size), action_(std::move(action)) {}

  MonoidPtr monoid_;
  int size_;
  std::vector<Idx> action_;
};

// An equivariant map between two acts over the same monoid.  The factory
// rejects maps with f(x*s) != f(x)*s and reports the offending pair.
class ActMap {
 public:
  static ActMap make(ActPtr source, ActPtr target, std::vector<Idx> mapping);
  static ActMap identity(const ActPtr& act);

  const ActPtr& source() const noexcept { return source_; }
  const ActPtr& target() const noexcept { return target_; }
  Idx operator()(Idx x) const { return mapping_[static_cast<size_t>(x)]; }
  const std::vector<Idx>& mapping() const noexcept { return mapping_; }

  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const { return is_mono() && is_epi(); }
  std::vector<Idx> image() const;  // sorted, deduplicated

  // Inverse of a bijective map; throws NotMono / NotEpi otherwise.
  ActMap inverse() const;

  friend ActMap compose(const ActMap& second, const ActMap& first);

 private:
  ActMap(ActPtr source, ActPtr target, std::vector<Idx> mapping)
      : source_(std::move(source)),
        target_(std::move(target)),
        mapping_(std::move(mapping)) {}

  ActPtr source_;
  ActPtr target_;
  std::vector<Idx> mapping_;
};

// second after first; endpoints must agree structurally.
ActMap compose(const ActMap& second, const ActMap& first);

// An action-closed subset of a parent act, kept as sorted member indices.
struct SubactHandle {
  ActPtr parent;
  std::vector<Idx> members;

  bool contains(Idx x) const;
  bool is_proper() const {
    return static_cast<int>(members.size()) < parent->size();
  }
};

SubactHandle make_subact(ActPtr parent, std::vector<Idx> members);

// The members as an act in their own right plus the inclusion into parent.
struct SubactAsAct {
  ActPtr act;
  ActMap inclusion;
};
SubactAsAct subact_as_act(const SubactHandle& sub);

// Free act on `rank` generators: pairs (generator, monoid element) with
// (a, s)*t = (a, s*t), element (a, s) encoded as a*order + s.
struct FreeAct {
  ActPtr act;
  std::vector<Idx> basis;  // index of (a, 1) for each generator a
};
FreeAct free_act(const MonoidPtr& m, int rank);

struct Coproduct {
  ActPtr act;
  std::vector<ActMap> injections;
  std::vector<int> offsets;
};
Coproduct coproduct(const std::vector<ActPtr>& parts);

// Partition of the carrier into indecomposable components, ordered by least
// member; every component is action-closed.
std::vector<SubactHandle> indecomposable_components(const ActPtr& x);

std::vector<Idx> fixed_points(const FiniteAct& x);

// Least subact containing the seed elements.
SubactHandle generated_subact(const ActPtr& x, const std::vector<Idx>& seed);

// Every nonempty action-closed subset, as unions of the principal subacts,
// in lexicographic member order.
std::vector<SubactHandle> all_subacts(const ActPtr& x);

enum class HomFilter { All, Mono, Epi, Iso };

// All equivariant maps source -> target passing the filter, ordered
// lexicographically by mapping vector.  First-witness semantics downstream
// rely on this order.
std::vector<ActMap> enumerate_homs(const ActPtr& source, const ActPtr& target,
                                   HomFilter filter = HomFilter::All);

// Lex-least hom passing the filter, without materialising the rest.
std::optional<ActMap> find_hom(const ActPtr& source, const ActPtr& target,
                               HomFilter filter);

std::optional<ActMap> find_act_isomorphism(const ActPtr& a, const ActPtr& b);

// One representative per isomorphism class of quotients of the monoid acting
// on itself; every cyclic act is isomorphic to exactly one entry.
std::vector<ActPtr> cyclic_acts(const MonoidPtr& m);

// All acts with the given carrier size over m, via assignments of one carrier
// transformation per monoid element compatible with the multiplication table.
// With up_to_iso, one lex-least representative per relabelling class.
std::vector<ActPtr> enumerate_acts(const MonoidPtr& m, int size,
                                   bool up_to_iso);

// Sizes 1..max_size concatenated.
std::vector<ActPtr> enumerate_acts_up_to(const MonoidPtr& m, int max_size,
                                         bool up_to_iso);

}  // namespace actlab
