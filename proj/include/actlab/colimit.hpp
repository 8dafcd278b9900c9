#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "actlab/act.hpp"

namespace actlab {

// A functor from a finite poset into acts: one act per index, one transition
// map per related pair.  The factory checks the poset axioms, identity
// transitions and functoriality, and computes directedness.
class DirectSystem {
 public:
  static std::shared_ptr<const DirectSystem> make(
      std::vector<ActPtr> acts, std::vector<std::vector<bool>> leq,
      std::map<std::pair<int, int>, ActMap> transitions);

  int size() const { return static_cast<int>(acts_.size()); }
  const std::vector<ActPtr>& acts() const { return acts_; }
  bool leq(int i, int j) const {
    return leq_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const ActMap& transition(int i, int j) const;
  bool directed() const { return directed_; }

 private:
  DirectSystem(std::vector<ActPtr> acts, std::vector<std::vector<bool>> leq,
               std::map<std::pair<int, int>, ActMap> transitions, bool directed)
      : acts_(std::move(acts)),
        leq_(std::move(leq)),
        transitions_(std::move(transitions)),
        directed_(directed) {}

  std::vector<ActPtr> acts_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::pair<int, int>, ActMap> transitions_;
  bool directed_;
};

using SystemPtr = std::shared_ptr<const DirectSystem>;

// An apex with one leg per system index, commuting with every transition.
struct Cocone {
  SystemPtr system;
  ActPtr apex;
  std::vector<ActMap> legs;
};

// Apex = coproduct of the system's acts modulo the congruence generated by
// gluing each element to its transition images; legs factor the injections.
Cocone colimit(const SystemPtr& system);

struct CoequalizerResult {
  ActPtr act;
  ActMap projection;
};

// Target modulo the congruence generated by (f(c), g(c)).
CoequalizerResult coequalizer(const ActMap& f, const ActMap& g);

struct PushoutResult {
  ActPtr act;
  ActMap from_x;  // leg of f's target
  ActMap from_y;  // leg of g's target
  Cocone as_cocone;
};

// Pushout of f : Z -> X and g : Z -> Y, as the colimit of the span poset
// z < x, z < y.
PushoutResult pushout(const ActMap& f, const ActMap& g);

// Result of replaying a universal property against the probe library (all
// cyclic acts and their coproducts up to probe_bound elements).  `ok` means
// every competing cocone admitted exactly one mediating map.
struct UniversalityReport {
  bool ok = true;
  int probes_checked = 0;
  int cocones_checked = 0;
  std::string failure;  // first failure, with enough data to replay
};

UniversalityReport verify_universal(const Cocone& cocone, int probe_bound);

// Same check for a coequalizer: every map k with k.f = k.g must factor
// uniquely through the projection.
UniversalityReport verify_universal_coequalizer(const ActMap& f,
                                                const ActMap& g,
                                                const CoequalizerResult& coeq,
                                                int probe_bound);

}  // namespace actlab
