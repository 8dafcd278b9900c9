#include "actlab/classes.hpp"

#include <algorithm>
#include <sstream>

#include "actlab/congruence.hpp"
#include "actlab/util.hpp"

namespace actlab {

namespace {

std::vector<Idx> elements_of_kind(const FiniteMonoid& m, ElementKind kind) {
  std::vector<Idx> out;
  for (Idx s = 0; s < m.order(); ++s) {
    if (element_property(m, s, kind)) {
      out.push_back(s);
    }
  }
  return out;
}

ActPtr monoid_as_act(const MonoidPtr& m) { return free_act(m, 1).act; }

ClassVerdict scan_cancellation(const ActPtr& x, ElementKind kind) {
  ClassVerdict v;
  const FiniteMonoid& m = *x->monoid();
  for (Idx c : elements_of_kind(m, kind)) {
    for (Idx a = 0; a < x->size(); ++a) {
      for (Idx b = a + 1; b < x->size(); ++b) {
        if (x->act(a, c) == x->act(b, c)) {
          v.member = false;
          v.witness = {a, b, c};
          v.detail = "elements " + std::to_string(a) + " and " +
                     std::to_string(b) + " merge under " + std::to_string(c);
          return v;
        }
      }
    }
  }
  v.member = true;
  return v;
}

ClassVerdict scan_divisible(const ActPtr& x) {
  ClassVerdict v;
  const FiniteMonoid& m = *x->monoid();
  for (Idx c : elements_of_kind(m, ElementKind::LeftCancellative)) {
    for (Idx a = 0; a < x->size(); ++a) {
      bool divisible = false;
      for (Idx d = 0; d < x->size() && !divisible; ++d) {
        divisible = x->act(d, c) == a;
      }
      if (!divisible) {
        v.member = false;
        v.witness = {a, c};
        v.detail = "no d with d*" + std::to_string(c) + " = " +
                   std::to_string(a);
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

// A component is a copy of the monoid act exactly when some element b sends
// s -> b*s bijectively onto the component.
ClassVerdict scan_free(const ActPtr& x) {
  ClassVerdict v;
  const FiniteMonoid& m = *x->monoid();
  std::vector<Idx> bases;
  for (const SubactHandle& component : indecomposable_components(x)) {
    Idx basis = -1;
    if (static_cast<int>(component.members.size()) == m.order()) {
      for (Idx b : component.members) {
        std::vector<Idx> orbit;
        for (Idx s = 0; s < m.order(); ++s) {
          orbit.push_back(x->act(b, s));
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        if (orbit == component.members) {
          basis = b;
          break;
        }
      }
    }
    if (basis < 0) {
      v.member = false;
      v.witness = {component.members.front()};
      v.detail = "component of " + std::to_string(component.members.front()) +
                 " is not a copy of the monoid act";
      return v;
    }
    bases.push_back(basis);
  }
  v.member = true;
  v.witness = bases;
  return v;
}

ClassVerdict scan_projective(const ActPtr& x) {
  ClassVerdict v;
  const MonoidPtr& m = x->monoid();
  ActPtr self = monoid_as_act(m);
  std::vector<std::pair<Idx, ActPtr>> principal;
  for (Idx e : elements_of_kind(*m, ElementKind::Idempotent)) {
    principal.emplace_back(e, subact_as_act(generated_subact(self, {e})).act);
  }
  std::vector<Idx> chosen;
  for (const SubactHandle& component : indecomposable_components(x)) {
    ActPtr part = subact_as_act(component).act;
    Idx idem = -1;
    for (const auto& [e, act] : principal) {
      if (find_act_isomorphism(part, act).has_value()) {
        idem = e;
        break;
      }
    }
    if (idem < 0) {
      v.member = false;
      v.witness = {component.members.front()};
      v.detail = "component of " + std::to_string(component.members.front()) +
                 " matches no principal act of an idempotent";
      return v;
    }
    chosen.push_back(idem);
  }
  v.member = true;
  v.witness = chosen;
  return v;
}

ClassVerdict scan_generator(const ActPtr& x) {
  ClassVerdict v;
  ActPtr self = monoid_as_act(x->monoid());
  std::vector<ActMap> homs = enumerate_homs(x, self);
  for (const ActMap& h : homs) {
    if (h.is_epi()) {
      v.member = true;
      v.witness = h.mapping();
      return v;
    }
  }
  v.member = false;
  v.witness = {static_cast<Idx>(homs.size())};
  v.detail = "none of the " + std::to_string(homs.size()) +
             " maps onto the monoid act is surjective";
  return v;
}

// Whether every map from the subact extends along its inclusion, searching
// the precomputed homs from the parent.
bool extends_along(const SubactHandle& sub, const std::vector<ActMap>& from_parent,
                   const ActMap& f) {
  for (const ActMap& g : from_parent) {
    bool match = true;
    for (size_t i = 0; i < sub.members.size() && match; ++i) {
      match = g(sub.members[i]) == f(static_cast<Idx>(i));
    }
    if (match) {
      return true;
    }
  }
  return false;
}

ClassVerdict scan_injective(const ActPtr& x) {
  ClassVerdict v;
  if (fixed_points(*x).empty()) {
    const FiniteMonoid& m = *x->monoid();
    for (Idx a = 0; a < x->size(); ++a) {
      for (Idx s = 0; s < m.order(); ++s) {
        if (x->act(a, s) != a) {
          v.witness.push_back(s);
          break;
        }
      }
    }
    v.member = false;
    v.detail = "no fixed point; witness lists one moving s per element";
    return v;
  }
  std::vector<ActPtr> cyclic = cyclic_acts(x->monoid());
  for (size_t ci = 0; ci < cyclic.size(); ++ci) {
    std::vector<ActMap> from_parent = enumerate_homs(cyclic[ci], x);
    std::vector<SubactHandle> subs = all_subacts(cyclic[ci]);
    for (size_t si = 0; si < subs.size(); ++si) {
      SubactAsAct sub = subact_as_act(subs[si]);
      std::vector<ActMap> maps = enumerate_homs(sub.act, x);
      for (size_t fi = 0; fi < maps.size(); ++fi) {
        if (!extends_along(subs[si], from_parent, maps[fi])) {
          v.member = false;
          v.witness = {static_cast<Idx>(ci), static_cast<Idx>(si),
                       static_cast<Idx>(fi)};
          std::ostringstream os;
          os << "map (" << join(maps[fi].mapping(), ",")
             << ") from subact {" << join(subs[si].members, ",")
             << "} of cyclic act " << ci << " has no extension";
          v.detail = os.str();
          return v;
        }
      }
    }
  }
  v.member = true;
  v.witness = {fixed_points(*x).front()};
  return v;
}

ClassVerdict scan_weakly_injective(const ActPtr& x) {
  ClassVerdict v;
  ActPtr self = monoid_as_act(x->monoid());
  std::vector<ActMap> from_parent = enumerate_homs(self, x);
  std::vector<SubactHandle> ideals = all_subacts(self);
  for (size_t ii = 0; ii < ideals.size(); ++ii) {
    SubactAsAct sub = subact_as_act(ideals[ii]);
    std::vector<ActMap> maps = enumerate_homs(sub.act, x);
    for (size_t fi = 0; fi < maps.size(); ++fi) {
      if (!extends_along(ideals[ii], from_parent, maps[fi])) {
        v.member = false;
        v.witness = {static_cast<Idx>(ii), static_cast<Idx>(fi)};
        std::ostringstream os;
        os << "map (" << join(maps[fi].mapping(), ",") << ") from right ideal {"
           << join(ideals[ii].members, ",") << "} has no extension";
        v.detail = os.str();
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

ClassVerdict scan_pwi(const ActPtr& x) {
  ClassVerdict v;
  const FiniteMonoid& m = *x->monoid();
  ActPtr self = monoid_as_act(x->monoid());
  for (Idx s = 0; s < m.order(); ++s) {
    SubactHandle ideal = generated_subact(self, {s});
    SubactAsAct sub = subact_as_act(ideal);
    std::vector<ActMap> maps = enumerate_homs(sub.act, x);
    for (size_t fi = 0; fi < maps.size(); ++fi) {
      bool suits = false;
      for (Idx z = 0; z < x->size() && !suits; ++z) {
        bool all = true;
        for (size_t i = 0; i < ideal.members.size() && all; ++i) {
          all = x->act(z, ideal.members[i]) == maps[fi](static_cast<Idx>(i));
        }
        suits = all;
      }
      if (!suits) {
        v.member = false;
        v.witness = {s, static_cast<Idx>(fi)};
        std::ostringstream os;
        os << "map (" << join(maps[fi].mapping(), ",")
           << ") from the principal ideal of " << s
           << " is induced by no element";
        v.detail = os.str();
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

}  // namespace

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::Free:
      return "free";
    case ClassLabel::Projective:
      return "projective";
    case ClassLabel::TorsionFree:
      return "torsion-free";
    case ClassLabel::WeaklyTorsionFree:
      return "weakly-torsion-free";
    case ClassLabel::Divisible:
      return "divisible";
    case ClassLabel::Injective:
      return "injective";
    case ClassLabel::WeaklyInjective:
      return "weakly-injective";
    case ClassLabel::PrincipallyWeaklyInjective:
      return "principally-weakly-injective";
    case ClassLabel::Generator:
      return "generator";
  }
  return "unknown";
}

std::optional<ClassLabel> parse_class_label(const std::string& name) {
  for (ClassLabel label :
       {ClassLabel::Free, ClassLabel::Projective, ClassLabel::TorsionFree,
        ClassLabel::WeaklyTorsionFree, ClassLabel::Divisible,
        ClassLabel::Injective, ClassLabel::WeaklyInjective,
        ClassLabel::PrincipallyWeaklyInjective, ClassLabel::Generator}) {
    if (to_string(label) == name) {
      return label;
    }
  }
  return std::nullopt;
}

ClassVerdict act_in_class(const ActPtr& x, ClassLabel label) {
  switch (label) {
    case ClassLabel::Free:
      return scan_free(x);
    case ClassLabel::Projective:
      return scan_projective(x);
    case ClassLabel::TorsionFree:
      return scan_cancellation(x, ElementKind::RightCancellative);
    case ClassLabel::WeaklyTorsionFree:
      return scan_cancellation(x, ElementKind::Cancellative);
    case ClassLabel::Divisible:
      return scan_divisible(x);
    case ClassLabel::Injective:
      return scan_injective(x);
    case ClassLabel::WeaklyInjective:
      return scan_weakly_injective(x);
    case ClassLabel::PrincipallyWeaklyInjective:
      return scan_pwi(x);
    case ClassLabel::Generator:
      return scan_generator(x);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown class label");
}

ClassVerdict pwi_by_extension(const ActPtr& x) {
  ClassVerdict v;
  const FiniteMonoid& m = *x->monoid();
  ActPtr self = monoid_as_act(x->monoid());
  std::vector<ActMap> from_parent = enumerate_homs(self, x);
  for (Idx s = 0; s < m.order(); ++s) {
    SubactHandle ideal = generated_subact(self, {s});
    SubactAsAct sub = subact_as_act(ideal);
    std::vector<ActMap> maps = enumerate_homs(sub.act, x);
    for (size_t fi = 0; fi < maps.size(); ++fi) {
      if (!extends_along(ideal, from_parent, maps[fi])) {
        v.member = false;
        v.witness = {s, static_cast<Idx>(fi)};
        v.detail = "map from the principal ideal of " + std::to_string(s) +
                   " does not extend to the monoid act";
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

std::optional<SubactHandle> largest_divisible_subact(const ActPtr& x) {
  const FiniteMonoid& m = *x->monoid();
  std::vector<Idx> cancel = elements_of_kind(m, ElementKind::LeftCancellative);
  std::vector<bool> alive(static_cast<size_t>(x->size()), true);
  // Greatest fixpoint: keep the elements whose whole orbit stays divisible
  // inside the current set.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> good(static_cast<size_t>(x->size()), true);
    for (Idx a = 0; a < x->size(); ++a) {
      for (Idx c : cancel) {
        bool has = false;
        for (Idx d = 0; d < x->size() && !has; ++d) {
          has = alive[static_cast<size_t>(d)] && x->act(d, c) == a;
        }
        if (!has) {
          good[static_cast<size_t>(a)] = false;
          break;
        }
      }
    }
    for (Idx a = 0; a < x->size(); ++a) {
      if (!alive[static_cast<size_t>(a)]) {
        continue;
      }
      bool keep = true;
      for (Idx s = 0; s < m.order() && keep; ++s) {
        keep = good[static_cast<size_t>(x->act(a, s))];
      }
      if (!keep) {
        alive[static_cast<size_t>(a)] = false;
        changed = true;
      }
    }
  }
  std::vector<Idx> members;
  for (Idx a = 0; a < x->size(); ++a) {
    if (alive[static_cast<size_t>(a)]) {
      members.push_back(a);
    }
  }
  if (members.empty()) {
    return std::nullopt;
  }
  return make_subact(x, std::move(members));
}

bool essential_extension_check(const ActMap& inclusion, int cap) {
  if (!inclusion.is_mono()) {
    throw Error(ErrorCode::NotMono, "essential extension needs an embedding");
  }
  std::vector<Idx> image = inclusion.image();
  for (const RightCongruence& rho :
       all_right_congruences(inclusion.target(), cap)) {
    if (rho.is_identity()) {
      continue;
    }
    bool touches_image = false;
    for (size_t i = 0; i < image.size() && !touches_image; ++i) {
      for (size_t j = i + 1; j < image.size() && !touches_image; ++j) {
        touches_image = rho.rep[static_cast<size_t>(image[i])] ==
                        rho.rep[static_cast<size_t>(image[j])];
      }
    }
    if (!touches_image) {
      return false;
    }
  }
  return true;
}

std::optional<Envelope> injective_envelope_bounded(const ActPtr& x, int cap) {
  if (cap < x->size()) {
    throw Error(ErrorCode::InvalidArgument,
                "envelope cap below the act size", {cap, x->size()});
  }
  if (act_in_class(x, ClassLabel::Injective).member) {
    return Envelope{x, ActMap::identity(x)};
  }
  for (int n = x->size() + 1; n <= cap; ++n) {
    for (const ActPtr& candidate : enumerate_acts(x->monoid(), n, true)) {
      std::vector<ActMap> monos = enumerate_homs(x, candidate, HomFilter::Mono);
      if (monos.empty() ||
          !act_in_class(candidate, ClassLabel::Injective).member) {
        continue;
      }
      for (const ActMap& mono : monos) {
        if (essential_extension_check(mono, std::max(cap, candidate->size()))) {
          return Envelope{candidate, mono};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace actlab
