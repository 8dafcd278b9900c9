#include "actlab/colimit.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "actlab/congruence.hpp"
#include "actlab/util.hpp"

namespace actlab {

namespace {

// Probe library for relative universality checks: one act per isomorphism
// class of cyclic acts, plus all coproducts of them up to the size bound.
std::vector<ActPtr> probe_library(const MonoidPtr& m, int bound) {
  std::vector<ActPtr> cyclic = cyclic_acts(m);
  std::vector<ActPtr> probes;
  // Multisets of cyclic acts with total size <= bound, built in index order
  // to avoid duplicates.
  std::vector<size_t> stack;
  std::function<void(size_t, int)> rec = [&](size_t from, int budget) {
    if (!stack.empty()) {
      std::vector<ActPtr> parts;
      for (size_t i : stack) {
        parts.push_back(cyclic[i]);
      }
      probes.push_back(parts.size() == 1 ? parts.front()
                                         : coproduct(parts).act);
    }
    for (size_t i = from; i < cyclic.size(); ++i) {
      if (cyclic[i]->size() <= budget) {
        stack.push_back(i);
        rec(i, budget - cyclic[i]->size());
        stack.pop_back();
      }
    }
  };
  rec(0, bound);
  return probes;
}

std::string describe_act(const FiniteAct& a) {
  std::ostringstream os;
  os << "act[" << a.size() << ":" << join(a.flat_action(), ",") << "]";
  return os.str();
}

std::string describe_map(const ActMap& f) {
  std::ostringstream os;
  os << describe_act(*f.source()) << "->" << describe_act(*f.target()) << " via ("
     << join(f.mapping(), ",") << ")";
  return os.str();
}

// Constructs the unique candidate mediator for a cocone whose legs are
// jointly surjective: the value at an apex point is forced by any preimage.
// Returns the mediator mapping, or an empty optional with `why` set.
std::optional<std::vector<Idx>> forced_mediator(
    const ActPtr& apex, const std::vector<ActMap>& legs,
    const std::vector<ActMap>& competing, std::string* why) {
  std::vector<Idx> u(static_cast<size_t>(apex->size()), -1);
  for (size_t i = 0; i < legs.size(); ++i) {
    for (int x = 0; x < legs[i].source()->size(); ++x) {
      Idx apex_pt = legs[i](x);
      Idx want = competing[i](x);
      if (u[static_cast<size_t>(apex_pt)] < 0) {
        u[static_cast<size_t>(apex_pt)] = want;
      } else if (u[static_cast<size_t>(apex_pt)] != want) {
        *why = "no mediator: legs " + std::to_string(i) +
               " forces conflicting values at apex point " +
               std::to_string(apex_pt);
        return std::nullopt;
      }
    }
  }
  for (size_t p = 0; p < u.size(); ++p) {
    if (u[p] < 0) {
      *why = "legs are not jointly surjective at apex point " +
             std::to_string(p);
      return std::nullopt;
    }
  }
  return u;
}

}  // namespace

std::shared_ptr<const DirectSystem> DirectSystem::make(
    std::vector<ActPtr> acts, std::vector<std::vector<bool>> leq,
    std::map<std::pair<int, int>, ActMap> transitions) {
  int k = static_cast<int>(acts.size());
  if (k == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty system");
  }
  for (const auto& a : acts) {
    if (!same_monoid(*acts.front()->monoid(), *a->monoid())) {
      throw Error(ErrorCode::MixedMonoids,
                  "system acts live over different monoids");
    }
  }
  if (static_cast<int>(leq.size()) != k) {
    throw Error(ErrorCode::InvalidArgument, "order relation has wrong shape");
  }
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != k) {
      throw Error(ErrorCode::InvalidArgument, "order relation has wrong shape");
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!leq[static_cast<size_t>(i)][static_cast<size_t>(i)]) {
      throw Error(ErrorCode::InvalidArgument,
                  "order not reflexive at " + std::to_string(i), {i});
    }
    for (int j = 0; j < k; ++j) {
      if (i != j && leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
          leq[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
        throw Error(ErrorCode::InvalidArgument,
                    "order not antisymmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    {i, j});
      }
      for (int l = 0; l < k; ++l) {
        if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
            leq[static_cast<size_t>(j)][static_cast<size_t>(l)] &&
            !leq[static_cast<size_t>(i)][static_cast<size_t>(l)]) {
          throw Error(ErrorCode::InvalidArgument,
                      "order not transitive at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(l) + ")",
                      {i, j, l});
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      bool related = leq[static_cast<size_t>(i)][static_cast<size_t>(j)];
      bool present = transitions.count({i, j}) > 0;
      if (related && !present) {
        if (i == j) {
          transitions.emplace(std::make_pair(i, i), ActMap::identity(acts[static_cast<size_t>(i)]));
          present = true;
        } else {
          throw Error(ErrorCode::InvalidArgument,
                      "missing transition " + std::to_string(i) + "<=" +
                          std::to_string(j),
                      {i, j});
        }
      }
      if (!related && present) {
        throw Error(ErrorCode::InvalidArgument,
                    "transition given for unrelated pair " + std::to_string(i) +
                        "," + std::to_string(j),
                    {i, j});
      }
      if (!present) {
        continue;
      }
      const ActMap& t = transitions.at({i, j});
      if (t.source()->flat_action() !=
              acts[static_cast<size_t>(i)]->flat_action() ||
          t.target()->flat_action() !=
              acts[static_cast<size_t>(j)]->flat_action()) {
        throw Error(ErrorCode::MismatchedEndpoints,
                    "transition " + std::to_string(i) + "<=" +
                        std::to_string(j) + " has wrong endpoints",
                    {i, j});
      }
      if (i == j) {
        for (int x = 0; x < t.source()->size(); ++x) {
          if (t(x) != x) {
            throw Error(ErrorCode::InvalidArgument,
                        "identity transition at " + std::to_string(i) +
                            " is not the identity",
                        {i, x});
          }
        }
      }
    }
  }
  // Functoriality: composing i<=j<=l must equal the direct transition.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l) {
        if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
            leq[static_cast<size_t>(j)][static_cast<size_t>(l)]) {
          const ActMap& ij = transitions.at({i, j});
          const ActMap& jl = transitions.at({j, l});
          const ActMap& il = transitions.at({i, l});
          if (compose(jl, ij).mapping() != il.mapping()) {
            throw Error(ErrorCode::InvalidArgument,
                        "transitions not functorial on " + std::to_string(i) +
                            "<=" + std::to_string(j) + "<=" + std::to_string(l),
                        {i, j, l});
          }
        }
      }
    }
  }
  bool directed = true;
  for (int i = 0; i < k && directed; ++i) {
    for (int j = 0; j < k && directed; ++j) {
      bool upper = false;
      for (int l = 0; l < k && !upper; ++l) {
        upper = leq[static_cast<size_t>(i)][static_cast<size_t>(l)] &&
                leq[static_cast<size_t>(j)][static_cast<size_t>(l)];
      }
      directed = upper;
    }
  }
  return std::shared_ptr<const DirectSystem>(new DirectSystem(
      std::move(acts), std::move(leq), std::move(transitions), directed));
}

const ActMap& DirectSystem::transition(int i, int j) const {
  auto it = transitions_.find({i, j});
  if (it == transitions_.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "no transition " + std::to_string(i) + "<=" + std::to_string(j),
                {i, j});
  }
  return it->second;
}

Cocone colimit(const SystemPtr& system) {
  auto cp = coproduct(system->acts());
  std::vector<std::pair<Idx, Idx>> glue;
  for (int i = 0; i < system->size(); ++i) {
    for (int j = 0; j < system->size(); ++j) {
      if (i == j || !system->leq(i, j)) {
        continue;
      }
      const ActMap& t = system->transition(i, j);
      for (int x = 0; x < system->acts()[static_cast<size_t>(i)]->size(); ++x) {
        glue.emplace_back(cp.injections[static_cast<size_t>(i)](x),
                          cp.injections[static_cast<size_t>(j)](t(x)));
      }
    }
  }
  auto rho = generated_congruence(cp.act, glue);
  auto q = quotient_act(rho);
  Cocone cocone;
  cocone.system = system;
  cocone.apex = q.act;
  for (int i = 0; i < system->size(); ++i) {
    cocone.legs.push_back(
        compose(q.projection, cp.injections[static_cast<size_t>(i)]));
  }
  return cocone;
}

CoequalizerResult coequalizer(const ActMap& f, const ActMap& g) {
  if (f.source()->flat_action() != g.source()->flat_action() ||
      f.target()->flat_action() != g.target()->flat_action()) {
    throw Error(ErrorCode::MismatchedEndpoints,
                "parallel pair endpoints do not match");
  }
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int c = 0; c < f.source()->size(); ++c) {
    pairs.emplace_back(f(c), g(c));
  }
  auto rho = generated_congruence(f.target(), pairs);
  auto q = quotient_act(rho);
  return CoequalizerResult{q.act, q.projection};
}

PushoutResult pushout(const ActMap& f, const ActMap& g) {
  if (f.source()->flat_action() != g.source()->flat_action()) {
    throw Error(ErrorCode::MismatchedEndpoints,
                "span legs start from different acts");
  }
  // Span poset: 0 = apex of the span, 1 and 2 its targets.
  std::vector<ActPtr> acts = {f.source(), f.target(), g.target()};
  std::vector<std::vector<bool>> leq = {{true, true, true},
                                        {false, true, false},
                                        {false, false, true}};
  std::map<std::pair<int, int>, ActMap> transitions;
  transitions.emplace(std::make_pair(0, 1), f);
  transitions.emplace(std::make_pair(0, 2), g);
  auto system = DirectSystem::make(acts, leq, std::move(transitions));
  auto cocone = colimit(system);
  return PushoutResult{cocone.apex, cocone.legs[1], cocone.legs[2], cocone};
}

UniversalityReport verify_universal(const Cocone& cocone, int probe_bound) {
  UniversalityReport report;
  const auto& system = cocone.system;
  // Sanity: the cocone must commute with its own transitions.
  for (int i = 0; i < system->size(); ++i) {
    for (int j = 0; j < system->size(); ++j) {
      if (!system->leq(i, j)) {
        continue;
      }
      if (compose(cocone.legs[static_cast<size_t>(j)],
                  system->transition(i, j))
              .mapping() != cocone.legs[static_cast<size_t>(i)].mapping()) {
        report.ok = false;
        report.failure = "cocone does not commute at " + std::to_string(i) +
                         "<=" + std::to_string(j);
        return report;
      }
    }
  }
  // Free choices live on maximal indices; everything below is forced.
  std::vector<int> maximal;
  std::vector<int> anchor(static_cast<size_t>(system->size()), -1);
  for (int i = 0; i < system->size(); ++i) {
    bool is_max = true;
    for (int j = 0; j < system->size(); ++j) {
      if (j != i && system->leq(i, j)) {
        is_max = false;
        break;
      }
    }
    if (is_max) {
      maximal.push_back(i);
    }
  }
  for (int i = 0; i < system->size(); ++i) {
    for (size_t mi = 0; mi < maximal.size(); ++mi) {
      if (system->leq(i, maximal[mi])) {
        anchor[static_cast<size_t>(i)] = static_cast<int>(mi);
        break;
      }
    }
    if (anchor[static_cast<size_t>(i)] < 0) {
      // Cannot happen in a finite poset; guard anyway.
      throw Error(ErrorCode::InvalidArgument, "index below no maximal index");
    }
  }
  for (const auto& probe : probe_library(system->acts().front()->monoid(),
                                         probe_bound)) {
    ++report.probes_checked;
    std::vector<std::vector<ActMap>> choices;
    for (int mi : maximal) {
      choices.push_back(
          enumerate_homs(system->acts()[static_cast<size_t>(mi)], probe));
    }
    std::vector<size_t> pick(choices.size(), 0);
    bool done = choices.empty() ||
                std::any_of(choices.begin(), choices.end(),
                            [](const auto& c) { return c.empty(); });
    while (!done) {
      // Assemble the candidate competing cocone and check compatibility.
      std::vector<ActMap> competing;
      bool compatible = true;
      for (int i = 0; i < system->size() && compatible; ++i) {
        const ActMap& via_max =
            choices[static_cast<size_t>(anchor[static_cast<size_t>(i)])]
                   [pick[static_cast<size_t>(anchor[static_cast<size_t>(i)])]];
        ActMap leg =
            compose(via_max, system->transition(i, maximal[static_cast<size_t>(
                                                       anchor[static_cast<size_t>(i)])]));
        competing.push_back(leg);
      }
      for (int i = 0; i < system->size() && compatible; ++i) {
        for (int j = 0; j < system->size() && compatible; ++j) {
          if (system->leq(i, j)) {
            compatible =
                compose(competing[static_cast<size_t>(j)],
                        system->transition(i, j))
                    .mapping() == competing[static_cast<size_t>(i)].mapping();
          }
        }
      }
      if (compatible) {
        ++report.cocones_checked;
        std::string why;
        auto u = forced_mediator(cocone.apex, cocone.legs, competing, &why);
        bool good = false;
        if (u.has_value()) {
          // Equivariance plus the leg equations make u a genuine mediator;
          // joint surjectivity of the legs makes it the only candidate.
          try {
            ActMap::make(cocone.apex, probe, *u);
            good = true;
          } catch (const Error&) {
            why = "forced mediator is not equivariant";
          }
        }
        if (!good) {
          report.ok = false;
          std::ostringstream os;
          os << "probe " << describe_act(*probe) << ": " << why << "; cocone ";
          for (const auto& c : competing) {
            os << describe_map(c) << " ";
          }
          report.failure = os.str();
          return report;
        }
      }
      // Next assignment of maximal-leg choices.
      size_t level = 0;
      while (level < pick.size()) {
        if (++pick[level] < choices[level].size()) {
          break;
        }
        pick[level] = 0;
        ++level;
      }
      done = level == pick.size();
    }
  }
  return report;
}

UniversalityReport verify_universal_coequalizer(const ActMap& f,
                                                const ActMap& g,
                                                const CoequalizerResult& coeq,
                                                int probe_bound) {
  UniversalityReport report;
  if (compose(coeq.projection, f).mapping() !=
      compose(coeq.projection, g).mapping()) {
    report.ok = false;
    report.failure = "projection does not equalize the pair";
    return report;
  }
  if (!coeq.projection.is_epi()) {
    report.ok = false;
    report.failure = "projection is not surjective";
    return report;
  }
  for (const auto& probe :
       probe_library(f.source()->monoid(), probe_bound)) {
    ++report.probes_checked;
    for (const auto& k : enumerate_homs(f.target(), probe)) {
      if (compose(k, f).mapping() != compose(k, g).mapping()) {
        continue;
      }
      ++report.cocones_checked;
      // u is forced on each block by any projection preimage.
      std::vector<Idx> u(static_cast<size_t>(coeq.act->size()), -1);
      bool consistent = true;
      for (int x = 0; x < f.target()->size() && consistent; ++x) {
        Idx block = coeq.projection(x);
        if (u[static_cast<size_t>(block)] < 0) {
          u[static_cast<size_t>(block)] = k(x);
        } else {
          consistent = u[static_cast<size_t>(block)] == k(x);
        }
      }
      bool good = consistent;
      if (good) {
        try {
          ActMap::make(coeq.act, probe, u);
        } catch (const Error&) {
          good = false;
        }
      }
      if (!good) {
        report.ok = false;
        report.failure = "probe " + describe_act(*probe) +
                         ": no mediator for " + describe_map(k);
        return report;
      }
    }
  }
  return report;
}

}  // namespace actlab
