#include "actlab/congruence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace actlab {

namespace {

std::vector<Idx> normalise_reps(std::vector<Idx> raw) {
  // Make every label the least member of its block.
  std::vector<Idx> least(raw.size(), -1);
  for (size_t x = 0; x < raw.size(); ++x) {
    Idx r = raw[x];
    if (least[static_cast<size_t>(r)] < 0) {
      least[static_cast<size_t>(r)] = static_cast<Idx>(x);
    }
  }
  for (auto& r : raw) {
    r = least[static_cast<size_t>(r)];
  }
  return raw;
}

}  // namespace

int RightCongruence::block_count() const {
  std::set<Idx> labels(rep.begin(), rep.end());
  return static_cast<int>(labels.size());
}

std::vector<std::vector<Idx>> RightCongruence::blocks() const {
  std::map<Idx, std::vector<Idx>> by_rep;
  for (size_t x = 0; x < rep.size(); ++x) {
    by_rep[rep[x]].push_back(static_cast<Idx>(x));
  }
  std::vector<std::vector<Idx>> out;
  for (auto& [r, block] : by_rep) {
    out.push_back(std::move(block));
  }
  return out;
}

bool RightCongruence::is_identity() const {
  for (size_t x = 0; x < rep.size(); ++x) {
    if (rep[x] != static_cast<Idx>(x)) {
      return false;
    }
  }
  return true;
}

bool RightCongruence::is_universal() const {
  return std::all_of(rep.begin(), rep.end(), [](Idx r) { return r == 0; });
}

bool operator==(const RightCongruence& a, const RightCongruence& b) {
  return a.act->flat_action() == b.act->flat_action() && a.rep == b.rep;
}

RightCongruence identity_congruence(const ActPtr& act) {
  std::vector<Idx> rep(static_cast<size_t>(act->size()));
  std::iota(rep.begin(), rep.end(), 0);
  return RightCongruence{act, std::move(rep)};
}

RightCongruence universal_congruence(const ActPtr& act) {
  return RightCongruence{act,
                         std::vector<Idx>(static_cast<size_t>(act->size()), 0)};
}

RightCongruence generated_congruence(
    const ActPtr& act, const std::vector<std::pair<Idx, Idx>>& pairs) {
  int m = act->size();
  int n = act->monoid()->order();
  std::vector<Idx> parent(static_cast<size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Idx a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  std::deque<std::pair<Idx, Idx>> pending(pairs.begin(), pairs.end());
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m) {
      throw Error(ErrorCode::IndexOutOfRange, "pair outside carrier", {x, y});
    }
  }
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    Idx rx = find(x);
    Idx ry = find(y);
    if (rx == ry) {
      continue;
    }
    parent[static_cast<size_t>(std::max(rx, ry))] = std::min(rx, ry);
    // Compatibility closure: merged elements must stay merged under every s.
    for (int s = 0; s < n; ++s) {
      pending.emplace_back(act->act(x, s), act->act(y, s));
    }
  }
  std::vector<Idx> rep(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) {
    rep[static_cast<size_t>(x)] = find(x);
  }
  return RightCongruence{act, normalise_reps(std::move(rep))};
}

RightCongruence congruence_from_partition(const ActPtr& act,
                                          const std::vector<Idx>& partition) {
  int m = act->size();
  int n = act->monoid()->order();
  if (static_cast<int>(partition.size()) != m) {
    throw Error(ErrorCode::InvalidArgument, "partition has wrong length");
  }
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (partition[static_cast<size_t>(x)] != partition[static_cast<size_t>(y)]) {
        continue;
      }
      for (int s = 0; s < n; ++s) {
        if (partition[static_cast<size_t>(act->act(x, s))] !=
            partition[static_cast<size_t>(act->act(y, s))]) {
          throw Error(ErrorCode::NotClosed,
                      "partition not compatible with the action at (" +
                          std::to_string(x) + "," + std::to_string(y) + ")*" +
                          std::to_string(s),
                      {x, y, s});
        }
      }
    }
  }
  std::vector<Idx> raw(static_cast<size_t>(m));
  std::map<Idx, Idx> first_seen;
  for (int x = 0; x < m; ++x) {
    auto [it, fresh] =
        first_seen.try_emplace(partition[static_cast<size_t>(x)], x);
    raw[static_cast<size_t>(x)] = it->second;
  }
  return RightCongruence{act, normalise_reps(std::move(raw))};
}

CongruenceQuotient quotient_act(const RightCongruence& rho) {
  const ActPtr& act = rho.act;
  int n = act->monoid()->order();
  std::vector<Idx> reps;
  std::vector<Idx> block_of(static_cast<size_t>(act->size()), -1);
  for (int x = 0; x < act->size(); ++x) {
    if (rho.rep[static_cast<size_t>(x)] == x) {
      block_of[static_cast<size_t>(x)] = static_cast<Idx>(reps.size());
      reps.push_back(x);
    }
  }
  for (int x = 0; x < act->size(); ++x) {
    block_of[static_cast<size_t>(x)] =
        block_of[static_cast<size_t>(rho.rep[static_cast<size_t>(x)])];
  }
  std::vector<std::vector<Idx>> action(reps.size());
  for (size_t b = 0; b < reps.size(); ++b) {
    for (int s = 0; s < n; ++s) {
      action[b].push_back(block_of[static_cast<size_t>(act->act(reps[b], s))]);
    }
  }
  ActPtr q = FiniteAct::make(act->monoid(), action);
  ActMap proj = ActMap::make(act, q, block_of);
  return CongruenceQuotient{q, std::move(proj), std::move(reps)};
}

RightCongruence kernel(const ActMap& f) {
  std::vector<Idx> raw(f.mapping().size());
  std::map<Idx, Idx> first_preimage;
  for (size_t x = 0; x < f.mapping().size(); ++x) {
    auto [it, fresh] =
        first_preimage.try_emplace(f.mapping()[x], static_cast<Idx>(x));
    raw[x] = it->second;
  }
  return RightCongruence{f.source(), normalise_reps(std::move(raw))};
}

std::vector<RightCongruence> all_right_congruences(const ActPtr& act, int cap) {
  int m = act->size();
  if (m > cap) {
    throw Error(ErrorCode::BoundExceeded,
                "carrier size " + std::to_string(m) + " above cap " +
                    std::to_string(cap),
                {m, cap});
  }
  int n = act->monoid()->order();
  std::vector<RightCongruence> out;
  // Restricted growth strings enumerate set partitions exactly once.
  std::vector<Idx> rgs(static_cast<size_t>(m), 0);
  auto compatible = [&]() {
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        if (rgs[static_cast<size_t>(x)] != rgs[static_cast<size_t>(y)]) {
          continue;
        }
        for (int s = 0; s < n; ++s) {
          if (rgs[static_cast<size_t>(act->act(x, s))] !=
              rgs[static_cast<size_t>(act->act(y, s))]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::function<void(int, Idx)> rec = [&](int pos, Idx max_label) {
    if (pos == m) {
      if (compatible()) {
        std::vector<Idx> raw(static_cast<size_t>(m));
        std::vector<Idx> first(static_cast<size_t>(m), -1);
        for (int x = 0; x < m; ++x) {
          Idx label = rgs[static_cast<size_t>(x)];
          if (first[static_cast<size_t>(label)] < 0) {
            first[static_cast<size_t>(label)] = x;
          }
          raw[static_cast<size_t>(x)] = first[static_cast<size_t>(label)];
        }
        out.push_back(RightCongruence{act, std::move(raw)});
      }
      return;
    }
    for (Idx label = 0; label <= max_label + 1 && label < m; ++label) {
      rgs[static_cast<size_t>(pos)] = label;
      rec(pos + 1, std::max(max_label, label));
    }
  };
  rec(1, 0);  // rgs[0] = 0 always
  std::sort(out.begin(), out.end(),
            [](const RightCongruence& a, const RightCongruence& b) {
              int ba = a.block_count();
              int bb = b.block_count();
              if (ba != bb) {
                return ba > bb;  // finest first
              }
              return a.rep < b.rep;
            });
  return out;
}

bool refines(const RightCongruence& a, const RightCongruence& b) {
  for (size_t x = 0; x < a.rep.size(); ++x) {
    if (b.rep[x] != b.rep[static_cast<size_t>(a.rep[x])]) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<Idx, Idx>> minimal_generating_pairs(
    const RightCongruence& rho) {
  std::vector<std::pair<Idx, Idx>> pairs;
  for (const auto& block : rho.blocks()) {
    for (size_t i = 1; i < block.size(); ++i) {
      pairs.emplace_back(block[0], block[i]);
    }
  }
  // Greedy deletion keeps the result inclusion-minimal and deterministic.
  for (size_t i = 0; i < pairs.size();) {
    std::vector<std::pair<Idx, Idx>> rest;
    for (size_t j = 0; j < pairs.size(); ++j) {
      if (j != i) {
        rest.push_back(pairs[j]);
      }
    }
    if (generated_congruence(rho.act, rest).rep == rho.rep) {
      pairs = std::move(rest);
    } else {
      ++i;
    }
  }
  return pairs;
}

NoetherianCertificate noetherian_certificate(const ActPtr& act, int cap) {
  NoetherianCertificate cert;
  auto congruences = all_right_congruences(act, cap);
  cert.congruence_count = static_cast<int>(congruences.size());

  // Longest refinement chain; congruences are already ordered finest first.
  std::vector<int> longest(congruences.size(), 1);
  for (size_t i = 0; i < congruences.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (congruences[j].rep != congruences[i].rep &&
          refines(congruences[j], congruences[i])) {
        longest[i] = std::max(longest[i], longest[j] + 1);
      }
    }
  }
  cert.lattice_height =
      *std::max_element(longest.begin(), longest.end());

  // Greedy deletion from the top keeps the least usable generators.
  std::vector<Idx> gens(static_cast<size_t>(act->size()));
  std::iota(gens.begin(), gens.end(), 0);
  for (size_t i = gens.size(); i-- > 0;) {
    std::vector<Idx> rest;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != i) {
        rest.push_back(gens[j]);
      }
    }
    if (!rest.empty() &&
        static_cast<int>(generated_subact(act, rest).members.size()) ==
            act->size()) {
      gens = std::move(rest);
    }
  }
  cert.act_generators = gens;

  cert.all_finitely_generated = true;
  for (const auto& rho : congruences) {
    auto pairs = minimal_generating_pairs(rho);
    if (!(generated_congruence(act, pairs).rep == rho.rep)) {
      cert.all_finitely_generated = false;
    }
  }
  return cert;
}

std::vector<ActPtr> cyclic_acts(const MonoidPtr& m) {
  // The quotients of the monoid acting on itself, one per isomorphism class.
  int n = m->order();
  std::vector<std::vector<Idx>> action(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < n; ++s) {
      action[static_cast<size_t>(x)].push_back(m->mul(x, s));
    }
  }
  ActPtr self = FiniteAct::make(m, action);
  std::vector<ActPtr> quotients;
  for (const auto& rho : all_right_congruences(self)) {
    quotients.push_back(quotient_act(rho).act);
  }
  std::sort(quotients.begin(), quotients.end(),
            [](const ActPtr& a, const ActPtr& b) {
              if (a->size() != b->size()) {
                return a->size() < b->size();
              }
              return a->flat_action() < b->flat_action();
            });
  std::vector<ActPtr> out;
  for (const auto& q : quotients) {
    bool fresh = true;
    for (const auto& kept : out) {
      if (find_act_isomorphism(kept, q).has_value()) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace actlab
