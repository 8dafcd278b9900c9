#include "actlab/act.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace actlab {

namespace {

void require_same_monoid(const FiniteAct& a, const FiniteAct& b,
                         const char* what) {
  if (!same_monoid(*a.monoid(), *b.monoid())) {
    throw Error(ErrorCode::MixedMonoids,
                std::string(what) + ": acts live over different monoids");
  }
}

}  // namespace

ActPtr FiniteAct::make(MonoidPtr monoid,
                       const std::vector<std::vector<Idx>>& action) {
  if (!monoid) {
    throw Error(ErrorCode::InvalidArgument, "act needs a monoid");
  }
  int m = static_cast<int>(action.size());
  int n = monoid->order();
  if (m <= 0) {
    throw Error(ErrorCode::InvalidArgument, "act carrier must be nonempty");
  }
  std::vector<Idx> flat(static_cast<size_t>(m) * static_cast<size_t>(n));
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(action[static_cast<size_t>(x)].size()) != n) {
      throw Error(ErrorCode::InvalidArgument,
                  "action row " + std::to_string(x) + " has wrong length",
                  {x});
    }
    for (int s = 0; s < n; ++s) {
      Idx v = action[static_cast<size_t>(x)][static_cast<size_t>(s)];
      if (v < 0 || v >= m) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "action entry (" + std::to_string(x) + "," +
                        std::to_string(s) + ") = " + std::to_string(v) +
                        " outside carrier",
                    {x, s, v});
      }
      flat[static_cast<size_t>(x * n + s)] = v;
    }
  }
  for (int x = 0; x < m; ++x) {
    if (flat[static_cast<size_t>(x * n + monoid->identity())] != x) {
      throw Error(ErrorCode::UnitLawFails,
                  "x*1 != x at element " + std::to_string(x), {x});
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int s = 0; s < n; ++s) {
      Idx xs = flat[static_cast<size_t>(x * n + s)];
      for (int t = 0; t < n; ++t) {
        if (flat[static_cast<size_t>(xs * n + t)] !=
            flat[static_cast<size_t>(x * n + monoid->mul(s, t))]) {
          throw Error(ErrorCode::ActionNotAssociative,
                      "(x*s)*t != x*(s*t) at (" + std::to_string(x) + "," +
                          std::to_string(s) + "," + std::to_string(t) + ")",
                      {x, s, t});
        }
      }
    }
  }
  return ActPtr(new FiniteAct(std::move(monoid), m, std::move(flat)));
}

ActMap ActMap::make(ActPtr source, ActPtr target, std::vector<Idx> mapping) {
  if (!source || !target) {
    throw Error(ErrorCode::InvalidArgument, "map needs both endpoints");
  }
  require_same_monoid(*source, *target, "act map");
  if (static_cast<int>(mapping.size()) != source->size()) {
    throw Error(ErrorCode::InvalidArgument, "mapping has wrong length");
  }
  for (Idx v : mapping) {
    if (v < 0 || v >= target->size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "mapping value " + std::to_string(v) + " outside target",
                  {v});
    }
  }
  int n = source->monoid()->order();
  for (int x = 0; x < source->size(); ++x) {
    for (int s = 0; s < n; ++s) {
      if (mapping[static_cast<size_t>(source->act(x, s))] !=
          target->act(mapping[static_cast<size_t>(x)], s)) {
        throw Error(ErrorCode::NotEquivariant,
                    "f(x*s) != f(x)*s at (" + std::to_string(x) + "," +
                        std::to_string(s) + ")",
                    {x, s});
      }
    }
  }
  return ActMap(std::move(source), std::move(target), std::move(mapping));
}

ActMap ActMap::identity(const ActPtr& act) {
  std::vector<Idx> mapping(static_cast<size_t>(act->size()));
  std::iota(mapping.begin(), mapping.end(), 0);
  return ActMap(act, act, std::move(mapping));
}

bool ActMap::is_mono() const {
  std::vector<bool> seen(static_cast<size_t>(target_->size()), false);
  for (Idx v : mapping_) {
    if (seen[static_cast<size_t>(v)]) {
      return false;
    }
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

bool ActMap::is_epi() const {
  std::vector<bool> seen(static_cast<size_t>(target_->size()), false);
  for (Idx v : mapping_) {
    seen[static_cast<size_t>(v)] = true;
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

std::vector<Idx> ActMap::image() const {
  std::set<Idx> im(mapping_.begin(), mapping_.end());
  return std::vector<Idx>(im.begin(), im.end());
}

ActMap ActMap::inverse() const {
  if (!is_mono()) {
    throw Error(ErrorCode::NotMono, "cannot invert a non-injective map");
  }
  if (!is_epi()) {
    throw Error(ErrorCode::NotEpi, "cannot invert a non-surjective map");
  }
  std::vector<Idx> inv(static_cast<size_t>(target_->size()));
  for (int x = 0; x < source_->size(); ++x) {
    inv[static_cast<size_t>(mapping_[static_cast<size_t>(x)])] = x;
  }
  return ActMap(target_, source_, std::move(inv));
}

ActMap compose(const ActMap& second, const ActMap& first) {
  if (first.target()->size() != second.source()->size() ||
      first.target()->flat_action() != second.source()->flat_action()) {
    throw Error(ErrorCode::MismatchedEndpoints,
                "composition endpoints do not match");
  }
  std::vector<Idx> mapping(first.mapping().size());
  for (size_t x = 0; x < mapping.size(); ++x) {
    mapping[x] = second.mapping()[static_cast<size_t>(first.mapping()[x])];
  }
  return ActMap(first.source(), second.target(), std::move(mapping));
}

bool SubactHandle::contains(Idx x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubactHandle make_subact(ActPtr parent, std::vector<Idx> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) {
    throw Error(ErrorCode::InvalidArgument, "subact must be nonempty");
  }
  SubactHandle sub{std::move(parent), std::move(members)};
  int n = sub.parent->monoid()->order();
  for (Idx x : sub.members) {
    if (x < 0 || x >= sub.parent->size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "member " + std::to_string(x) + " outside carrier", {x});
    }
    for (int s = 0; s < n; ++s) {
      if (!sub.contains(sub.parent->act(x, s))) {
        throw Error(ErrorCode::NotClosed,
                    "subset not closed: " + std::to_string(x) + "*" +
                        std::to_string(s) + " escapes",
                    {x, s});
      }
    }
  }
  return sub;
}

SubactAsAct subact_as_act(const SubactHandle& sub) {
  int n = sub.parent->monoid()->order();
  std::vector<Idx> pos(static_cast<size_t>(sub.parent->size()), -1);
  for (size_t i = 0; i < sub.members.size(); ++i) {
    pos[static_cast<size_t>(sub.members[i])] = static_cast<Idx>(i);
  }
  std::vector<std::vector<Idx>> action(sub.members.size());
  for (size_t i = 0; i < sub.members.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      action[i].push_back(pos[static_cast<size_t>(
          sub.parent->act(sub.members[i], s))]);
    }
  }
  ActPtr act = FiniteAct::make(sub.parent->monoid(), action);
  std::vector<Idx> incl(sub.members.begin(), sub.members.end());
  return SubactAsAct{act, ActMap::make(act, sub.parent, incl)};
}

FreeAct free_act(const MonoidPtr& m, int rank) {
  if (rank <= 0) {
    throw Error(ErrorCode::InvalidArgument, "free act rank must be positive");
  }
  int n = m->order();
  std::vector<std::vector<Idx>> action(static_cast<size_t>(rank * n));
  for (int a = 0; a < rank; ++a) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        action[static_cast<size_t>(a * n + s)].push_back(a * n + m->mul(s, t));
      }
    }
  }
  FreeAct result;
  result.act = FiniteAct::make(m, action);
  for (int a = 0; a < rank; ++a) {
    result.basis.push_back(a * n + m->identity());
  }
  return result;
}

Coproduct coproduct(const std::vector<ActPtr>& parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::InvalidArgument, "coproduct of no acts");
  }
  for (const auto& p : parts) {
    require_same_monoid(*parts.front(), *p, "coproduct");
  }
  int n = parts.front()->monoid()->order();
  Coproduct result;
  int offset = 0;
  std::vector<std::vector<Idx>> action;
  for (const auto& p : parts) {
    result.offsets.push_back(offset);
    for (int x = 0; x < p->size(); ++x) {
      std::vector<Idx> row;
      for (int s = 0; s < n; ++s) {
        row.push_back(offset + p->act(x, s));
      }
      action.push_back(std::move(row));
    }
    offset += p->size();
  }
  result.act = FiniteAct::make(parts.front()->monoid(), action);
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<Idx> mapping;
    for (int x = 0; x < parts[i]->size(); ++x) {
      mapping.push_back(result.offsets[i] + x);
    }
    result.injections.push_back(
        ActMap::make(parts[i], result.act, std::move(mapping)));
  }
  return result;
}

std::vector<SubactHandle> indecomposable_components(const ActPtr& x) {
  // x and x*s always land in the same component; the closure of that
  // relation is exactly the decomposition into indecomposable summands.
  int m = x->size();
  int n = x->monoid()->order();
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
  auto unite = [&](Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  };
  for (int e = 0; e < m; ++e) {
    for (int s = 0; s < n; ++s) {
      unite(e, x->act(e, s));
    }
  }
  std::vector<std::vector<Idx>> buckets(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) {
    buckets[static_cast<size_t>(find(e))].push_back(e);
  }
  std::vector<SubactHandle> out;
  for (auto& b : buckets) {
    if (!b.empty()) {
      out.push_back(make_subact(x, std::move(b)));
    }
  }
  return out;
}

std::vector<Idx> fixed_points(const FiniteAct& x) {
  std::vector<Idx> out;
  int n = x.monoid()->order();
  for (int e = 0; e < x.size(); ++e) {
    bool fixed = true;
    for (int s = 0; s < n && fixed; ++s) {
      fixed = x.act(e, s) == e;
    }
    if (fixed) {
      out.push_back(e);
    }
  }
  return out;
}

SubactHandle generated_subact(const ActPtr& x, const std::vector<Idx>& seed) {
  if (seed.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty generating set");
  }
  int n = x->monoid()->order();
  std::vector<bool> in(static_cast<size_t>(x->size()), false);
  std::vector<Idx> queue;
  for (Idx e : seed) {
    if (e < 0 || e >= x->size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "seed element " + std::to_string(e) + " outside carrier",
                  {e});
    }
    if (!in[static_cast<size_t>(e)]) {
      in[static_cast<size_t>(e)] = true;
      queue.push_back(e);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      Idx y = x->act(queue[i], s);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Idx> members;
  for (int e = 0; e < x->size(); ++e) {
    if (in[static_cast<size_t>(e)]) {
      members.push_back(e);
    }
  }
  return make_subact(x, std::move(members));
}

std::vector<SubactHandle> all_subacts(const ActPtr& x) {
  // Every subact is a union of principal ones, so close the distinct
  // principals under union instead of scanning all subsets of the carrier.
  std::set<std::vector<Idx>> principals;
  for (int e = 0; e < x->size(); ++e) {
    principals.insert(generated_subact(x, {e}).members);
  }
  std::vector<std::vector<Idx>> gens(principals.begin(), principals.end());
  std::set<std::vector<Idx>> found;
  std::vector<std::vector<Idx>> queue(gens);
  for (const auto& g : gens) {
    found.insert(g);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<Idx> u;
      std::set_union(queue[i].begin(), queue[i].end(), g.begin(), g.end(),
                     std::back_inserter(u));
      if (found.insert(u).second) {
        queue.push_back(std::move(u));
      }
    }
  }
  std::vector<SubactHandle> out;
  for (const auto& members : found) {
    out.push_back(make_subact(x, members));
  }
  return out;
}

}  // namespace actlab
