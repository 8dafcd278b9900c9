#include <algorithm>
#include <numeric>

#include "actlab/act.hpp"

namespace actlab {

namespace {

// Backtracking over images with forward closure: assigning f(x) forces
// f(x*s) for every s, so branching only happens on generators of what is
// left.  Candidates are tried in increasing target order from the least
// unassigned source index, which makes the output lexicographic.
class HomSearch {
 public:
  HomSearch(const ActPtr& source, const ActPtr& target, HomFilter filter,
            bool first_only)
      : x_(source),
        y_(target),
        filter_(filter),
        first_only_(first_only),
        img_(static_cast<size_t>(source->size()), -1),
        used_(static_cast<size_t>(target->size()), 0) {
    if (!same_monoid(*source->monoid(), *target->monoid())) {
      throw Error(ErrorCode::MixedMonoids,
                  "hom search: acts live over different monoids");
    }
  }

  std::vector<ActMap> run() {
    if ((filter_ == HomFilter::Mono || filter_ == HomFilter::Iso) &&
        x_->size() > y_->size()) {
      return {};
    }
    if ((filter_ == HomFilter::Epi || filter_ == HomFilter::Iso) &&
        x_->size() < y_->size()) {
      return {};
    }
    extend();
    return std::move(found_);
  }

 private:
  bool injective_mode() const {
    return filter_ == HomFilter::Mono || filter_ == HomFilter::Iso;
  }

  // Returns false on conflict; records every assignment in trail for undo.
  bool assign(Idx x, Idx y, std::vector<Idx>& trail) {
    if (img_[static_cast<size_t>(x)] >= 0) {
      return img_[static_cast<size_t>(x)] == y;
    }
    if (injective_mode() && used_[static_cast<size_t>(y)] > 0) {
      return false;
    }
    img_[static_cast<size_t>(x)] = y;
    ++used_[static_cast<size_t>(y)];
    trail.push_back(x);
    int n = x_->monoid()->order();
    for (size_t i = trail.size() - 1; i < trail.size(); ++i) {
      Idx z = trail[i];
      for (int s = 0; s < n; ++s) {
        Idx zs = x_->act(z, s);
        Idx want = y_->act(img_[static_cast<size_t>(z)], s);
        Idx have = img_[static_cast<size_t>(zs)];
        if (have < 0) {
          if (injective_mode() && used_[static_cast<size_t>(want)] > 0) {
            return false;
          }
          img_[static_cast<size_t>(zs)] = want;
          ++used_[static_cast<size_t>(want)];
          trail.push_back(zs);
        } else if (have != want) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Idx>& trail) {
    for (Idx x : trail) {
      --used_[static_cast<size_t>(img_[static_cast<size_t>(x)])];
      img_[static_cast<size_t>(x)] = -1;
    }
  }

  void extend() {
    if (first_only_ && !found_.empty()) {
      return;
    }
    int free = -1;
    for (int x = 0; x < x_->size(); ++x) {
      if (img_[static_cast<size_t>(x)] < 0) {
        free = x;
        break;
      }
    }
    if (free < 0) {
      emit();
      return;
    }
    for (Idx y = 0; y < y_->size(); ++y) {
      std::vector<Idx> trail;
      if (assign(free, y, trail)) {
        extend();
      }
      undo(trail);
      if (first_only_ && !found_.empty()) {
        return;
      }
    }
  }

  void emit() {
    if (filter_ == HomFilter::Epi || filter_ == HomFilter::Iso) {
      for (int t = 0; t < y_->size(); ++t) {
        if (used_[static_cast<size_t>(t)] == 0) {
          return;
        }
      }
    }
    found_.push_back(ActMap::make(x_, y_, img_));
  }

  ActPtr x_;
  ActPtr y_;
  HomFilter filter_;
  bool first_only_;
  std::vector<Idx> img_;
  std::vector<int> used_;
  std::vector<ActMap> found_;
};

std::vector<Idx> relabel_action(const std::vector<Idx>& flat, int m, int n,
                                const std::vector<Idx>& perm) {
  std::vector<Idx> out(flat.size());
  for (int x = 0; x < m; ++x) {
    for (int s = 0; s < n; ++s) {
      out[static_cast<size_t>(perm[static_cast<size_t>(x)] * n + s)] =
          perm[static_cast<size_t>(flat[static_cast<size_t>(x * n + s)])];
    }
  }
  return out;
}

bool action_is_canonical(const std::vector<Idx>& flat, int m, int n) {
  std::vector<Idx> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (relabel_action(flat, m, n, perm) < flat) {
      return false;
    }
  }
  return true;
}

// Assignment of one carrier transformation per monoid element, closed under
// the multiplication table.  Transformations compose contravariantly:
// x * (s*t) = (x*s)*t.
class ActSearch {
 public:
  ActSearch(const MonoidPtr& m, int size, bool up_to_iso)
      : m_(m), size_(size), up_to_iso_(up_to_iso) {
    int n = m_->order();
    trans_.assign(static_cast<size_t>(n), {});
    std::vector<Idx> id(static_cast<size_t>(size_));
    std::iota(id.begin(), id.end(), 0);
    trans_[static_cast<size_t>(m_->identity())] = id;
  }

  std::vector<ActPtr> run() {
    extend();
    std::sort(out_.begin(), out_.end(), [](const ActPtr& a, const ActPtr& b) {
      return a->flat_action() < b->flat_action();
    });
    return std::move(out_);
  }

 private:
  bool assigned(Idx s) const { return !trans_[static_cast<size_t>(s)].empty(); }

  std::vector<Idx> product(Idx s, Idx t) const {
    // transformation of s*t given those of s and t
    const auto& ts = trans_[static_cast<size_t>(s)];
    const auto& tt = trans_[static_cast<size_t>(t)];
    std::vector<Idx> out(static_cast<size_t>(size_));
    for (int x = 0; x < size_; ++x) {
      out[static_cast<size_t>(x)] =
          tt[static_cast<size_t>(ts[static_cast<size_t>(x)])];
    }
    return out;
  }

  bool propagate(std::vector<Idx>& trail) {
    int n = m_->order();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Idx s = 0; s < n; ++s) {
        if (!assigned(s)) {
          continue;
        }
        for (Idx t = 0; t < n; ++t) {
          if (!assigned(t)) {
            continue;
          }
          Idx w = m_->mul(s, t);
          auto comp = product(s, t);
          if (!assigned(w)) {
            trans_[static_cast<size_t>(w)] = comp;
            trail.push_back(w);
            changed = true;
          } else if (trans_[static_cast<size_t>(w)] != comp) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void extend() {
    int n = m_->order();
    Idx free = -1;
    for (Idx s = 0; s < n; ++s) {
      if (!assigned(s)) {
        free = s;
        break;
      }
    }
    if (free < 0) {
      emit();
      return;
    }
    std::vector<Idx> candidate(static_cast<size_t>(size_), 0);
    for (;;) {
      trans_[static_cast<size_t>(free)] = candidate;
      std::vector<Idx> trail;
      if (propagate(trail)) {
        extend();
      }
      for (Idx w : trail) {
        trans_[static_cast<size_t>(w)].clear();
      }
      trans_[static_cast<size_t>(free)].clear();
      // odometer over transformations
      int i = 0;
      while (i < size_ && candidate[static_cast<size_t>(i)] == size_ - 1) {
        candidate[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == size_) {
        break;
      }
      ++candidate[static_cast<size_t>(i)];
    }
  }

  void emit() {
    int n = m_->order();
    std::vector<Idx> flat(static_cast<size_t>(size_) * static_cast<size_t>(n));
    for (int x = 0; x < size_; ++x) {
      for (Idx s = 0; s < n; ++s) {
        flat[static_cast<size_t>(x * n + s)] =
            trans_[static_cast<size_t>(s)][static_cast<size_t>(x)];
      }
    }
    if (up_to_iso_ && !action_is_canonical(flat, size_, n)) {
      return;
    }
    std::vector<std::vector<Idx>> rows(static_cast<size_t>(size_));
    for (int x = 0; x < size_; ++x) {
      rows[static_cast<size_t>(x)].assign(flat.begin() + x * n,
                                          flat.begin() + (x + 1) * n);
    }
    out_.push_back(FiniteAct::make(m_, rows));
  }

  MonoidPtr m_;
  int size_;
  bool up_to_iso_;
  std::vector<std::vector<Idx>> trans_;
  std::vector<ActPtr> out_;
};

}  // namespace

std::vector<ActMap> enumerate_homs(const ActPtr& source, const ActPtr& target,
                                   HomFilter filter) {
  return HomSearch(source, target, filter, false).run();
}

std::optional<ActMap> find_hom(const ActPtr& source, const ActPtr& target,
                               HomFilter filter) {
  auto found = HomSearch(source, target, filter, true).run();
  if (found.empty()) {
    return std::nullopt;
  }
  return found.front();
}

std::optional<ActMap> find_act_isomorphism(const ActPtr& a, const ActPtr& b) {
  if (a->size() != b->size()) {
    return std::nullopt;
  }
  return find_hom(a, b, HomFilter::Iso);
}

std::vector<ActPtr> enumerate_acts(const MonoidPtr& m, int size,
                                   bool up_to_iso) {
  if (size < 1) {
    throw Error(ErrorCode::InvalidArgument, "act size must be positive");
  }
  return ActSearch(m, size, up_to_iso).run();
}

std::vector<ActPtr> enumerate_acts_up_to(const MonoidPtr& m, int max_size,
                                         bool up_to_iso) {
  std::vector<ActPtr> out;
  for (int size = 1; size <= max_size; ++size) {
    auto batch = enumerate_acts(m, size, up_to_iso);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace actlab
