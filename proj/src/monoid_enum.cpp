#include <algorithm>
#include <numeric>
#include <set>

#include "actlab/monoid.hpp"

namespace actlab {

namespace {

// Shared state for the table backtracking search.  Entries are -1 while
// undecided; row and column of the identity (index 0) are fixed up front.
struct TableSearch {
  int n;
  std::vector<Idx> cell;  // n*n, -1 = unassigned

  Idx at(int s, int t) const { return cell[static_cast<size_t>(s * n + t)]; }
  void set(int s, int t, Idx v) { cell[static_cast<size_t>(s * n + t)] = v; }

  // Checks every associativity triple whose three lookups are already
  // decided.  Partial tables only ever fail here, never at the leaves.
  bool consistent() const {
    for (int s = 1; s < n; ++s) {
      for (int t = 1; t < n; ++t) {
        Idx st = at(s, t);
        if (st < 0) {
          continue;
        }
        for (int u = 1; u < n; ++u) {
          Idx tu = at(t, u);
          if (tu < 0) {
            continue;
          }
          Idx l = at(st, u);
          Idx r = at(s, tu);
          if (l >= 0 && r >= 0 && l != r) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

void fill_cells(TableSearch& ts, size_t pos, const std::vector<std::pair<int, int>>& cells,
                std::vector<std::vector<Idx>>& out) {
  if (pos == cells.size()) {
    out.push_back(ts.cell);
    return;
  }
  auto [s, t] = cells[pos];
  for (Idx v = 0; v < ts.n; ++v) {
    ts.set(s, t, v);
    if (ts.consistent()) {
      fill_cells(ts, pos + 1, cells, out);
    }
  }
  ts.set(s, t, -1);
}

// All associative tables on 0..n-1 whose identity is the element 0.
std::vector<std::vector<Idx>> tables_with_identity_zero(int n) {
  TableSearch ts;
  ts.n = n;
  ts.cell.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    ts.set(0, s, s);
    ts.set(s, 0, s);
  }
  std::vector<std::pair<int, int>> cells;
  for (int s = 1; s < n; ++s) {
    for (int t = 1; t < n; ++t) {
      cells.emplace_back(s, t);
    }
  }
  std::vector<std::vector<Idx>> out;
  fill_cells(ts, 0, cells, out);
  return out;
}

std::vector<Idx> relabel(const std::vector<Idx>& flat, int n,
                         const std::vector<Idx>& perm) {
  std::vector<Idx> out(flat.size());
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      out[static_cast<size_t>(perm[static_cast<size_t>(s)] * n +
                              perm[static_cast<size_t>(t)])] =
          perm[static_cast<size_t>(flat[static_cast<size_t>(s * n + t)])];
    }
  }
  return out;
}

bool is_canonical_fixing_zero(const std::vector<Idx>& flat, int n) {
  std::vector<Idx> perm(static_cast<size_t>(n));
  std::iota(perm.begin() + 1, perm.end(), 1);
  perm[0] = 0;
  do {
    if (relabel(flat, n, perm) < flat) {
      return false;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return true;
}

MonoidPtr from_flat(const std::vector<Idx>& flat, int n, Idx identity) {
  std::vector<std::vector<Idx>> rows(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    rows[static_cast<size_t>(s)].assign(
        flat.begin() + s * n, flat.begin() + (s + 1) * n);
  }
  return FiniteMonoid::make(rows, identity);
}

}  // namespace

std::vector<MonoidPtr> enumerate_monoids(int order, bool up_to_iso, int cap) {
  if (order < 1) {
    throw Error(ErrorCode::InvalidArgument, "order must be positive");
  }
  if (order > cap) {
    throw Error(ErrorCode::BoundExceeded,
                "order " + std::to_string(order) + " above cap " +
                    std::to_string(cap),
                {order, cap});
  }
  auto base = tables_with_identity_zero(order);
  std::vector<MonoidPtr> out;
  if (up_to_iso) {
    for (const auto& flat : base) {
      if (is_canonical_fixing_zero(flat, order)) {
        out.push_back(from_flat(flat, order, 0));
      }
    }
    std::sort(out.begin(), out.end(), [](const MonoidPtr& a, const MonoidPtr& b) {
      return a->flat_table() < b->flat_table();
    });
    return out;
  }
  // Every monoid table is a relabelling of one whose identity sits at 0.
  std::set<std::vector<Idx>> seen;
  std::vector<Idx> perm(static_cast<size_t>(order));
  for (const auto& flat : base) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      seen.insert(relabel(flat, order, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& flat : seen) {
    Idx identity = -1;
    for (int e = 0; e < order && identity < 0; ++e) {
      bool ok = true;
      for (int s = 0; s < order && ok; ++s) {
        ok = flat[static_cast<size_t>(e * order + s)] == s &&
             flat[static_cast<size_t>(s * order + e)] == s;
      }
      if (ok) {
        identity = e;
      }
    }
    out.push_back(from_flat(flat, order, identity));
  }
  return out;
}

std::optional<std::vector<Idx>> find_monoid_isomorphism(const FiniteMonoid& a,
                                                        const FiniteMonoid& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  int n = a.order();
  std::vector<Idx> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  do {
    if (perm[static_cast<size_t>(a.identity())] != b.identity()) {
      continue;
    }
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
      for (int t = 0; t < n && ok; ++t) {
        ok = perm[static_cast<size_t>(a.mul(s, t))] ==
             b.mul(perm[static_cast<size_t>(s)], perm[static_cast<size_t>(t)]);
      }
    }
    if (ok) {
      return perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace actlab
