#include "actlab/monoid.hpp"

#include <algorithm>
#include <sstream>

#include "actlab/util.hpp"

namespace actlab {

std::string percent_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    bool plain = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                 (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '~' ||
                 c == '-';
    if (plain) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs, const std::string& sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      os << sep;
    }
    os << xs[i];
  }
  return os.str();
}

std::shared_ptr<const FiniteMonoid> FiniteMonoid::make(
    const std::vector<std::vector<Idx>>& table, Idx identity) {
  int n = static_cast<int>(table.size());
  if (n <= 0) {
    throw Error(ErrorCode::InvalidArgument, "monoid order must be positive");
  }
  if (identity < 0 || identity >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "identity index " + std::to_string(identity) +
                    " outside 0.." + std::to_string(n - 1),
                {identity});
  }
  std::vector<Idx> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(table[static_cast<size_t>(s)].size()) != n) {
      throw Error(ErrorCode::InvalidArgument,
                  "row " + std::to_string(s) + " has wrong length", {s});
    }
    for (int t = 0; t < n; ++t) {
      Idx v = table[static_cast<size_t>(s)][static_cast<size_t>(t)];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "entry (" + std::to_string(s) + "," + std::to_string(t) +
                        ") = " + std::to_string(v) + " outside 0.." +
                        std::to_string(n - 1),
                    {s, t, v});
      }
      flat[static_cast<size_t>(s * n + t)] = v;
    }
  }
  for (int s = 0; s < n; ++s) {
    if (flat[static_cast<size_t>(identity * n + s)] != s ||
        flat[static_cast<size_t>(s * n + identity)] != s) {
      throw Error(ErrorCode::IdentityLawFails,
                  "identity law fails at element " + std::to_string(s),
                  {s});
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Idx st = flat[static_cast<size_t>(s * n + t)];
      for (int u = 0; u < n; ++u) {
        Idx tu = flat[static_cast<size_t>(t * n + u)];
        if (flat[static_cast<size_t>(st * n + u)] !=
            flat[static_cast<size_t>(s * n + tu)]) {
          throw Error(ErrorCode::NotAssociative,
                      "(s*t)*u != s*(t*u) at (" + std::to_string(s) + "," +
                          std::to_string(t) + "," + std::to_string(u) + ")",
                      {s, t, u});
        }
      }
    }
  }
  return std::shared_ptr<const FiniteMonoid>(
      new FiniteMonoid(n, identity, std::move(flat)));
}

bool same_monoid(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (&a == &b) {
    return true;
  }
  return a.order() == b.order() && a.identity() == b.identity() &&
         a.flat_table() == b.flat_table();
}

bool element_property(const FiniteMonoid& m, Idx e, ElementKind kind) {
  int n = m.order();
  if (e < 0 || e >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(e) + " outside 0.." +
                    std::to_string(n - 1),
                {e});
  }
  switch (kind) {
    case ElementKind::LeftCancellative:
      for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
          if (m.mul(e, s) == m.mul(e, t)) {
            return false;
          }
        }
      }
      return true;
    case ElementKind::RightCancellative:
      for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
          if (m.mul(s, e) == m.mul(t, e)) {
            return false;
          }
        }
      }
      return true;
    case ElementKind::Cancellative:
      return element_property(m, e, ElementKind::LeftCancellative) &&
             element_property(m, e, ElementKind::RightCancellative);
    case ElementKind::LeftZero:
      for (int s = 0; s < n; ++s) {
        if (m.mul(e, s) != e) {
          return false;
        }
      }
      return true;
    case ElementKind::Unit:
      for (int f = 0; f < n; ++f) {
        if (m.mul(e, f) == m.identity() && m.mul(f, e) == m.identity()) {
          return true;
        }
      }
      return false;
    case ElementKind::Idempotent:
      return m.mul(e, e) == e;
    case ElementKind::Regular:
      for (int x = 0; x < n; ++x) {
        if (m.mul(m.mul(e, x), e) == e) {
          return true;
        }
      }
      return false;
  }
  return false;
}

PropertyVerdict monoid_property(const FiniteMonoid& m, MonoidKind kind) {
  int n = m.order();
  PropertyVerdict v;
  v.holds = true;
  switch (kind) {
    case MonoidKind::Group:
      for (int e = 0; e < n; ++e) {
        if (!element_property(m, e, ElementKind::Unit)) {
          return {false, {e}, {}};
        }
      }
      return v;
    case MonoidKind::LeftCancellative:
      for (int e = 0; e < n; ++e) {
        if (!element_property(m, e, ElementKind::LeftCancellative)) {
          return {false, {e}, {}};
        }
      }
      return v;
    case MonoidKind::RightCancellative:
      for (int e = 0; e < n; ++e) {
        if (!element_property(m, e, ElementKind::RightCancellative)) {
          return {false, {e}, {}};
        }
      }
      return v;
    case MonoidKind::Cancellative:
      for (int e = 0; e < n; ++e) {
        if (!element_property(m, e, ElementKind::Cancellative)) {
          return {false, {e}, {}};
        }
      }
      return v;
    case MonoidKind::Commutative:
      for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
          if (m.mul(s, t) != m.mul(t, s)) {
            return {false, {s, t}, {}};
          }
        }
      }
      return v;
    case MonoidKind::LeftReversible:
      // sS and tS must intersect for every pair s, t.
      for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
          bool meet = false;
          for (int u = 0; u < n && !meet; ++u) {
            for (int w = 0; w < n && !meet; ++w) {
              if (m.mul(s, u) == m.mul(t, w)) {
                meet = true;
                v.witnesses.push_back({s, t, u, w});
              }
            }
          }
          if (!meet) {
            return {false, {s, t}, {}};
          }
        }
      }
      return v;
    case MonoidKind::RightOre:
      for (int s = 0; s < n; ++s) {
        for (int c = 0; c < n; ++c) {
          if (!element_property(m, c, ElementKind::Cancellative)) {
            continue;
          }
          bool found = false;
          for (int d = 0; d < n && !found; ++d) {
            if (!element_property(m, d, ElementKind::Cancellative)) {
              continue;
            }
            for (int t = 0; t < n && !found; ++t) {
              if (m.mul(s, d) == m.mul(c, t)) {
                found = true;
                v.witnesses.push_back({s, c, t, d});
              }
            }
          }
          if (!found) {
            return {false, {s, c}, {}};
          }
        }
      }
      return v;
    case MonoidKind::Divisible:
      // a = d*c must be solvable for every a and left cancellative c.
      for (int c = 0; c < n; ++c) {
        if (!element_property(m, c, ElementKind::LeftCancellative)) {
          continue;
        }
        for (int a = 0; a < n; ++a) {
          bool found = false;
          for (int d = 0; d < n; ++d) {
            if (m.mul(d, c) == a) {
              found = true;
              v.witnesses.push_back({a, c, d, 0});
              break;
            }
          }
          if (!found) {
            return {false, {a, c}, {}};
          }
        }
      }
      return v;
    case MonoidKind::Regular:
      for (int e = 0; e < n; ++e) {
        if (!element_property(m, e, ElementKind::Regular)) {
          return {false, {e}, {}};
        }
      }
      return v;
    case MonoidKind::HasLeftZero:
      for (int e = 0; e < n; ++e) {
        if (element_property(m, e, ElementKind::LeftZero)) {
          v.witnesses.push_back({e, 0, 0, 0});
          return v;
        }
      }
      return {false, {}, {}};
  }
  return v;
}

bool ElementSubset::contains(Idx e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

ElementSubset cancellative_submonoid(const MonoidPtr& m) {
  ElementSubset sub;
  sub.monoid = m;
  int n = m->order();
  for (int e = 0; e < n; ++e) {
    if (element_property(*m, e, ElementKind::Cancellative)) {
      sub.members.push_back(e);
    }
  }
  // Closure is a theorem; verify it anyway so a bug here cannot propagate.
  sub.is_submonoid = sub.contains(m->identity());
  for (Idx a : sub.members) {
    for (Idx b : sub.members) {
      if (!sub.contains(m->mul(a, b))) {
        sub.is_submonoid = false;
      }
    }
  }
  if (!sub.is_submonoid) {
    throw Error(ErrorCode::NotClosed,
                "cancellative elements failed to form a submonoid");
  }
  return sub;
}

}  // namespace actlab
