#include "actlab/covers.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "actlab/error.hpp"

namespace actlab {

namespace {

constexpr int kMaxSearchBound = 8;

void require_in_class(const ActPtr& c, ClassLabel label) {
  ClassVerdict verdict = act_in_class(c, label);
  if (!verdict.member) {
    throw Error(ErrorCode::ClassMembershipFails,
                "source act is not " + to_string(label) + ": " + verdict.detail,
                std::vector<int>(verdict.witness.begin(),
                                 verdict.witness.end()));
  }
}

struct FactorizationScan {
  bool ok = true;
  std::vector<FactorizationRecord> records;
  int family_index = -1;
  std::vector<Idx> test_map;
  std::string detail;
};

// For every test map h from a family member into the target, counts the
// maps f into the source with g∘f = h and keeps the first.
FactorizationScan scan_factorizations(const ActMap& g, const TestFamily& family,
                                      bool require_unique) {
  FactorizationScan scan;
  for (size_t xi = 0; xi < family.members.size(); ++xi) {
    const ActPtr& x = family.members[xi];
    std::vector<ActMap> tests = enumerate_homs(x, g.target());
    std::vector<ActMap> lifts = enumerate_homs(x, g.source());
    for (const ActMap& h : tests) {
      const ActMap* first = nullptr;
      int count = 0;
      for (const ActMap& f : lifts) {
        bool commutes = true;
        for (Idx i = 0; i < x->size() && commutes; ++i) {
          commutes = g(f(i)) == h(i);
        }
        if (commutes) {
          if (first == nullptr) {
            first = &f;
          }
          ++count;
        }
      }
      if (count == 0) {
        scan.ok = false;
        scan.family_index = static_cast<int>(xi);
        scan.test_map = h.mapping();
        scan.detail = "no factorization for a test map from family member " +
                      std::to_string(xi);
        return scan;
      }
      if (require_unique && count > 1) {
        scan.ok = false;
        scan.family_index = static_cast<int>(xi);
        scan.test_map = h.mapping();
        scan.detail = "test map from family member " + std::to_string(xi) +
                      " admits " + std::to_string(count) + " factorizations";
        return scan;
      }
      scan.records.push_back(FactorizationRecord{
          static_cast<int>(xi), h.mapping(), first->mapping(), count});
    }
  }
  return scan;
}

struct EndoScan {
  bool ok = true;
  std::vector<EndoRecord> records;
  std::vector<Idx> offender;
};

// Enumerates the endomorphisms of the source that g coequalises with
// itself; the cover condition demands that every one of them be invertible.
EndoScan scan_endos(const ActMap& g) {
  EndoScan scan;
  for (const ActMap& f : enumerate_homs(g.source(), g.source())) {
    bool fixes = true;
    for (Idx i = 0; i < g.source()->size() && fixes; ++i) {
      fixes = g(f(i)) == g(i);
    }
    if (!fixes) {
      continue;
    }
    if (!f.is_iso()) {
      scan.ok = false;
      scan.offender = f.mapping();
      return scan;
    }
    scan.records.push_back(EndoRecord{f.mapping(), f.inverse().mapping()});
  }
  return scan;
}

CoverReport failure_from(const FactorizationScan& scan) {
  CoverReport report;
  report.family_index = scan.family_index;
  report.test_map = scan.test_map;
  report.detail = scan.detail;
  return report;
}

}  // namespace

TestFamily TestFamily::make(ClassLabel label, std::vector<ActPtr> members,
                            std::string provenance) {
  for (size_t i = 0; i < members.size(); ++i) {
    ClassVerdict verdict = act_in_class(members[i], label);
    if (!verdict.member) {
      throw Error(ErrorCode::ClassMembershipFails,
                  "family member " + std::to_string(i) + " is not " +
                      to_string(label) + ": " + verdict.detail,
                  {static_cast<int>(i)});
    }
  }
  return TestFamily{label, std::move(members), std::move(provenance)};
}

TestFamily class_family(const MonoidPtr& m, ClassLabel label, int size_bound) {
  std::vector<ActPtr> members;
  for (const ActPtr& x : enumerate_acts_up_to(m, size_bound, true)) {
    if (act_in_class(x, label).member) {
      members.push_back(x);
    }
  }
  std::ostringstream provenance;
  provenance << to_string(label) << " acts of size <= " << size_bound
             << " over a monoid of order " << m->order()
             << ", up to isomorphism";
  return TestFamily{label, std::move(members), provenance.str()};
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::PrecoverRelative:
      return "precover-relative";
    case CertificateKind::Cover:
      return "cover";
    case CertificateKind::UmpCover:
      return "ump-cover";
  }
  return "unknown";
}

bool CoverCertificate::replay() const {
  const std::vector<Idx>& g = map.mapping();
  for (const FactorizationRecord& rec : factorizations) {
    if (rec.family_index < 0 ||
        rec.family_index >= static_cast<int>(family.members.size())) {
      return false;
    }
    if (rec.test_map.size() != rec.factor_map.size() || rec.factor_count < 1) {
      return false;
    }
    for (size_t i = 0; i < rec.test_map.size(); ++i) {
      Idx f = rec.factor_map[i];
      if (f < 0 || f >= static_cast<Idx>(g.size()) ||
          g[static_cast<size_t>(f)] != rec.test_map[i]) {
        return false;
      }
    }
  }
  for (const EndoRecord& rec : endos) {
    if (rec.endo.size() != g.size() || rec.inverse.size() != g.size()) {
      return false;
    }
    for (size_t i = 0; i < g.size(); ++i) {
      Idx e = rec.endo[i];
      if (e < 0 || e >= static_cast<Idx>(g.size())) {
        return false;
      }
      if (g[static_cast<size_t>(e)] != g[i]) {
        return false;
      }
      if (rec.inverse[static_cast<size_t>(e)] != static_cast<Idx>(i) ||
          rec.endo[static_cast<size_t>(rec.inverse[i])] !=
              static_cast<Idx>(i)) {
        return false;
      }
    }
  }
  return true;
}

CoverReport is_precover_rel(const ActMap& g, const TestFamily& family) {
  require_in_class(g.source(), family.label);
  FactorizationScan scan = scan_factorizations(g, family, false);
  if (!scan.ok) {
    return failure_from(scan);
  }
  CoverReport report;
  report.certificate =
      CoverCertificate{g, CertificateKind::PrecoverRelative, family,
                       std::move(scan.records), {}};
  return report;
}

CoverReport is_cover(const ActMap& g, const TestFamily& family) {
  require_in_class(g.source(), family.label);
  FactorizationScan scan = scan_factorizations(g, family, false);
  if (!scan.ok) {
    return failure_from(scan);
  }
  EndoScan endos = scan_endos(g);
  if (!endos.ok) {
    CoverReport report;
    report.test_map = endos.offender;
    report.detail = "an endomorphism coequalised with the map is not an "
                    "isomorphism";
    return report;
  }
  CoverReport report;
  report.certificate = CoverCertificate{g, CertificateKind::Cover, family,
                                        std::move(scan.records),
                                        std::move(endos.records)};
  return report;
}

CoverReport has_ump(const ActMap& g, const TestFamily& family) {
  require_in_class(g.source(), family.label);
  FactorizationScan scan = scan_factorizations(g, family, true);
  if (!scan.ok) {
    return failure_from(scan);
  }
  CoverReport report;
  report.certificate = CoverCertificate{g, CertificateKind::UmpCover, family,
                                        std::move(scan.records), {}};
  return report;
}

CoessentialReport is_coessential(const ActMap& g) {
  if (!g.is_epi()) {
    throw Error(ErrorCode::NotEpi, "coessential check needs an epimorphism");
  }
  CoessentialReport report;
  for (const SubactHandle& sub : all_subacts(g.source())) {
    if (!sub.is_proper()) {
      continue;
    }
    std::vector<bool> hit(static_cast<size_t>(g.target()->size()), false);
    for (Idx x : sub.members) {
      hit[static_cast<size_t>(g(x))] = true;
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      report.ok = false;
      report.witness = sub;
      return report;
    }
  }
  report.ok = true;
  return report;
}

ActMap free_precover(const ActPtr& a) {
  FreeAct domain = free_act(a->monoid(), a->size());
  int order = a->monoid()->order();
  std::vector<Idx> mapping(static_cast<size_t>(domain.act->size()));
  for (Idx gen = 0; gen < a->size(); ++gen) {
    for (Idx s = 0; s < order; ++s) {
      mapping[static_cast<size_t>(gen * order + s)] = a->act(gen, s);
    }
  }
  return ActMap::make(domain.act, a, std::move(mapping));
}

std::optional<CoverCertificate> divisible_cover(const ActPtr& a,
                                                int family_bound) {
  auto largest = largest_divisible_subact(a);
  if (!largest.has_value()) {
    return std::nullopt;
  }
  SubactAsAct inclusion = subact_as_act(*largest);
  TestFamily family =
      class_family(a->monoid(), ClassLabel::Divisible, family_bound);
  CoverReport ump = has_ump(inclusion.inclusion, family);
  if (!ump.ok()) {
    throw Error(ErrorCode::InvalidArgument,
                "largest divisible subact failed its own certification: " +
                    ump.detail);
  }
  EndoScan endos = scan_endos(inclusion.inclusion);
  if (!endos.ok) {
    throw Error(ErrorCode::InvalidArgument,
                "largest divisible subact admits a non-invertible "
                "coequalised endomorphism");
  }
  CoverCertificate certificate = std::move(*ump.certificate);
  certificate.endos = std::move(endos.records);
  return certificate;
}

std::optional<CoverCertificate> search_cover(const ActPtr& a, ClassLabel label,
                                             int size_bound) {
  if (size_bound < 1 || size_bound > kMaxSearchBound) {
    throw Error(ErrorCode::BoundExceeded,
                "cover search bound must lie in 1.." +
                    std::to_string(kMaxSearchBound),
                {size_bound});
  }
  if (label == ClassLabel::Divisible) {
    return divisible_cover(a, size_bound);
  }
  MonoidPtr m = a->monoid();
  TestFamily family = class_family(m, label, size_bound);

  std::vector<ActPtr> candidates;
  if (label == ClassLabel::Free) {
    // A free cover of a one-element act can only be free on one generator,
    // so for such targets a miss among these candidates is conclusive.
    int max_rank = std::max(size_bound / m->order(), 1);
    for (int rank = 1; rank <= max_rank; ++rank) {
      candidates.push_back(free_act(m, rank).act);
    }
  } else {
    candidates = family.members;
  }

  for (const ActPtr& c : candidates) {
    for (const ActMap& g : enumerate_homs(c, a)) {
      CoverReport report = is_cover(g, family);
      if (report.ok()) {
        return std::move(*report.certificate);
      }
    }
  }
  return std::nullopt;
}

}  // namespace actlab
