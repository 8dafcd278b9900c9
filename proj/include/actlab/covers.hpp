#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/classes.hpp"

namespace actlab {

// A finite set of acts drawn from one membership class. Precover and cover
// certification is always relative to such a family: the definitional
// quantifier ranges over every act in the class, which is not enumerable,
// so each certificate names the family it was checked against.
struct TestFamily {
  ClassLabel label;
  std::vector<ActPtr> members;
  std::string provenance;

  // Validates every member against the class before accepting it.
  static TestFamily make(ClassLabel label, std::vector<ActPtr> members,
                         std::string provenance);
};

// All acts of size <= size_bound over m that belong to the class,
// enumerated up to isomorphism.
TestFamily class_family(const MonoidPtr& m, ClassLabel label, int size_bound);

enum class CertificateKind { PrecoverRelative, Cover, UmpCover };

std::string to_string(CertificateKind kind);

// One factorization recorded during certification: for the test map h
// (the factor_count-many f with g∘f = h, the first is kept).
struct FactorizationRecord {
  int family_index = 0;
  std::vector<Idx> test_map;    // h: X -> A
  std::vector<Idx> factor_map;  // f: X -> C with g∘f = h
  int factor_count = 0;
};

// An endomorphism f of the source with g∘f = g, paired with its inverse.
struct EndoRecord {
  std::vector<Idx> endo;
  std::vector<Idx> inverse;
};

struct CoverCertificate {
  ActMap map;
  CertificateKind kind;
  TestFamily family;
  std::vector<FactorizationRecord> factorizations;
  std::vector<EndoRecord> endos;

  // Recomposes every recorded factorization and endomorphism pair.
  bool replay() const;
};

// Success carries the certificate; failure names the first test map with no
// factorization (or, for the unique mapping property, more than one).
struct CoverReport {
  std::optional<CoverCertificate> certificate;
  int family_index = -1;
  std::vector<Idx> test_map;
  std::string detail;

  bool ok() const { return certificate.has_value(); }
};

// Checks that every map from a family member into the target factors
// through g. Throws ClassMembershipFails when the source of g is not in
// the family's class.
CoverReport is_precover_rel(const ActMap& g, const TestFamily& family);

// Precover certification plus the exact endomorphism condition: every endo
// f of the source with g∘f = g must be an isomorphism. The endomorphism
// half is absolute, only the precover half is family-relative.
CoverReport is_cover(const ActMap& g, const TestFamily& family);

// Cover certification in which every factorization must also be unique.
CoverReport has_ump(const ActMap& g, const TestFamily& family);

// True when no proper subact of the source still maps onto the target
// under g; the witness names an offending subact otherwise. Throws NotEpi
// when g is not surjective.
struct CoessentialReport {
  bool ok = false;
  std::optional<SubactHandle> witness;
};
CoessentialReport is_coessential(const ActMap& g);

// The evaluation map from the free act on |A| generators onto A, sending
// the pair (a, s) to a·s. Always an epimorphism.
ActMap free_precover(const ActPtr& a);

// Inclusion of the largest divisible subact of A, certified as a cover
// with the unique mapping property against the family of divisible acts of
// size <= family_bound. Empty when A has no divisible subact.
std::optional<CoverCertificate> divisible_cover(const ActPtr& a,
                                                int family_bound = 4);

// Bounded search for a cover of A in the class, certified against the
// family of class members of size <= size_bound over the same monoid.
// For the free class, candidates are restricted to acts isomorphic to the
// monoid itself: a free cover of a one-element act is necessarily of that
// shape, so a miss is conclusive there. For the divisible class this
// delegates to divisible_cover. Otherwise a miss only means no cover
// exists within the bound.
std::optional<CoverCertificate> search_cover(const ActPtr& a, ClassLabel label,
                                             int size_bound);

}  // namespace actlab
