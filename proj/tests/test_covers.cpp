#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "actlab/act.hpp"
#include "actlab/covers.hpp"
#include "actlab/error.hpp"
#include "actlab/monoid.hpp"
#include "fixtures.hpp"

using namespace actlab;

TEST_CASE("test families verify their members on construction") {
  MonoidPtr z2 = fixtures::z2();
  auto family = TestFamily::make(
      ClassLabel::Divisible, {fixtures::theta(z2), fixtures::self_act(z2)},
      "hand-picked");
  CHECK(family.members.size() == 2);

  REQUIRE_THROWS_MATCHES(
      TestFamily::make(ClassLabel::Free, {fixtures::theta(z2)}, "bad"), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::ClassMembershipFails &&
               e.witness() == std::vector<int>{0};
      }));
}

TEST_CASE("free precover is the evaluation epimorphism") {
  MonoidPtr z2 = fixtures::z2();

  ActMap onto_point = free_precover(fixtures::theta(z2));
  CHECK(onto_point.source()->size() == 2);
  CHECK(onto_point.is_epi());

  ActMap onto_self = free_precover(fixtures::self_act(fixtures::sl2()));
  CHECK(onto_self.source()->size() == 4);
  CHECK(onto_self.is_epi());

  ActMap onto_sink = free_precover(fixtures::sink_act_sl2(3));
  CHECK(onto_sink.source()->size() == 6);
  CHECK(onto_sink.is_epi());

  auto report = is_precover_rel(onto_point, class_family(z2, ClassLabel::Free, 4));
  REQUIRE(report.ok());
  CHECK(report.certificate->kind == CertificateKind::PrecoverRelative);
  CHECK(report.certificate->replay());
}

TEST_CASE("free precovers also serve the projective class") {
  MonoidPtr sl2 = fixtures::sl2();
  ActMap g = free_precover(fixtures::sink_act_sl2(3));
  auto report = is_precover_rel(g, class_family(sl2, ClassLabel::Projective, 4));
  CHECK(report.ok());
}

TEST_CASE("the free cover of the point over a group") {
  MonoidPtr z2 = fixtures::z2();
  ActMap g = free_precover(fixtures::theta(z2));
  TestFamily family = class_family(z2, ClassLabel::Free, 4);

  auto cover = is_cover(g, family);
  REQUIRE(cover.ok());
  CHECK(cover.certificate->kind == CertificateKind::Cover);
  CHECK(cover.certificate->endos.size() == 2);
  CHECK(cover.certificate->replay());

  // Both translations of the group commute with g, so the factorization of
  // the test map from the group is not unique.
  auto ump = has_ump(g, family);
  REQUIRE_FALSE(ump.ok());
  CHECK(ump.family_index == 0);
  CHECK(ump.test_map == std::vector<Idx>{0, 0});
  CHECK(ump.detail.find("2 factorizations") != std::string::npos);
}

TEST_CASE("the free precover of the point over the semilattice is no cover") {
  MonoidPtr sl2 = fixtures::sl2();
  ActMap g = free_precover(fixtures::theta(sl2));
  auto report = is_cover(g, class_family(sl2, ClassLabel::Free, 2));
  REQUIRE_FALSE(report.ok());
  CHECK(report.test_map == std::vector<Idx>{1, 1});
  CHECK(report.detail.find("isomorphism") != std::string::npos);
}

TEST_CASE("identity maps are covers against any family containing them") {
  MonoidPtr sl2 = fixtures::sl2();
  ActPtr sink2 = fixtures::sink_act_sl2(2);
  auto report = is_cover(ActMap::identity(sink2),
                         class_family(sl2, ClassLabel::Injective, 2));
  REQUIRE(report.ok());
  CHECK(report.certificate->endos.size() == 1);
  CHECK(report.certificate->endos[0].endo == std::vector<Idx>{0, 1});
}

TEST_CASE("precover failure replays against the hom enumeration") {
  MonoidPtr sl2 = fixtures::sl2();
  ActPtr s = fixtures::self_act(sl2);
  ActPtr point = fixtures::theta(sl2);
  ActMap g = ActMap::make(point, s, {1});

  TestFamily family = class_family(sl2, ClassLabel::TorsionFree, 2);
  auto report = is_precover_rel(g, family);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.family_index >= 0);

  const ActPtr& x = family.members[static_cast<size_t>(report.family_index)];
  ActMap h = ActMap::make(x, s, report.test_map);
  for (const ActMap& f : enumerate_homs(x, point)) {
    CHECK(compose(g, f).mapping() != h.mapping());
  }
}

TEST_CASE("class membership of the source is a precondition") {
  MonoidPtr z2 = fixtures::z2();
  ActMap g = ActMap::identity(fixtures::theta(z2));
  REQUIRE_THROWS_MATCHES(
      is_cover(g, class_family(z2, ClassLabel::Free, 2)), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::ClassMembershipFails;
      }));
}

TEST_CASE("coessential epimorphisms have no onto proper restriction") {
  CHECK(is_coessential(free_precover(fixtures::theta(fixtures::z2()))).ok);

  auto report = is_coessential(free_precover(fixtures::theta(fixtures::sl2())));
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->members == std::vector<Idx>{1});

  ActPtr point = fixtures::theta(fixtures::sl2());
  auto parts = coproduct({point, point});
  REQUIRE_THROWS_MATCHES(
      is_coessential(parts.injections[0]), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::NotEpi;
      }));
}

TEST_CASE("coessential free precover of the point characterises groups") {
  for (const MonoidPtr& m : enumerate_monoids(1, true)) {
    CHECK(is_coessential(free_precover(fixtures::theta(m))).ok);
  }
  for (int order = 2; order <= 3; ++order) {
    for (const MonoidPtr& m : enumerate_monoids(order, true)) {
      bool coessential = is_coessential(free_precover(fixtures::theta(m))).ok;
      CHECK(coessential == monoid_property(*m, MonoidKind::Group).holds);
    }
  }
}

TEST_CASE("divisible covers of finite acts are identity inclusions") {
  MonoidPtr m3 = fixtures::m3();
  for (const ActPtr& a : enumerate_acts_up_to(m3, 3, true)) {
    auto cert = divisible_cover(a, 4);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::UmpCover);
    CHECK(cert->map.source()->size() == a->size());
    CHECK(cert->map.is_iso());
    CHECK(cert->replay());

    // The certificate chain: unique factorization implies the cover and
    // precover conditions on the same inputs.
    CHECK(is_cover(cert->map, cert->family).ok());
    CHECK(is_precover_rel(cert->map, cert->family).ok());
  }
}

TEST_CASE("covers of the same act are isomorphic over it") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = coproduct({fixtures::self_act(z2), fixtures::theta(z2)}).act;
  ActPtr c = free_act(z2, 2).act;
  TestFamily family = class_family(z2, ClassLabel::Free, 4);

  ActMap g1 = ActMap::make(c, a, {0, 1, 2, 2});
  ActMap g2 = ActMap::make(c, a, {1, 0, 2, 2});
  REQUIRE(is_cover(g1, family).ok());
  REQUIRE(is_cover(g2, family).ok());

  bool found = false;
  for (const ActMap& phi : enumerate_homs(c, c, HomFilter::Iso)) {
    if (compose(g1, phi).mapping() == g2.mapping()) {
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("a coproduct of free precovers is a precover of the coproduct") {
  MonoidPtr z2 = fixtures::z2();
  ActMap g1 = free_precover(fixtures::theta(z2));
  ActMap g2 = free_precover(fixtures::self_act(z2));

  auto sources = coproduct({g1.source(), g2.source()});
  auto targets = coproduct({g1.target(), g2.target()});
  std::vector<Idx> mapping(static_cast<size_t>(sources.act->size()));
  for (Idx x = 0; x < g1.source()->size(); ++x) {
    mapping[static_cast<size_t>(sources.offsets[0] + x)] =
        targets.offsets[0] + g1(x);
  }
  for (Idx x = 0; x < g2.source()->size(); ++x) {
    mapping[static_cast<size_t>(sources.offsets[1] + x)] =
        targets.offsets[1] + g2(x);
  }
  ActMap joined = ActMap::make(sources.act, targets.act, std::move(mapping));

  CHECK(is_precover_rel(joined, class_family(z2, ClassLabel::Free, 6)).ok());
}

TEST_CASE("endomorphism audit matches a brute-force recomputation") {
  MonoidPtr z2 = fixtures::z2();
  ActMap g = free_precover(fixtures::theta(z2));
  auto cert = is_cover(g, class_family(z2, ClassLabel::Free, 2)).certificate;
  REQUIRE(cert.has_value());

  std::vector<std::vector<Idx>> brute;
  for (const ActMap& f : enumerate_homs(g.source(), g.source())) {
    if (compose(g, f).mapping() == g.mapping()) {
      brute.push_back(f.mapping());
    }
  }
  REQUIRE(cert->endos.size() == brute.size());
  for (size_t i = 0; i < brute.size(); ++i) {
    CHECK(cert->endos[i].endo == brute[i]);
  }
}

TEST_CASE("cover search over bounded candidates") {
  MonoidPtr z2 = fixtures::z2();
  MonoidPtr sl2 = fixtures::sl2();

  SECTION("the point over the group has a free cover") {
    auto cert = search_cover(fixtures::theta(z2), ClassLabel::Free, 4);
    REQUIRE(cert.has_value());
    CHECK(cert->map.source()->size() == 2);
    CHECK(cert->kind == CertificateKind::Cover);
  }

  SECTION("the point over the semilattice has none, conclusively") {
    CHECK_FALSE(
        search_cover(fixtures::theta(sl2), ClassLabel::Free, 4).has_value());
  }

  SECTION("injective covers over the semilattice are found") {
    ActPtr a = coproduct({fixtures::sink_act_sl2(2), fixtures::theta(sl2)}).act;
    REQUIRE(act_in_class(a, ClassLabel::Injective).member);
    auto cert = search_cover(a, ClassLabel::Injective, 4);
    REQUIRE(cert.has_value());
    CHECK(cert->map.is_iso());
  }

  SECTION("no injective candidate maps into a fixed-point-free act") {
    CHECK_FALSE(search_cover(fixtures::self_act(z2), ClassLabel::Injective, 3)
                    .has_value());
  }

  SECTION("divisible searches delegate to the divisible cover") {
    auto cert = search_cover(fixtures::sink_act_sl2(2), ClassLabel::Divisible, 4);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::UmpCover);
  }

  SECTION("oversized bounds are rejected") {
    REQUIRE_THROWS_MATCHES(
        search_cover(fixtures::theta(z2), ClassLabel::Free, 9), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.code() == ErrorCode::BoundExceeded &&
                 e.witness() == std::vector<int>{9};
        }));
  }
}
