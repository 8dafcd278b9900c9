#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <utility>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/colimit.hpp"
#include "actlab/error.hpp"
#include "fixtures.hpp"

using namespace actlab;

namespace {

// Chain X0 <= X1 of sink acts over the two-element semilattice, with the
// transition sending the free point to the new free point 0 and the sink to
// the sink.
SystemPtr sink_chain() {
  ActPtr x0 = fixtures::sink_act_sl2(2);
  ActPtr x1 = fixtures::sink_act_sl2(3);
  ActMap t01 = ActMap::make(x0, x1, {0, 2});
  std::map<std::pair<int, int>, ActMap> transitions;
  transitions.emplace(std::make_pair(0, 1), t01);
  return DirectSystem::make({x0, x1}, {{true, true}, {false, true}},
                            std::move(transitions));
}

}  // namespace

TEST_CASE("system validation rejects malformed input") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActMap swap = ActMap::make(a, a, {1, 0});
  ActMap id = ActMap::identity(a);

  SECTION("empty system") {
    REQUIRE_THROWS_MATCHES(
        DirectSystem::make({}, {}, {}), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.code() == ErrorCode::InvalidArgument;
        }));
  }

  SECTION("mixed monoids") {
    REQUIRE_THROWS_MATCHES(
        DirectSystem::make({a, fixtures::theta(fixtures::sl2())},
                           {{true, false}, {false, true}}, {}),
        Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.code() == ErrorCode::MixedMonoids;
        }));
  }

  SECTION("order must be reflexive") {
    try {
      DirectSystem::make({a}, {{false}}, {});
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(e.witness() == std::vector<int>{0});
    }
  }

  SECTION("order must be antisymmetric") {
    std::map<std::pair<int, int>, ActMap> transitions;
    transitions.emplace(std::make_pair(0, 1), id);
    transitions.emplace(std::make_pair(1, 0), id);
    try {
      DirectSystem::make({a, a}, {{true, true}, {true, true}},
                         std::move(transitions));
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(e.witness() == std::vector<int>{0, 1});
    }
  }

  SECTION("order must be transitive") {
    try {
      DirectSystem::make({a, a, a},
                         {{true, true, false},
                          {false, true, true},
                          {false, false, true}},
                         {});
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(e.witness() == std::vector<int>{0, 1, 2});
    }
  }

  SECTION("missing transition for a related pair") {
    try {
      DirectSystem::make({a, a}, {{true, true}, {false, true}}, {});
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(e.witness() == std::vector<int>{0, 1});
    }
  }

  SECTION("transition for an unrelated pair") {
    std::map<std::pair<int, int>, ActMap> transitions;
    transitions.emplace(std::make_pair(0, 1), id);
    REQUIRE_THROWS_AS(DirectSystem::make({a, a},
                                         {{true, false}, {false, true}},
                                         std::move(transitions)),
                      Error);
  }

  SECTION("identity transition must be the identity map") {
    std::map<std::pair<int, int>, ActMap> transitions;
    transitions.emplace(std::make_pair(0, 0), swap);
    REQUIRE_THROWS_AS(DirectSystem::make({a}, {{true}}, std::move(transitions)),
                      Error);
  }

  SECTION("transition endpoints must match the indexed acts") {
    ActPtr t = fixtures::theta(z2);
    std::map<std::pair<int, int>, ActMap> transitions;
    transitions.emplace(std::make_pair(0, 1), ActMap::identity(t));
    REQUIRE_THROWS_MATCHES(
        DirectSystem::make({a, a}, {{true, true}, {false, true}},
                           std::move(transitions)),
        Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.code() == ErrorCode::MismatchedEndpoints;
        }));
  }

  SECTION("transitions must compose functorially") {
    std::map<std::pair<int, int>, ActMap> transitions;
    transitions.emplace(std::make_pair(0, 1), id);
    transitions.emplace(std::make_pair(1, 2), id);
    transitions.emplace(std::make_pair(0, 2), swap);
    try {
      DirectSystem::make({a, a, a},
                         {{true, true, true},
                          {false, true, true},
                          {false, false, true}},
                         std::move(transitions));
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      CHECK(e.witness() == std::vector<int>{0, 1, 2});
    }
  }
}

TEST_CASE("directedness is computed from the order") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);

  auto antichain = DirectSystem::make(
      {a, fixtures::theta(z2)}, {{true, false}, {false, true}}, {});
  CHECK_FALSE(antichain->directed());

  CHECK(sink_chain()->directed());
}

TEST_CASE("colimit of a chain collapses along the transitions") {
  auto system = sink_chain();
  Cocone cocone = colimit(system);

  // Free point of X0 lands on the new free point, sink on sink; the extra
  // free point of X1 stays separate.
  REQUIRE(cocone.apex->size() == 3);
  CHECK(find_act_isomorphism(cocone.apex, fixtures::sink_act_sl2(3))
            .has_value());

  REQUIRE(cocone.legs.size() == 2);
  CHECK(compose(cocone.legs[1], system->transition(0, 1)).mapping() ==
        cocone.legs[0].mapping());
  CHECK(cocone.legs[1].is_iso());

  auto report = verify_universal(cocone, 4);
  INFO(report.failure);
  CHECK(report.ok);
  CHECK(report.probes_checked > 0);
  CHECK(report.cocones_checked > 0);
}

TEST_CASE("colimit of a constant chain of identities is the act itself") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActMap id = ActMap::identity(a);
  std::map<std::pair<int, int>, ActMap> transitions;
  transitions.emplace(std::make_pair(0, 1), id);
  transitions.emplace(std::make_pair(1, 2), id);
  transitions.emplace(std::make_pair(0, 2), id);
  auto system = DirectSystem::make({a, a, a},
                                   {{true, true, true},
                                    {false, true, true},
                                    {false, false, true}},
                                   std::move(transitions));

  Cocone cocone = colimit(system);
  REQUIRE(cocone.apex->size() == 2);
  CHECK(find_act_isomorphism(cocone.apex, a).has_value());
  for (const auto& leg : cocone.legs) {
    CHECK(leg.mapping() == cocone.legs.front().mapping());
  }

  auto report = verify_universal(cocone, 4);
  INFO(report.failure);
  CHECK(report.ok);
}

TEST_CASE("colimit of an antichain is the coproduct") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActPtr t = fixtures::theta(z2);
  auto system =
      DirectSystem::make({a, t}, {{true, false}, {false, true}}, {});

  Cocone cocone = colimit(system);
  REQUIRE(cocone.apex->size() == 3);
  CHECK(cocone.legs[0].is_mono());
  CHECK(cocone.legs[1].is_mono());

  auto report = verify_universal(cocone, 4);
  INFO(report.failure);
  CHECK(report.ok);
}

TEST_CASE("universality check rejects an apex with slack") {
  MonoidPtr sl2 = fixtures::sl2();
  ActPtr t = fixtures::theta(sl2);
  auto system = DirectSystem::make({t}, {{true}}, {});

  CHECK(verify_universal(colimit(system), 4).ok);

  // Embedding the point as the sink of a two-element act leaves the free
  // point unconstrained: a probe with two admissible images breaks
  // uniqueness of the mediating map.
  ActPtr padded = fixtures::sink_act_sl2(2);
  Cocone wrong;
  wrong.system = system;
  wrong.apex = padded;
  wrong.legs = {ActMap::make(t, padded, {1})};
  auto report = verify_universal(wrong, 4);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.failure.empty());
}

TEST_CASE("universality check rejects a non-commuting cocone") {
  auto system = sink_chain();
  Cocone cocone = colimit(system);
  // Precompose leg 0 with the non-identity endomorphism of X0 that swaps
  // nothing but moves the free point to the sink.
  ActPtr x0 = system->acts()[0];
  cocone.legs[0] = compose(cocone.legs[0], ActMap::make(x0, x0, {1, 1}));
  auto report = verify_universal(cocone, 4);
  CHECK_FALSE(report.ok);
  CHECK(report.failure.find("commute") != std::string::npos);
}

TEST_CASE("coequalizer of the two group translations is a point") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActMap id = ActMap::identity(a);
  ActMap shift = ActMap::make(a, a, {1, 0});

  auto coeq = coequalizer(id, shift);
  REQUIRE(coeq.act->size() == 1);
  CHECK(coeq.projection.is_epi());

  auto report = verify_universal_coequalizer(id, shift, coeq, 4);
  INFO(report.failure);
  CHECK(report.ok);
  CHECK(report.cocones_checked > 0);
}

TEST_CASE("coequalizer of an equal pair changes nothing") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActMap id = ActMap::identity(a);

  auto coeq = coequalizer(id, id);
  REQUIRE(coeq.act->size() == 2);
  CHECK(verify_universal_coequalizer(id, id, coeq, 4).ok);

  SECTION("an over-collapsed apex fails the factorisation test") {
    ActPtr t = fixtures::theta(z2);
    CoequalizerResult wrong{t, ActMap::make(a, t, {0, 0})};
    auto report = verify_universal_coequalizer(id, id, wrong, 4);
    CHECK_FALSE(report.ok);
    CHECK(report.failure.find("no mediator") != std::string::npos);
  }

  SECTION("a non-equalizing projection is rejected outright") {
    ActMap shift = ActMap::make(a, a, {1, 0});
    CoequalizerResult wrong{a, ActMap::identity(a)};
    auto report = verify_universal_coequalizer(id, shift, wrong, 4);
    CHECK_FALSE(report.ok);
    CHECK(report.failure.find("equalize") != std::string::npos);
  }
}

TEST_CASE("coequalizer rejects mismatched parallel pairs") {
  MonoidPtr z2 = fixtures::z2();
  ActPtr a = fixtures::self_act(z2);
  ActPtr t = fixtures::theta(z2);
  REQUIRE_THROWS_MATCHES(
      coequalizer(ActMap::identity(t), ActMap::identity(a)), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == ErrorCode::MismatchedEndpoints;
      }));
}

TEST_CASE("pushout glues two copies along the shared subact") {
  MonoidPtr sl2 = fixtures::sl2();
  ActPtr s = fixtures::self_act(sl2);
  ActPtr t = fixtures::theta(sl2);
  // The one-point act embeds onto the absorbing fixed point of the self act.
  ActMap inc = ActMap::make(t, s, {1});

  auto pr = pushout(inc, inc);
  REQUIRE(pr.act->size() == 3);
  CHECK(pr.from_x(1) == pr.from_y(1));
  CHECK(pr.from_x(0) != pr.from_y(0));
  CHECK_FALSE(pr.as_cocone.system->directed());

  auto report = verify_universal(pr.as_cocone, 4);
  INFO(report.failure);
  CHECK(report.ok);
}

TEST_CASE("pushout rejects legs with different sources") {
  MonoidPtr sl2 = fixtures::sl2();
  ActPtr s = fixtures::self_act(sl2);
  ActMap from_theta = ActMap::make(fixtures::theta(sl2), s, {1});
  ActMap from_sink = ActMap::make(fixtures::sink_act_sl2(2), s, {0, 1});
  REQUIRE_THROWS_AS(pushout(from_theta, from_sink), Error);
}
