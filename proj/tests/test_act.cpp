#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "actlab/act.hpp"
#include "fixtures.hpp"

using namespace actlab;

namespace {

// Independent oracle: scan every size^(size*order) action table, keep the
// ones satisfying the act axioms, and count labelled tables and
// relabelling classes.  Feasible for the tiny sizes used here.
struct ActCounts {
  int tables = 0;
  int classes = 0;
};

ActCounts brute_force_act_counts(const MonoidPtr& m, int size) {
  int n = m->order();
  ActCounts counts;
  std::set<std::vector<Idx>> canon;
  size_t cells = static_cast<size_t>(size) * static_cast<size_t>(n);
  std::vector<Idx> flat(cells, 0);
  auto valid = [&]() {
    for (int x = 0; x < size; ++x) {
      if (flat[static_cast<size_t>(x * n + m->identity())] != x) {
        return false;
      }
      for (int s = 0; s < n; ++s) {
        Idx xs = flat[static_cast<size_t>(x * n + s)];
        for (int t = 0; t < n; ++t) {
          if (flat[static_cast<size_t>(xs * n + t)] !=
              flat[static_cast<size_t>(x * n + m->mul(s, t))]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto least_relabelling = [&]() {
    std::vector<Idx> perm(static_cast<size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Idx> best;
    do {
      std::vector<Idx> r(cells);
      for (int x = 0; x < size; ++x) {
        for (int s = 0; s < n; ++s) {
          r[static_cast<size_t>(perm[static_cast<size_t>(x)] * n + s)] =
              perm[static_cast<size_t>(flat[static_cast<size_t>(x * n + s)])];
        }
      }
      if (best.empty() || r < best) {
        best = r;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  for (;;) {
    if (valid()) {
      ++counts.tables;
      canon.insert(least_relabelling());
    }
    size_t i = 0;
    while (i < cells && flat[i] == size - 1) {
      flat[i] = 0;
      ++i;
    }
    if (i == cells) {
      break;
    }
    ++flat[i];
  }
  counts.classes = static_cast<int>(canon.size());
  return counts;
}

}  // namespace

TEST_CASE("act validation", "[act]") {
  auto sl2 = fixtures::sl2();
  REQUIRE_NOTHROW(FiniteAct::make(sl2, {{0, 1}, {1, 1}}));

  SECTION("unit law") {
    try {
      FiniteAct::make(sl2, {{1, 1}, {1, 1}});
      FAIL("expected unit law failure");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::UnitLawFails);
      REQUIRE(e.witness() == std::vector<int>{0});
    }
  }

  SECTION("action compatibility") {
    // x*absorbing = 1 but 1*absorbing = 0 breaks (x*s)*t = x*(s*t).
    try {
      FiniteAct::make(sl2, {{0, 1}, {1, 0}});
      FAIL("expected action associativity failure");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::ActionNotAssociative);
    }
  }

  SECTION("range and shape") {
    REQUIRE_THROWS_AS(FiniteAct::make(sl2, {{0, 5}}), Error);
    REQUIRE_THROWS_AS(FiniteAct::make(sl2, {{0}}), Error);
  }
}

TEST_CASE("act maps", "[act]") {
  auto sl2 = fixtures::sl2();
  auto s_act = fixtures::self_act(sl2);
  auto one = fixtures::theta(sl2);

  SECTION("equivariance enforced") {
    REQUIRE_NOTHROW(ActMap::make(s_act, s_act, {0, 1}));
    try {
      // Swapping the two elements of the self act is not equivariant.
      ActMap::make(s_act, s_act, {1, 0});
      FAIL("expected equivariance failure");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::NotEquivariant);
    }
  }

  SECTION("mono, epi, iso, inverse") {
    auto collapse = ActMap::make(s_act, one, {0, 0});
    REQUIRE(collapse.is_epi());
    REQUIRE_FALSE(collapse.is_mono());
    REQUIRE_THROWS_AS(collapse.inverse(), Error);

    auto id = ActMap::identity(s_act);
    REQUIRE(id.is_iso());
    REQUIRE(id.inverse().mapping() == id.mapping());
  }

  SECTION("composition checks endpoints") {
    auto collapse = ActMap::make(s_act, one, {0, 0});
    auto id_one = ActMap::identity(one);
    REQUIRE(compose(id_one, collapse).mapping() == std::vector<Idx>{0, 0});
    REQUIRE_THROWS_AS(compose(collapse, collapse), Error);
  }

  SECTION("mixed monoids rejected") {
    auto other = fixtures::self_act(fixtures::z2());
    REQUIRE_THROWS_AS(ActMap::make(s_act, other, {0, 1}), Error);
  }
}

TEST_CASE("free acts are free", "[act]") {
  auto z2 = fixtures::z2();
  auto fr = free_act(z2, 2);
  REQUIRE(fr.act->size() == 4);
  REQUIRE(fr.basis == std::vector<Idx>{0, 2});

  // Maps out of a free act correspond exactly to choices of basis images.
  auto target = fixtures::self_act(z2);
  auto homs = enumerate_homs(fr.act, target);
  REQUIRE(homs.size() == 4);  // |target|^rank
  std::set<std::pair<Idx, Idx>> basis_images;
  for (const auto& h : homs) {
    basis_images.insert({h(fr.basis[0]), h(fr.basis[1])});
  }
  REQUIRE(basis_images.size() == 4);
}

TEST_CASE("coproducts and components", "[act]") {
  auto sl2 = fixtures::sl2();
  auto sink3 = fixtures::sink_act_sl2(3);
  auto one = fixtures::theta(sl2);

  auto cp = coproduct({sink3, one});
  REQUIRE(cp.act->size() == 4);
  REQUIRE(cp.offsets == std::vector<int>{0, 3});
  for (int x = 0; x < 3; ++x) {
    REQUIRE(cp.injections[0](x) == x);
  }
  REQUIRE(cp.injections[1](0) == 3);

  auto comps = indecomposable_components(cp.act);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0].members == std::vector<Idx>{0, 1, 2});
  REQUIRE(comps[1].members == std::vector<Idx>{3});

  // The sink act itself cannot be decomposed: everything reaches the sink.
  REQUIRE(indecomposable_components(sink3).size() == 1);
}

TEST_CASE("fixed points and generated subacts", "[act]") {
  auto sink3 = fixtures::sink_act_sl2(3);
  REQUIRE(fixed_points(*sink3) == std::vector<Idx>{2});

  auto z2_act = fixtures::self_act(fixtures::z2());
  REQUIRE(fixed_points(*z2_act).empty());

  auto sub = generated_subact(sink3, {0});
  REQUIRE(sub.members == std::vector<Idx>{0, 2});

  REQUIRE_THROWS_AS(generated_subact(sink3, {9}), Error);
  REQUIRE_THROWS_AS(make_subact(sink3, {0}), Error);  // not closed
}

TEST_CASE("subact as act keeps the action", "[act]") {
  auto sink3 = fixtures::sink_act_sl2(3);
  auto sub = make_subact(sink3, {1, 2});
  auto sa = subact_as_act(sub);
  REQUIRE(sa.act->size() == 2);
  REQUIRE(sa.inclusion.is_mono());
  for (size_t i = 0; i < sub.members.size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      REQUIRE(sink3->act(sub.members[i], s) ==
              sa.inclusion(sa.act->act(static_cast<Idx>(i), s)));
    }
  }
}

TEST_CASE("all subacts", "[act]") {
  auto sl2_self = fixtures::self_act(fixtures::sl2());
  auto subs = all_subacts(sl2_self);
  REQUIRE(subs.size() == 2);
  REQUIRE(subs[0].members == std::vector<Idx>{0, 1});
  REQUIRE(subs[1].members == std::vector<Idx>{1});

  // Oracle: subsets of the sink act carrier that are action-closed; the
  // sink must belong to every nonempty subact.
  auto sink3 = fixtures::sink_act_sl2(3);
  auto subs3 = all_subacts(sink3);
  REQUIRE(subs3.size() == 4);  // {2}, {0,2}, {1,2}, {0,1,2}
  for (const auto& sub : subs3) {
    REQUIRE(sub.contains(2));
  }
}

TEST_CASE("hom enumeration is ordered and filtered", "[act]") {
  auto sl2 = fixtures::sl2();
  auto s_act = fixtures::self_act(sl2);
  auto sink3 = fixtures::sink_act_sl2(3);

  // Maps out of the rank-one free act (the monoid on itself) match target
  // elements one to one.
  auto homs = enumerate_homs(s_act, sink3);
  REQUIRE(homs.size() == 3);
  for (size_t i = 1; i < homs.size(); ++i) {
    REQUIRE(homs[i - 1].mapping() < homs[i].mapping());
  }

  // The sink is forced onto the absorbing element; the other two elements
  // are free, giving 4 maps of which 3 are onto.
  REQUIRE(enumerate_homs(sink3, s_act).size() == 4);
  REQUIRE(enumerate_homs(sink3, s_act, HomFilter::Epi).size() == 3);
  REQUIRE(enumerate_homs(s_act, sink3, HomFilter::Mono).size() == 2);
  REQUIRE(enumerate_homs(sink3, sink3, HomFilter::Iso).size() == 2);
  REQUIRE(find_hom(sink3, fixtures::theta(sl2), HomFilter::All).has_value());
}

TEST_CASE("act isomorphism search", "[act]") {
  auto sl2 = fixtures::sl2();
  auto sink2 = fixtures::sink_act_sl2(2);
  // Relabelled copy: sink at index 0.
  auto relabelled = FiniteAct::make(sl2, {{0, 0}, {1, 0}});
  auto iso = find_act_isomorphism(sink2, relabelled);
  REQUIRE(iso.has_value());
  REQUIRE(iso->is_iso());
  auto trivial2 = FiniteAct::make(sl2, {{0, 0}, {1, 1}});
  REQUIRE_FALSE(find_act_isomorphism(sink2, trivial2));
}

TEST_CASE("act enumeration matches the exhaustive scan", "[act][enum]") {
  for (const auto& m : {fixtures::z2(), fixtures::sl2(), fixtures::m3()}) {
    for (int size = 1; size <= 3; ++size) {
      auto oracle = brute_force_act_counts(m, size);
      auto labelled = enumerate_acts(m, size, false);
      auto classes = enumerate_acts(m, size, true);
      INFO("order " << m->order() << " size " << size);
      REQUIRE(static_cast<int>(labelled.size()) == oracle.tables);
      REQUIRE(static_cast<int>(classes.size()) == oracle.classes);
    }
  }
}

TEST_CASE("act enumeration is deterministic and canonical", "[act][enum]") {
  auto acts = enumerate_acts(fixtures::sl2(), 3, true);
  for (size_t i = 1; i < acts.size(); ++i) {
    REQUIRE(acts[i - 1]->flat_action() < acts[i]->flat_action());
  }
  auto expanded = enumerate_acts_up_to(fixtures::sl2(), 3, true);
  REQUIRE(expanded.size() >= acts.size() + 2);
}

TEST_CASE("cyclic acts", "[act]") {
  // Quotients of the self act: computed by hand from the right congruences.
  REQUIRE(cyclic_acts(fixtures::sl2()).size() == 2);
  REQUIRE(cyclic_acts(fixtures::m3()).size() == 3);
  REQUIRE(cyclic_acts(fixtures::z2()).size() == 2);
  for (const auto& c : cyclic_acts(fixtures::m3())) {
    REQUIRE(generated_subact(c, {0}).members.size() ==
            static_cast<size_t>(c->size()));
  }
}
