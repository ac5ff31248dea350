// Copyright 2025 The efgu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "efgu/corpus.hpp"
#include "efgu/document.hpp"
#include "efgu/kuhn.hpp"

using namespace efgu;

namespace {

ViolationReport all_checks(const GameForest& g, const Awareness& h) {
  ViolationReport r;
  r.merge(validate_structure(g));
  r.merge(validate_awareness(g, h));
  r.merge(check_perfect_recall_direct(g, h));
  r.merge(check_perfect_recall_records(g, h));
  r.merge(check_perfect_recall_selten(g, h));
  r.merge(check_derived(g, h));
  r.finalize();
  return r;
}

GameBundle load(const std::string& name) {
  return load_document(fixture(name).document);
}

std::multiset<std::string> witnesses(const ViolationReport& r,
                                     const std::string& property) {
  std::multiset<std::string> out;
  for (const Violation& v : r.items()) {
    if (v.property == property) out.insert(v.witness);
  }
  return out;
}

const MixedStrategy& mixed_named(const GameBundle& b, const std::string& n) {
  const NamedStrategy* s = b.find_strategy(n);
  REQUIRE(s != nullptr);
  REQUIRE(s->kind == "mixed");
  return s->mixed;
}

const BehaviorStrategy& behavior_named(const GameBundle& b,
                                       const std::string& n) {
  const NamedStrategy* s = b.find_strategy(n);
  REQUIRE(s != nullptr);
  REQUIRE(s->kind == "behavior");
  return s->behavior;
}

const PureStrategy& pure_named(const GameBundle& b, const std::string& n) {
  const NamedStrategy* s = b.find_strategy(n);
  REQUIRE(s != nullptr);
  REQUIRE(s->kind == "pure");
  return s->pure;
}

}  // namespace

TEST_CASE("the catalog lists every fixture exactly once") {
  const std::vector<Fixture>& all = fixtures();
  CHECK(all.size() == 16);
  std::set<std::string> names;
  for (const Fixture& f : all) {
    CHECK(!f.summary.empty());
    names.insert(f.name);
  }
  CHECK(names.size() == all.size());
  CHECK(fixture("std").name == "std");
  CHECK_THROWS_WITH_AS(fixture("nope"), "no fixture named nope", Error);
  try {
    fixture("nope");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFound);
  }
}

TEST_CASE("every fixture loads and round trips through the document form") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.name);
    CHECK_NOTHROW(load_document(f.document));
    std::string once = serialize_document(f.document);
    std::string twice = serialize_document(parse_document(once));
    CHECK(once == twice);
  }
}

TEST_CASE("fixture violation classes are exactly as annotated") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.name);
    GameBundle b = load_document(f.document);
    ViolationReport r = all_checks(b.forest, b.awareness);
    CHECK(r.classes() == f.classes);
  }
}

TEST_CASE("std: the transform reproduces the stated behavior strategy") {
  GameBundle b = load("std");
  const MixedStrategy& sigma = mixed_named(b, "sigma");
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness, sigma);
  CHECK(t.owner == 1);
  CHECK(t.locals == behavior_named(b, "beta").locals);
  CHECK(t.locals.at("h1").at("a") == Rational(2, 5));
  CHECK(t.locals.at("h1").at("b") == Rational(3, 5));
  CHECK(t.locals.at("h1").at("c") == Rational(0));
  CHECK(t.locals.at("h1low").at("a") == Rational(1));
  CHECK(t.locals.at("h1low").at("b") == Rational(0));
}

TEST_CASE("std: equivalence holds for the transform and fails for the "
          "shifted strategy with a pinned witness") {
  GameBundle b = load("std");
  const MixedStrategy& sigma = mixed_named(b, "sigma");
  EquivalenceVerdict good =
      check_equivalence(b.forest, b.awareness, sigma, behavior_named(b, "beta"));
  CHECK(good.equivalent);
  CHECK(!good.witness.has_value());
  CHECK(good.checked > 0);
  CHECK(check_realization_equivalence(b.forest, b.awareness, sigma,
                                      behavior_named(b, "beta"))
            .equivalent);

  EquivalenceVerdict bad = check_equivalence(b.forest, b.awareness, sigma,
                                             behavior_named(b, "beta-wrong"));
  REQUIRE(!bad.equivalent);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->node == "m");
  CHECK(bad.witness->mixed_value == Rational(2, 5));
  CHECK(bad.witness->behavior_value == Rational(1, 3));
  CHECK(!check_realization_equivalence(b.forest, b.awareness, sigma,
                                       behavior_named(b, "beta-wrong"))
             .equivalent);
}

TEST_CASE("std: the play under the main profile and the missing locus error") {
  GameBundle b = load("std");
  StrategyProfile main = b.assemble("main");
  CHECK(play_path(b.forest, b.awareness, main, "T1") ==
        std::vector<NodeId>{"r", "m", "tx"});
  CHECK(play_path(b.forest, b.awareness, main, "T0") ==
        std::vector<NodeId>{"r0", "m0", "tx0"});

  BehaviorStrategy partial;
  partial.owner = 1;
  partial.locals["h1"] = {{"a", Rational(1)}, {"b", Rational(0)},
                          {"c", Rational(0)}};
  StrategyProfile others;
  others.parts[2] = pure_named(b, "p2-x");
  for (bool use_oracle : {false, true}) {
    CAPTURE(use_oracle);
    try {
      Rational r = use_oracle
                       ? oracle_rho(b.forest, b.awareness, partial, others, "m0")
                       : rho(b.forest, b.awareness, partial, others, "m0");
      (void)r;
      FAIL("expected a missing locus error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kArgument);
    }
  }
}

TEST_CASE("converse: equal occurrence does not imply equal reach") {
  GameBundle b = load("converse");
  StrategyProfile same = b.assemble("same-view");
  StrategyProfile shifted = b.assemble("shifted-view");
  std::set<NodeId> occ = {"r", "tu", "r0", "tu0"};
  CHECK(occur_nodes(b.forest, b.awareness, same) == occ);
  CHECK(occur_nodes(b.forest, b.awareness, shifted) == occ);
  CHECK(reach_nodes(b.forest, b.awareness, same) ==
        std::set<NodeId>{"r", "tu", "r0", "tu0"});
  CHECK(reach_nodes(b.forest, b.awareness, shifted) ==
        std::set<NodeId>{"r", "tu", "r0", "td0"});
}

TEST_CASE("reach-occur: reached and occurring sets pull apart") {
  GameBundle b = load("reach-occur");
  StrategyProfile split = b.assemble("split");
  CHECK(reach_nodes(b.forest, b.awareness, split) ==
        std::set<NodeId>{"g", "a", "t1", "g0", "b0", "t30"});
  CHECK(occur_nodes(b.forest, b.awareness, split) ==
        std::set<NodeId>{"g", "a", "t1", "g0", "a0", "t10"});
  CHECK(reached_infosets(b.forest, b.awareness, split, 2) ==
        std::set<std::string>{"hb"});
  CHECK(occurring_infosets(b.forest, b.awareness, split, 2) ==
        std::set<std::string>{"ha"});

  StrategyProfile aligned = b.assemble("aligned");
  CHECK(reach_nodes(b.forest, b.awareness, aligned) ==
        std::set<NodeId>{"g", "a", "t1", "g0", "a0", "t10"});
  CHECK(reached_infosets(b.forest, b.awareness, aligned, 2) ==
        std::set<std::string>{"ha"});
  CHECK(occurring_infosets(b.forest, b.awareness, aligned, 2) ==
        std::set<std::string>{"ha"});
}

TEST_CASE("occur-no-member: a set occurs although no member occurs") {
  GameBundle b = load("occur-no-member");
  StrategyProfile left = b.assemble("left-play");
  std::set<NodeId> occ = occur_nodes(b.forest, b.awareness, left);
  CHECK(occ == std::set<NodeId>{"q", "nl", "t1", "q0"});
  CHECK(occ.count("nr0") == 0);
  CHECK(occurring_infosets(b.forest, b.awareness, left, 2) ==
        std::set<std::string>{"h2"});
  CHECK(reached_infosets(b.forest, b.awareness, left, 2) ==
        std::set<std::string>{"h2"});
  CHECK(reach_nodes(b.forest, b.awareness, left) ==
        std::set<NodeId>{"q", "nl", "t1", "q0", "nr0", "t30"});

  MixedStrategy point;
  point.owner = 2;
  point.weights = {{pure_named(b, "pick-v"), Rational(1)}};
  StrategyProfile others;
  others.parts[1] = pure_named(b, "go-left");
  CHECK(rho(b.forest, b.awareness, point, others, "nr0") == Rational(1));
  CHECK(occ_prob(b.forest, b.awareness, point, others, "nr0") == Rational(0));
}

TEST_CASE("recall-ok: growing awareness along the path still transforms") {
  GameBundle b = load("recall-ok");
  const MixedStrategy& blend = mixed_named(b, "blend");
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness, blend);
  CHECK(t.locals == behavior_named(b, "beta-blend").locals);
  CHECK(t.locals.at("hr").at("a") == Rational(1, 2));
  CHECK(t.locals.at("hm").at("c") == Rational(1));
  CHECK(t.locals.at("hm").at("e") == Rational(0));
  CHECK(t.locals.at("hm0").at("c") == Rational(1));
  CHECK(check_equivalence(b.forest, b.awareness, blend, t).equivalent);
  CHECK(check_realization_equivalence(b.forest, b.awareness, blend, t)
            .equivalent);
}

TEST_CASE("recall-bad-a: one pruned branch breaks recall in all three "
          "readings with pinned witnesses") {
  GameBundle b = load("recall-bad-a");
  ViolationReport direct = check_perfect_recall_direct(b.forest, b.awareness);
  ViolationReport records =
      check_perfect_recall_records(b.forest, b.awareness);
  ViolationReport selten = check_perfect_recall_selten(b.forest, b.awareness);
  CHECK(witnesses(direct, "I6") ==
        std::multiset<std::string>{"anc=n action=right node=nr member=ml"});
  CHECK(witnesses(records, "I6records") ==
        std::multiset<std::string>{"node=nr member=ml"});
  CHECK(witnesses(selten, "I6selten") ==
        std::multiset<std::string>{"anc=m action=left node=ml other=nr",
                                   "anc=n action=left node=nl other=nr",
                                   "anc=n action=right node=nr other=ml",
                                   "anc=n action=right node=nr other=nl"});
}

TEST_CASE("recall-bad-a: every mixture still transforms and stays "
          "equivalent because the offending branch is unreachable") {
  GameBundle b = load("recall-bad-a");
  CHECK_THROWS_AS(
      kuhn_transform(b.forest, b.awareness, mixed_named(b, "forgetful")),
      Error);
  try {
    kuhn_transform(b.forest, b.awareness, mixed_named(b, "forgetful"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kArgument);
  }
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness,
                                      mixed_named(b, "forgetful"), false);
  CHECK(t.locals.at("h0").at("left") == Rational(1));
  CHECK(t.locals.at("h1").at("a") == Rational(1, 2));
  CHECK(t.locals.at("h1").at("b") == Rational(1, 2));
  for (const MixedStrategy& sigma :
       make_test_family(b.forest, b.awareness, 1)) {
    BehaviorStrategy beta =
        kuhn_transform(b.forest, b.awareness, sigma, false);
    CHECK(check_equivalence(b.forest, b.awareness, sigma, beta).equivalent);
    CHECK(check_realization_equivalence(b.forest, b.awareness, sigma, beta)
              .equivalent);
  }
}

TEST_CASE("recall-bad-b: the merged view fails recall in both trees") {
  GameBundle b = load("recall-bad-b");
  ViolationReport direct = check_perfect_recall_direct(b.forest, b.awareness);
  CHECK(witnesses(direct, "I6") ==
        std::multiset<std::string>{"anc=r action=a node=ma member=mb0",
                                   "anc=r action=b node=mb member=ma0",
                                   "anc=r0 action=a node=ma0 member=mb0",
                                   "anc=r0 action=b node=mb0 member=ma0"});
  CHECK(check_perfect_recall_records(b.forest, b.awareness).items().size() ==
        4);
  CHECK(check_perfect_recall_selten(b.forest, b.awareness).items().size() ==
        8);
  const MixedStrategy& spread = mixed_named(b, "spread");
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness, spread, false);
  CHECK(t.locals.at("hm").at("x") == Rational(1));
  CHECK(check_equivalence(b.forest, b.awareness, spread, t).equivalent);
}

TEST_CASE("induced-action: the narrow view steers the wide node") {
  GameBundle b = load("induced-action");
  StrategyProfile left = b.assemble("left-play");
  CHECK(play_path(b.forest, b.awareness, left, "T1") ==
        std::vector<NodeId>{"n", "tl"});
  CHECK(play_path(b.forest, b.awareness, left, "T0") ==
        std::vector<NodeId>{"n0", "tl0"});
  const MixedStrategy& blend = mixed_named(b, "blend");
  StrategyProfile nobody;
  CHECK(rho(b.forest, b.awareness, blend, nobody, "n") == Rational(1));
  CHECK(rho(b.forest, b.awareness, blend, nobody, "tl") == Rational(1, 2));
  CHECK(rho(b.forest, b.awareness, blend, nobody, "ts") == Rational(0));
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness, blend);
  CHECK(t.locals == behavior_named(b, "beta-blend").locals);
  CHECK(check_equivalence(b.forest, b.awareness, blend, t).equivalent);
  CHECK(occ_prob(b.forest, b.awareness, blend, nobody, "tl0") ==
        Rational(1, 2));
}

TEST_CASE("subtree and awareness defects carry pinned witnesses") {
  {
    GameBundle b = load("p0-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    REQUIRE(r.items().size() == 1);
    CHECK(r.items()[0].property == "P0");
    CHECK(r.items()[0].witness == "tree=T0 from=r skipped=m to=t1");
  }
  {
    GameBundle b = load("p1-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    REQUIRE(r.items().size() == 1);
    CHECK(r.items()[0].property == "P1");
    CHECK(r.items()[0].witness == "tree=T0 node=m0 objective=m");
  }
  {
    GameBundle b = load("u0-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    REQUIRE(r.items().size() == 1);
    CHECK(r.items()[0].property == "U0");
    CHECK(r.items()[0].witness == "set=hbad node=a_b");
  }
  {
    GameBundle b = load("u1-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    CHECK(witnesses(r, "U1") ==
          std::multiset<std::string>{"set=hm node=mb copy=mb0",
                                     "set=hm node=mb0 copy=mb0"});
    CHECK(r.items().size() == 2);
  }
  {
    GameBundle b = load("u4-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    REQUIRE(r.items().size() == 1);
    CHECK(r.items()[0].property == "U4");
    CHECK(r.items()[0].witness == "set=hlow node=m tree=Tm copy=m1");
  }
  {
    GameBundle b = load("u5-bad");
    ViolationReport r = all_checks(b.forest, b.awareness);
    CHECK(r.items().size() == 3);
    CHECK(witnesses(r, "U5") ==
          std::multiset<std::string>{"set=hm node=m tree=T00",
                                     "set=hm node=m0 tree=T00"});
    CHECK(witnesses(r, "U3") ==
          std::multiset<std::string>{"set=hm node=m0 tree=T00"});
  }
}

TEST_CASE("diamond: joins, relations and the partial game below one arm") {
  GameBundle b = load("diamond");
  CHECK(join(b.forest, "TA", "TB") == "TT");
  CHECK(join(b.forest, "TA", "TC") == "TA");
  CHECK(join(b.forest, "TB", "TC") == "TB");
  CHECK(join(b.forest, "TC", "TC") == "TC");
  CHECK(b.forest.is_leq("TC", "TA"));
  CHECK(b.forest.is_leq("TC", "TB"));
  CHECK(!b.forest.is_leq("TA", "TB"));
  CHECK(!b.forest.is_leq("TB", "TA"));

  TreeRelations rel = tree_relations(b.forest, b.awareness);
  std::set<std::pair<TreeId, TreeId>> direct = {
      {"TT", "TT"}, {"TT", "TA"}, {"TT", "TB"}, {"TA", "TA"},
      {"TA", "TC"}, {"TB", "TB"}, {"TB", "TC"}, {"TC", "TC"}};
  CHECK(rel.direct == direct);
  std::set<std::pair<TreeId, TreeId>> closure = direct;
  closure.insert({"TT", "TC"});
  CHECK(rel.closure == closure);

  PartialGame pg = t_partial_game(b.forest, b.awareness, "TA");
  CHECK(pg.forest.objective == "TA");
  std::set<TreeId> kept;
  for (const auto& [tid, tr] : pg.forest.trees) kept.insert(tid);
  CHECK(kept == std::set<TreeId>{"TA", "TC"});
  std::set<std::string> sets;
  for (const auto& [sid, hs] : pg.awareness.sets) sets.insert(sid);
  CHECK(sets == std::set<std::string>{"hqa", "hqc", "ha", "hac", "hbc"});
  CHECK(validate_structure(pg.forest).empty());
  CHECK(validate_awareness(pg.forest, pg.awareness).empty());

  PureStrategy cut = t_partial_strategy(pg, pure_named(b, "all-left"));
  CHECK(cut.choices ==
        std::map<std::string, ActionLabel>{{"hqa", "l"}, {"hqc", "l"}});

  StrategyProfile main = b.assemble("main");
  CHECK(play_path(b.forest, b.awareness, main, "TT") ==
        std::vector<NodeId>{"q", "a", "t1"});
}

TEST_CASE("absent-minded: diagnostics fire and the mixture refuses to "
          "become local") {
  GameBundle b = load("absent-minded");
  ViolationReport derived = check_derived(b.forest, b.awareness);
  CHECK(witnesses(derived, "absentmindedness") ==
        std::multiset<std::string>{"set=h a=r b=m"});
  CHECK(check_perfect_recall_direct(b.forest, b.awareness).items().size() ==
        1);
  CHECK(check_perfect_recall_records(b.forest, b.awareness).items().size() ==
        2);
  CHECK(check_perfect_recall_selten(b.forest, b.awareness).items().size() ==
        1);
  try {
    kuhn_transform(b.forest, b.awareness, mixed_named(b, "half-half"), false);
    FAIL("expected node dependence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNodeDependence);
  }
  MixedStrategy point;
  point.owner = 1;
  point.weights = {{pure_named(b, "always-go"), Rational(1)}};
  BehaviorStrategy t = kuhn_transform(b.forest, b.awareness, point, false);
  CHECK(t.locals.at("h").at("go") == Rational(1));
  CHECK(check_equivalence(b.forest, b.awareness, point, t).equivalent);
}

TEST_CASE("generated games are deterministic, bounded and pass every check") {
  CHECK(serialize_document(generate(2)) == serialize_document(generate(2)));
  CHECK(serialize_document(generate(2)) != serialize_document(generate(3)));
  GameBundle two = load_document(generate(2));
  GameBundle three = load_document(generate(3));
  CHECK(two.forest.trees.size() == 2);
  CHECK(three.forest.trees.size() == 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    RawDocument doc = generate(seed);
    std::string once = serialize_document(doc);
    CHECK(once == serialize_document(parse_document(once)));
    GameBundle b = load_document(doc);
    CHECK(all_checks(b.forest, b.awareness).empty());
    CHECK(b.forest.nodes.size() <= 120);
    for (PlayerIx j : b.forest.actors()) {
      CHECK(enumerate_pure(b.forest, b.awareness, j).size() <= 16);
    }
  }
  GeneratorParams narrow;
  narrow.trees = 1;
  GameBundle single = load_document(generate(5, narrow));
  CHECK(single.forest.trees.size() == 1);
  CHECK(all_checks(single.forest, single.awareness).empty());
}

TEST_CASE("oracle visit probabilities agree with rho everywhere") {
  auto agree = [](const GameBundle& b) {
    for (PlayerIx j : b.forest.players) {
      StrategyProfile others;
      for (PlayerIx k : b.forest.actors()) {
        if (k != j) {
          others.parts[k] =
              enumerate_pure(b.forest, b.awareness, k).front();
        }
      }
      std::vector<MixedStrategy> family =
          make_test_family(b.forest, b.awareness, j);
      std::size_t take = family.size() < 6 ? family.size() : 6;
      for (std::size_t s = 0; s < take; ++s) {
        const MixedStrategy& sigma = family[s];
        BehaviorStrategy beta;
        bool have_beta = true;
        try {
          beta = kuhn_transform(b.forest, b.awareness, sigma, false);
        } catch (const Error&) {
          have_beta = false;
        }
        for (const auto& [nid, node] : b.forest.nodes) {
          CHECK(rho(b.forest, b.awareness, sigma, others, nid) ==
                oracle_rho(b.forest, b.awareness, sigma, others, nid));
          if (have_beta) {
            CHECK(rho(b.forest, b.awareness, beta, others, nid) ==
                  oracle_rho(b.forest, b.awareness, beta, others, nid));
          }
        }
      }
    }
  };
  for (const Fixture& f : fixtures()) {
    if (!f.classes.empty()) continue;
    CAPTURE(f.name);
    agree(load_document(f.document));
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    agree(load_document(generate(seed)));
  }
}
