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

#include "efgu/kuhn.hpp"
#include "support.hpp"

using namespace efgu;
using namespace efgu::testing;

namespace {

RawGame wide_game() {
  RawGame g;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", {1}, {{1, {"a", "b", "c"}}},
           {{{{1, "a"}}, "m"}, {{{1, "b"}}, "tb"}, {{{1, "c"}}, "tc"}}),
       dec("m", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx"}, {{{2, "y"}}, "ty"}}),
       term("tb", {{1, Rational(0)}, {2, Rational(0)}}),
       term("tc", {{1, Rational(3)}, {2, Rational(0)}}),
       term("tx", {{1, Rational(2)}, {2, Rational(1)}}),
       term("ty", {{1, Rational(1)}, {2, Rational(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m0"}, {{{1, "b"}}, "tb0"}}),
       dec("m0", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx0"}, {{{2, "y"}}, "ty0"}}),
       term("tb0", {{1, Rational(0)}, {2, Rational(0)}}),
       term("tx0", {{1, Rational(2)}, {2, Rational(1)}}),
       term("ty0", {{1, Rational(1)}, {2, Rational(2)}})},
      {{"r0", "r"}, {"m0", "m"}, {"tb0", "tb"}, {"tx0", "tx"}, {"ty0", "ty"}}));
  g.infosets.push_back(infoset("h1", 1, "T1", {"r"}, {"r"}));
  g.infosets.push_back(infoset("h1low", 1, "T0", {"r0"}, {"r0"}));
  g.infosets.push_back(infoset("h2", 2, "T0", {"m0"}, {"m", "m0"}));
  return g;
}

RawGame forgetful_game() {
  RawGame g;
  g.players = {1};
  g.objective = "T";
  g.trees.push_back(tree(
      "T", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "ma"}, {{{1, "b"}}, "mb"}}),
       dec("ma", {1}, {{1, {"c", "e"}}}, {{{{1, "c"}}, "t1"}, {{{1, "e"}}, "t2"}}),
       dec("mb", {1}, {{1, {"c", "e"}}}, {{{{1, "c"}}, "t3"}, {{{1, "e"}}, "t4"}}),
       term("t1", {{1, Rational(3)}}), term("t2", {{1, Rational(0)}}),
       term("t3", {{1, Rational(1)}}), term("t4", {{1, Rational(2)}})}));
  g.infosets.push_back(infoset("hr", 1, "T", {"r"}, {"r"}));
  g.infosets.push_back(infoset("hm", 1, "T", {"ma", "mb"}, {"ma", "mb"}));
  return g;
}

// Player 1 moves twice in a row with distinct views.
RawGame two_step_game() {
  RawGame g;
  g.players = {1};
  g.objective = "T";
  g.trees.push_back(tree(
      "T", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m"}, {{{1, "b"}}, "tb"}}),
       dec("m", {1}, {{1, {"c", "e"}}}, {{{{1, "c"}}, "t1"}, {{{1, "e"}}, "t2"}}),
       term("tb", {{1, Rational(0)}}), term("t1", {{1, Rational(2)}}),
       term("t2", {{1, Rational(1)}})}));
  g.infosets.push_back(infoset("hr", 1, "T", {"r"}, {"r"}));
  g.infosets.push_back(infoset("hm", 1, "T", {"m"}, {"m"}));
  return g;
}

PureStrategy pure(PlayerIx owner,
                  std::map<std::string, ActionLabel> choices) {
  PureStrategy s;
  s.owner = owner;
  s.choices = std::move(choices);
  return s;
}

MixedStrategy mix(PlayerIx owner,
                  std::vector<std::pair<PureStrategy, Rational>> w) {
  MixedStrategy m;
  m.owner = owner;
  m.weights = std::move(w);
  return m;
}

}  // namespace

TEST_CASE("the transform conditions on reaching each locus") {
  RawGame raw = wide_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  MixedStrategy sigma =
      mix(1, {{pure(1, {{"h1", "a"}, {"h1low", "a"}}), Rational(1, 2)},
              {pure(1, {{"h1", "b"}, {"h1low", "a"}}), Rational(1, 2)}});
  BehaviorStrategy beta = kuhn_transform(g, h, sigma);
  CHECK(beta.owner == 1);
  CHECK(beta.locals.at("h1") ==
        std::map<ActionLabel, Rational>{
            {"a", Rational(1, 2)}, {"b", Rational(1, 2)}, {"c", Rational(0)}});
  CHECK(beta.locals.at("h1low") ==
        std::map<ActionLabel, Rational>{{"a", Rational(1)}, {"b", Rational(0)}});

  EquivalenceVerdict same = check_equivalence(g, h, sigma, beta);
  CHECK(same.equivalent);
  CHECK(same.checked == 11 * 2);
  CHECK(check_realization_equivalence(g, h, sigma, beta).equivalent);
}

TEST_CASE("a non equivalent pair yields the first witness") {
  RawGame raw = wide_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  MixedStrategy sigma =
      mix(1, {{pure(1, {{"h1", "a"}, {"h1low", "a"}}), Rational(1, 2)},
              {pure(1, {{"h1", "b"}, {"h1low", "a"}}), Rational(1, 2)}});
  BehaviorStrategy beta = kuhn_transform(g, h, sigma);
  beta.locals["h1"] = {{"a", Rational(1, 3)}, {"b", Rational(1, 3)},
                       {"c", Rational(1, 3)}};
  EquivalenceVerdict verdict = check_equivalence(g, h, sigma, beta);
  REQUIRE(!verdict.equivalent);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->node == "m");
  CHECK(verdict.witness->mixed_value == Rational(1, 2));
  CHECK(verdict.witness->behavior_value == Rational(1, 3));
  CHECK(verdict.witness->others.at(2).choices.at("h2") == "x");
  CHECK(verdict.checked == 1);
}

TEST_CASE("node dependent mixtures are rejected even unchecked") {
  RawGame raw = forgetful_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  MixedStrategy sigma =
      mix(1, {{pure(1, {{"hr", "a"}, {"hm", "c"}}), Rational(1, 2)},
              {pure(1, {{"hr", "b"}, {"hm", "e"}}), Rational(1, 2)}});
  try {
    kuhn_transform(g, h, sigma, false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNodeDependence);
  }
  // Checked mode refuses earlier: the owner lacks perfect recall.
  try {
    kuhn_transform(g, h, sigma, true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kArgument);
  }
}

TEST_CASE("unreachable anchors do not constrain the transform") {
  RawGame raw = forgetful_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  // hm is anchored at ma and mb; this mixture reaches only ma.
  MixedStrategy sigma =
      mix(1, {{pure(1, {{"hr", "a"}, {"hm", "c"}}), Rational(1)}});
  BehaviorStrategy beta = kuhn_transform(g, h, sigma, false);
  CHECK(beta.locals.at("hm") ==
        std::map<ActionLabel, Rational>{{"c", Rational(1)}, {"e", Rational(0)}});
  CHECK(check_equivalence(g, h, sigma, beta).equivalent);
}

TEST_CASE("a locus the mixture never reaches turns uniform") {
  RawGame raw = two_step_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  MixedStrategy sigma =
      mix(1, {{pure(1, {{"hr", "b"}, {"hm", "c"}}), Rational(1)}});
  BehaviorStrategy beta = kuhn_transform(g, h, sigma);
  CHECK(beta.locals.at("hr") ==
        std::map<ActionLabel, Rational>{{"a", Rational(0)}, {"b", Rational(1)}});
  CHECK(beta.locals.at("hm") ==
        std::map<ActionLabel, Rational>{{"c", Rational(1, 2)},
                                        {"e", Rational(1, 2)}});
  CHECK(check_equivalence(g, h, sigma, beta).equivalent);
  CHECK(check_realization_equivalence(g, h, sigma, beta).equivalent);
}

TEST_CASE("checked mode validates the mixture") {
  RawGame raw = two_step_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  MixedStrategy bad =
      mix(1, {{pure(1, {{"hr", "b"}, {"hm", "c"}}), Rational(1, 2)}});
  CHECK_THROWS_AS(kuhn_transform(g, h, bad), Error);
  MixedStrategy negative =
      mix(1, {{pure(1, {{"hr", "b"}, {"hm", "c"}}), Rational(2)},
              {pure(1, {{"hr", "a"}, {"hm", "c"}}), Rational(-1)}});
  CHECK_THROWS_AS(kuhn_transform(g, h, negative), Error);
}

TEST_CASE("nature mixtures transform like any other") {
  RawGame g;
  g.players = {1};
  g.nature = true;
  g.objective = "T";
  g.trees.push_back(tree(
      "T", "n0",
      {dec("n0", {0}, {{0, {"H", "T"}}}, {{{{0, "H"}}, "d1"}, {{{0, "T"}}, "d2"}}),
       dec("d1", {1}, {{1, {"l", "r"}}}, {{{{1, "l"}}, "t1"}, {{{1, "r"}}, "t2"}}),
       dec("d2", {1}, {{1, {"l", "r"}}}, {{{{1, "l"}}, "t3"}, {{{1, "r"}}, "t4"}}),
       term("t1", {{1, Rational(1)}}), term("t2", {{1, Rational(0)}}),
       term("t3", {{1, Rational(0)}}), term("t4", {{1, Rational(1)}})}));
  g.infosets.push_back(infoset("hd", 1, "T", {"d1", "d2"}, {"d1", "d2"}));
  GameForest forest = build_forest(g);
  Awareness h = build_awareness(forest, g.infosets);
  MixedStrategy chance =
      mix(0, {{pure(0, {{"n0", "H"}}), Rational(1, 4)},
              {pure(0, {{"n0", "T"}}), Rational(3, 4)}});
  BehaviorStrategy beta = kuhn_transform(forest, h, chance);
  CHECK(beta.locals.at("n0") ==
        std::map<ActionLabel, Rational>{{"H", Rational(1, 4)},
                                        {"T", Rational(3, 4)}});
  CHECK(check_equivalence(forest, h, chance, beta).equivalent);
}

TEST_CASE("lemma 1 holds here and fails under forgetting") {
  RawGame raw = wide_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  CHECK(check_lemma1(g, h, 1).empty());
  CHECK(check_lemma1(g, h, 2).empty());
  CHECK(check_lemma2(g, h, 1).empty());
  CHECK(check_lemma2(g, h, 2).empty());

  RawGame fraw = forgetful_game();
  GameForest fg = build_forest(fraw);
  Awareness fh = build_awareness(fg, fraw.infosets);
  ViolationReport report = check_lemma1(fg, fh, 1);
  REQUIRE(report.items().size() == 4);
  CHECK(report.items()[0].witness == "node=ma member=mb");
  CHECK(report.items()[1].witness == "node=mb member=ma");
  CHECK(report.items()[2].witness == "tree=T node=ma member=mb");
  CHECK(report.items()[3].witness == "tree=T node=mb member=ma");
}

TEST_CASE("the deterministic family covers points pairs and triples") {
  RawGame raw = wide_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  std::vector<MixedStrategy> family = make_test_family(g, h, 1);
  CHECK(family.size() == 6 + 15 + 10);
  for (const MixedStrategy& m : family) {
    Rational total(0);
    for (const auto& [p, w] : m.weights) {
      (void)p;
      total += w;
    }
    CHECK(total == Rational(1));
  }
  CHECK(family[6].weights.size() == 2);
  CHECK(family[6].weights[0].second == Rational(1, 2));
  CHECK(family[21].weights.size() == 3);
  CHECK(family[21].weights[0].second == Rational(1, 6));
  CHECK(family[21].weights[2].second == Rational(4, 6));

  std::vector<MixedStrategy> twos = make_test_family(g, h, 2);
  CHECK(twos.size() == 2 + 1);

  std::vector<MixedStrategy> random = make_random_family(g, h, 1, 7, 5);
  CHECK(random.size() == 5);
  for (const MixedStrategy& m : random) {
    Rational total(0);
    for (const auto& [p, w] : m.weights) {
      (void)p;
      total += w;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("every family member transforms to an equivalent behavior") {
  RawGame raw = wide_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  for (PlayerIx i : g.actors()) {
    for (const MixedStrategy& sigma : make_test_family(g, h, i)) {
      BehaviorStrategy beta = kuhn_transform(g, h, sigma);
      CHECK(check_equivalence(g, h, sigma, beta).equivalent);
      CHECK(check_realization_equivalence(g, h, sigma, beta).equivalent);
      for (const auto& [locus, local] : beta.locals) {
        Rational total(0);
        for (const auto& [a, w] : local) {
          (void)a;
          total += w;
        }
        CHECK(total == Rational(1));
      }
    }
  }
}
