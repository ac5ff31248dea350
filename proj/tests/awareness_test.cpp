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

#include "efgu/awareness.hpp"
#include "support.hpp"

using namespace efgu;
using namespace efgu::testing;

namespace {

// Objective tree T1: player 1 picks a/b at r; after a, player 2 picks x/y.
// Lower tree T0 prunes b. Player 2 is unaware of b, player 1 is aware.
RawGame unaware_game() {
  RawGame g;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m"}, {{{1, "b"}}, "tb"}}),
       dec("m", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx"}, {{{2, "y"}}, "ty"}}),
       term("tb", {{1, Rational(0)}, {2, Rational(0)}}),
       term("tx", {{1, Rational(2)}, {2, Rational(1)}}),
       term("ty", {{1, Rational(1)}, {2, Rational(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", {1}, {{1, {"a"}}}, {{{{1, "a"}}, "m0"}}),
       dec("m0", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx0"}, {{{2, "y"}}, "ty0"}}),
       term("tx0", {{1, Rational(2)}, {2, Rational(1)}}),
       term("ty0", {{1, Rational(1)}, {2, Rational(2)}})},
      {{"r0", "r"}, {"m0", "m"}, {"tx0", "tx"}, {"ty0", "ty"}}));
  g.infosets.push_back(infoset("h1", 1, "T1", {"r"}, {"r"}));
  g.infosets.push_back(infoset("h1low", 1, "T0", {"r0"}, {"r0"}));
  g.infosets.push_back(infoset("h2", 2, "T0", {"m0"}, {"m", "m0"}));
  return g;
}

// Single tree, player 1 forgets their first move.
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

}  // namespace

TEST_CASE("a well formed unawareness game passes every checker") {
  RawGame raw = unaware_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  CHECK(validate_structure(g).empty());
  CHECK(validate_awareness(g, h).empty());
  CHECK(check_perfect_recall_direct(g, h).empty());
  CHECK(check_perfect_recall_records(g, h).empty());
  CHECK(check_perfect_recall_selten(g, h).empty());
  CHECK(check_derived(g, h).empty());
  CHECK(h.set("h2").actions == std::vector<ActionLabel>{"x", "y"});
  CHECK(*h.assigned("m", 2) == "h2");
  CHECK(h.assigned("m", 1) == nullptr);
}

TEST_CASE("an aware set assigned in an unaware tree fires U0 and U5") {
  RawGame raw = unaware_game();
  raw.infosets.clear();
  raw.infosets.push_back(infoset("h1x", 1, "T1", {"r"}, {"r", "r0"}));
  raw.infosets.push_back(infoset("h2", 2, "T0", {"m0"}, {"m", "m0"}));
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  ViolationReport report = validate_awareness(g, h);
  // The aware view also offers action b that r0 lacks, hence the I4.
  REQUIRE(report.items().size() == 5);
  CHECK(report.items()[0].property == "I4");
  CHECK(report.items()[0].witness == "set=h1x node=r0 action=b");
  CHECK(report.items()[1].property == "U0");
  CHECK(report.items()[1].witness == "set=h1x node=r0");
  CHECK(report.items()[2].property == "U3");
  CHECK(report.items()[2].witness == "set=h1x node=r tree=T0");
  CHECK(report.items()[3].property == "U5");
  CHECK(report.items()[3].witness == "set=h1x node=r tree=T0");
  CHECK(report.items()[4].property == "U5");
  CHECK(report.items()[4].witness == "set=h1x node=r0 tree=T0");
}

TEST_CASE("a member dropped from a view fires U1 and I4 where it binds") {
  RawGame g;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m"}, {{{1, "b"}}, "k"}}),
       dec("m", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx"}, {{{2, "y"}}, "ty"}}),
       dec("k", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "kx"}, {{{2, "y"}}, "ky"}}),
       term("tx", {{1, Rational(1)}, {2, Rational(1)}}),
       term("ty", {{1, Rational(0)}, {2, Rational(0)}}),
       term("kx", {{1, Rational(2)}, {2, Rational(0)}}),
       term("ky", {{1, Rational(0)}, {2, Rational(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m0"}, {{{1, "b"}}, "k0"}}),
       dec("m0", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx0"}, {{{2, "y"}}, "ty0"}}),
       dec("k0", {2}, {{2, {"x"}}}, {{{{2, "x"}}, "kx0"}}),
       term("tx0", {{1, Rational(1)}, {2, Rational(1)}}),
       term("ty0", {{1, Rational(0)}, {2, Rational(0)}}),
       term("kx0", {{1, Rational(2)}, {2, Rational(0)}})},
      {{"r0", "r"}, {"m0", "m"}, {"k0", "k"}, {"tx0", "tx"},
       {"ty0", "ty"}, {"kx0", "kx"}}));
  g.infosets.push_back(infoset("h1", 1, "T1", {"r"}, {"r"}));
  g.infosets.push_back(infoset("h1low", 1, "T0", {"r0"}, {"r0"}));
  g.infosets.push_back(infoset("h2top", 2, "T1", {"m", "k"}, {"m", "k"}));
  g.infosets.push_back(infoset("h2m", 2, "T0", {"m0"}, {"m0", "k0"}));
  GameForest forest = build_forest(g);
  Awareness h = build_awareness(forest, g.infosets);
  ViolationReport report = validate_awareness(forest, h);
  CHECK(report.classes() ==
        std::set<std::string>{"I4", "U1", "U3", "U5"});
  bool saw_i4 = false;
  bool saw_u1 = false;
  for (const Violation& v : report.items()) {
    if (v.property == "I4") {
      CHECK(v.witness == "set=h2m node=k0 action=y");
      saw_i4 = true;
    }
    if (v.property == "U1") {
      CHECK(v.witness == "set=h2m node=k0 copy=k0");
      saw_u1 = true;
    }
  }
  CHECK(saw_i4);
  CHECK(saw_u1);
}

TEST_CASE("equal action sets in one tree must share an information set") {
  RawGame g;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m"}, {{{1, "b"}}, "k"}}),
       dec("m", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx"}, {{{2, "y"}}, "ty"}}),
       dec("k", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "kx"}, {{{2, "y"}}, "ky"}}),
       term("tx", {{1, Rational(1)}, {2, Rational(1)}}),
       term("ty", {{1, Rational(0)}, {2, Rational(0)}}),
       term("kx", {{1, Rational(2)}, {2, Rational(0)}}),
       term("ky", {{1, Rational(0)}, {2, Rational(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", {1}, {{1, {"a"}}}, {{{{1, "a"}}, "m0"}}),
       dec("m0", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "tx0"}, {{{2, "y"}}, "ty0"}}),
       term("tx0", {{1, Rational(1)}, {2, Rational(1)}}),
       term("ty0", {{1, Rational(0)}, {2, Rational(0)}})},
      {{"r0", "r"}, {"m0", "m"}, {"tx0", "tx"}, {"ty0", "ty"}}));
  g.infosets.push_back(infoset("h1", 1, "T1", {"r"}, {"r"}));
  g.infosets.push_back(infoset("h1low", 1, "T0", {"r0"}, {"r0"}));
  g.infosets.push_back(infoset("h2a", 2, "T1", {"m"}, {"m"}));
  g.infosets.push_back(infoset("h2b", 2, "T1", {"k"}, {"k"}));
  g.infosets.push_back(infoset("h2low", 2, "T0", {"m0"}, {"m0"}));
  GameForest forest = build_forest(g);
  Awareness h = build_awareness(forest, g.infosets);
  ViolationReport report = validate_awareness(forest, h);
  REQUIRE(report.items().size() == 1);
  CHECK(report.items()[0].property == "I5");
  CHECK(report.items()[0].player == "2");
  CHECK(report.items()[0].witness == "tree=T1 a=k b=m");
}

TEST_CASE("forgetting an own move fails all three recall readings") {
  RawGame raw = forgetful_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  CHECK(validate_structure(g).empty());
  CHECK(validate_awareness(g, h).empty());

  ViolationReport direct = check_perfect_recall_direct(g, h);
  REQUIRE(direct.items().size() == 2);
  CHECK(direct.items()[0].witness == "anc=r action=a node=ma member=mb");
  CHECK(direct.items()[1].witness == "anc=r action=b node=mb member=ma");

  ViolationReport records = check_perfect_recall_records(g, h);
  REQUIRE(records.items().size() == 2);
  CHECK(records.items()[0].witness == "node=ma member=mb");
  CHECK(records.items()[1].witness == "node=mb member=ma");

  ViolationReport selten = check_perfect_recall_selten(g, h);
  REQUIRE(selten.items().size() == 2);
  CHECK(selten.items()[0].witness == "anc=r action=a node=ma other=mb");
  CHECK(selten.items()[1].witness == "anc=r action=b node=mb other=ma");

  ViolationReport one = check_perfect_recall_direct(g, h, 1);
  CHECK(one.items() == direct.items());
}

TEST_CASE("experience records list sets and own actions root first") {
  RawGame raw = forgetful_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  ExperienceRecord at_root = experience_record(g, h, 1, "r");
  CHECK(at_root.steps.empty());
  ExperienceRecord at_ma = experience_record(g, h, 1, "ma");
  REQUIRE(at_ma.steps.size() == 1);
  CHECK(at_ma.steps[0] == std::pair<std::string, ActionLabel>{"hr", "a"});
  CHECK_THROWS_AS(experience_record(g, h, 1, "t1"), Error);
}

TEST_CASE("two members on one path are absent minded") {
  RawGame g;
  g.players = {1};
  g.objective = "T";
  g.trees.push_back(tree(
      "T", "r",
      {dec("r", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "m"}, {{{1, "b"}}, "tb"}}),
       dec("m", {1}, {{1, {"a", "b"}}}, {{{{1, "a"}}, "ta"}, {{{1, "b"}}, "tc"}}),
       term("ta", {{1, Rational(1)}}), term("tb", {{1, Rational(0)}}),
       term("tc", {{1, Rational(2)}})}));
  g.infosets.push_back(infoset("hh", 1, "T", {"r", "m"}, {"r", "m"}));
  GameForest forest = build_forest(g);
  Awareness h = build_awareness(forest, g.infosets);
  ViolationReport derived = check_derived(forest, h);
  REQUIRE(derived.items().size() == 1);
  CHECK(derived.items()[0].property == "absentmindedness");
  CHECK(derived.items()[0].witness == "set=hh a=r b=m");
  CHECK(!check_perfect_recall_direct(forest, h).empty());
}

TEST_CASE("awareness may only grow along a play") {
  RawGame raw = unaware_game();
  // Player 2 acts twice: aware at m, then unaware at a child decision node.
  raw.trees[0].nodes[1] = dec("m", {2}, {{2, {"x", "y"}}},
                              {{{{2, "x"}}, "w"}, {{{2, "y"}}, "ty"}});
  raw.trees[0].nodes[3] = dec("w", {2}, {{2, {"p", "q"}}},
                              {{{{2, "p"}}, "tp"}, {{{2, "q"}}, "tq"}});
  raw.trees[0].nodes.push_back(term("tp", {{1, Rational(1)}, {2, Rational(1)}}));
  raw.trees[0].nodes.push_back(term("tq", {{1, Rational(0)}, {2, Rational(0)}}));
  raw.trees[1] = subtree(
      "T0", "r0",
      {dec("r0", {1}, {{1, {"a"}}}, {{{{1, "a"}}, "m0"}}),
       dec("m0", {2}, {{2, {"x", "y"}}}, {{{{2, "x"}}, "w0"}, {{{2, "y"}}, "ty0"}}),
       dec("w0", {2}, {{2, {"p", "q"}}}, {{{{2, "p"}}, "tp0"}, {{{2, "q"}}, "tq0"}}),
       term("ty0", {{1, Rational(1)}, {2, Rational(2)}}),
       term("tp0", {{1, Rational(1)}, {2, Rational(1)}}),
       term("tq0", {{1, Rational(0)}, {2, Rational(0)}})},
      {{"r0", "r"}, {"m0", "m"}, {"w0", "w"}, {"ty0", "ty"},
       {"tp0", "tp"}, {"tq0", "tq"}});
  raw.infosets.clear();
  raw.infosets.push_back(infoset("h1", 1, "T1", {"r"}, {"r"}));
  raw.infosets.push_back(infoset("h1low", 1, "T0", {"r0"}, {"r0"}));
  raw.infosets.push_back(infoset("hm", 2, "T1", {"m"}, {"m"}));
  raw.infosets.push_back(infoset("hm0", 2, "T0", {"m0"}, {"m0"}));
  raw.infosets.push_back(infoset("hw", 2, "T0", {"w0"}, {"w", "w0"}));
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  ViolationReport derived = check_derived(g, h);
  REQUIRE(derived.items().size() == 1);
  CHECK(derived.items()[0].property == "DA");
  CHECK(derived.items()[0].player == "2");
  CHECK(derived.items()[0].witness == "tree=T1 anc=m desc=w");
  // Shrinking awareness cannot satisfy I3: the aware member m sees the
  // unaware continuation at w.
  CHECK(validate_awareness(g, h).classes() == std::set<std::string>{"I3"});
  CHECK(!check_perfect_recall_direct(g, h).empty());
}

TEST_CASE("tree relations and the T partial restriction") {
  RawGame raw = unaware_game();
  GameForest g = build_forest(raw);
  Awareness h = build_awareness(g, raw.infosets);
  TreeRelations rel = tree_relations(g, h);
  std::set<std::pair<TreeId, TreeId>> expect{
      {"T1", "T1"}, {"T1", "T0"}, {"T0", "T0"}};
  CHECK(rel.direct == expect);
  CHECK(rel.closure == expect);

  PartialGame low = t_partial_game(g, h, "T0");
  CHECK(low.forest.tree_order == std::vector<TreeId>{"T0"});
  CHECK(low.forest.objective == "T0");
  CHECK(low.awareness.sets.size() == 2);
  CHECK(low.awareness.sets.count("h2") == 1);
  CHECK(low.awareness.set("h2").assignments == std::vector<NodeId>{"m0"});
  CHECK(validate_structure(low.forest).empty());
  CHECK(validate_awareness(low.forest, low.awareness).empty());

  PartialGame top = t_partial_game(g, h, "T1");
  CHECK(top.forest.tree_order.size() == 2);
  CHECK(top.awareness.sets.size() == 3);
  CHECK(top.forest.tree("T0").copies == g.tree("T0").copies);
  CHECK(validate_awareness(top.forest, top.awareness).empty());
}

TEST_CASE("awareness build rejects malformed inputs") {
  auto expect_build = [](RawGame raw, const std::string& part) {
    GameForest g = build_forest(raw);
    try {
      build_awareness(g, raw.infosets);
      FAIL("expected a build error for: ", part);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kBuild);
      CHECK(std::string(e.what()).find(part) != std::string::npos);
    }
  };

  RawGame raw = unaware_game();
  raw.infosets.push_back(infoset("h2", 2, "T0", {"m0"}, {"m0"}));
  expect_build(raw, "duplicate information set");

  raw = unaware_game();
  raw.infosets[0].owner = 0;
  expect_build(raw, "owned by nature");

  raw = unaware_game();
  raw.infosets[0].owner = 9;
  expect_build(raw, "unknown owner");

  raw = unaware_game();
  raw.infosets[0].home = "zz";
  expect_build(raw, "missing home tree");

  raw = unaware_game();
  raw.infosets[0].members.clear();
  expect_build(raw, "no members");

  raw = unaware_game();
  raw.infosets[0].members = {"r0"};
  expect_build(raw, "outside the home tree");

  raw = unaware_game();
  raw.infosets[0].members = {"tb"};
  expect_build(raw, "is terminal");

  raw = unaware_game();
  raw.infosets[2].members = {"r0"};
  expect_build(raw, "inactive at member");

  raw = unaware_game();
  raw.infosets[2].assignments = {"m", "m0", "m"};
  expect_build(raw, "two information sets");

  raw = unaware_game();
  raw.infosets[2].members = {"m0", "m0"};
  expect_build(raw, "lists a member twice");

  raw = unaware_game();
  raw.infosets.push_back(infoset("h9", 2, "T0", {"m0"}, {}));
  expect_build(raw, "never assigned");

  raw = unaware_game();
  raw.infosets[1].assignments.push_back("m0");
  expect_build(raw, "inactive");

  raw = unaware_game();
  raw.infosets.push_back(infoset("h2b", 2, "T0", {"m0"}, {"m"}));
  expect_build(raw, "two information sets");

  raw = unaware_game();
  raw.infosets[2].assignments = {"m0"};
  expect_build(raw, "no information set at node m");

  raw = unaware_game();
  raw.infosets[2].assignments = {"m", "m0", "tx"};
  expect_build(raw, "terminal node");

  raw = unaware_game();
  raw.infosets[2].assignments = {"m", "m0", "zz"};
  expect_build(raw, "missing node");
}
