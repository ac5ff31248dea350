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

#include "efgu/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "efgu/error.hpp"
#include "efgu/kuhn.hpp"

namespace efgu {
namespace {

using Kid = std::pair<ActionLabel, NodeId>;

RawNode dec(std::string id, PlayerIx p, std::vector<ActionLabel> menu,
            std::vector<Kid> list) {
  RawNode n;
  n.id = std::move(id);
  n.kind = NodeKind::kDecision;
  n.players = {p};
  n.actions[p] = std::move(menu);
  for (auto& [a, c] : list) n.successors.push_back({{{p, a}}, c});
  return n;
}

RawNode term(std::string id, std::map<PlayerIx, Rational> pay) {
  RawNode n;
  n.id = std::move(id);
  n.kind = NodeKind::kTerminal;
  n.payoffs = std::move(pay);
  return n;
}

RawTree tree(std::string id, std::string root, std::vector<RawNode> nodes) {
  RawTree t;
  t.id = std::move(id);
  t.root = std::move(root);
  t.nodes = std::move(nodes);
  return t;
}

RawTree subtree(std::string id, std::string root, std::vector<RawNode> nodes,
                std::map<NodeId, NodeId> copies) {
  RawTree t = tree(std::move(id), std::move(root), std::move(nodes));
  t.copies = std::move(copies);
  t.has_copies = true;
  return t;
}

RawInfoset infoset(std::string id, PlayerIx owner, std::string home,
                   std::vector<NodeId> members,
                   std::vector<NodeId> assignments) {
  RawInfoset h;
  h.id = std::move(id);
  h.owner = owner;
  h.home = std::move(home);
  h.members = std::move(members);
  h.assignments = std::move(assignments);
  return h;
}

RawStrategy pure(std::string name, PlayerIx owner,
                 std::map<std::string, ActionLabel> choices) {
  RawStrategy s;
  s.name = std::move(name);
  s.owner = owner;
  s.kind = "pure";
  s.choices = std::move(choices);
  return s;
}

RawStrategy mixed(std::string name, PlayerIx owner,
                  std::vector<RawStrategy::Entry> weights) {
  RawStrategy s;
  s.name = std::move(name);
  s.owner = owner;
  s.kind = "mixed";
  s.weights = std::move(weights);
  return s;
}

RawStrategy behavior(
    std::string name, PlayerIx owner,
    std::map<std::string, std::map<ActionLabel, std::string>> locals) {
  RawStrategy s;
  s.name = std::move(name);
  s.owner = owner;
  s.kind = "behavior";
  s.locals = std::move(locals);
  return s;
}

RawProfile prof(std::string name, std::map<PlayerIx, std::string> parts) {
  RawProfile p;
  p.name = std::move(name);
  p.strategies = std::move(parts);
  return p;
}

Rational rat(long long v) { return Rational(v); }

Fixture make_std() {
  Fixture f;
  f.name = "std";
  f.summary = "Two trees, two players, a pruned third action.";
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", 1, {"a", "b", "c"}, {{"a", "m"}, {"b", "tb"}, {"c", "tc"}}),
       dec("m", 2, {"x", "y"}, {{"x", "tx"}, {"y", "ty"}}),
       term("tb", {{1, rat(1)}, {2, rat(0)}}),
       term("tc", {{1, rat(4)}, {2, rat(4)}}),
       term("tx", {{1, rat(2)}, {2, rat(1)}}),
       term("ty", {{1, rat(0)}, {2, rat(3)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "m0"}, {"b", "tb0"}}),
       dec("m0", 2, {"x", "y"}, {{"x", "tx0"}, {"y", "ty0"}}),
       term("tb0", {{1, rat(1)}, {2, rat(0)}}),
       term("tx0", {{1, rat(2)}, {2, rat(1)}}),
       term("ty0", {{1, rat(0)}, {2, rat(3)}})},
      {{"r0", "r"}, {"m0", "m"}, {"tb0", "tb"}, {"tx0", "tx"}, {"ty0", "ty"}}));
  g.infosets = {infoset("h1", 1, "T1", {"r"}, {"r"}),
                infoset("h1low", 1, "T0", {"r0"}, {"r0"}),
                infoset("h2", 2, "T0", {"m0"}, {"m", "m0"})};
  f.document.strategies = {
      pure("p2-x", 2, {{"h2", "x"}}),
      pure("p2-y", 2, {{"h2", "y"}}),
      pure("pure-aa", 1, {{"h1", "a"}, {"h1low", "a"}}),
      pure("pure-ba", 1, {{"h1", "b"}, {"h1low", "a"}}),
      pure("pure-ca", 1, {{"h1", "c"}, {"h1low", "a"}}),
      mixed("sigma", 1,
            {{{{"h1", "a"}, {"h1low", "a"}}, "2/5"},
             {{{"h1", "b"}, {"h1low", "a"}}, "3/5"}}),
      behavior("beta", 1,
               {{"h1", {{"a", "2/5"}, {"b", "3/5"}, {"c", "0"}}},
                {"h1low", {{"a", "1"}, {"b", "0"}}}}),
      behavior("beta-wrong", 1,
               {{"h1", {{"a", "1/3"}, {"b", "1/3"}, {"c", "1/3"}}},
                {"h1low", {{"a", "3/4"}, {"b", "1/4"}}}})};
  f.document.profiles = {prof("main", {{1, "pure-aa"}, {2, "p2-x"}})};
  return f;
}

Fixture make_converse() {
  Fixture f;
  f.name = "converse";
  f.summary = "Two profiles that occur alike but reach different nodes.";
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"u", "d", "e"}, {{"u", "tu"}, {"d", "td"}, {"e", "te"}}),
            term("tu", {{1, rat(1)}}), term("td", {{1, rat(0)}}),
            term("te", {{1, rat(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"u", "d"}, {{"u", "tu0"}, {"d", "td0"}}),
       term("tu0", {{1, rat(1)}}), term("td0", {{1, rat(0)}})},
      {{"r0", "r"}, {"tu0", "tu"}, {"td0", "td"}}));
  g.infosets = {infoset("h1", 1, "T1", {"r"}, {"r"}),
                infoset("h1low", 1, "T0", {"r0"}, {"r0"})};
  f.document.strategies = {pure("uu", 1, {{"h1", "u"}, {"h1low", "u"}}),
                           pure("ud", 1, {{"h1", "u"}, {"h1low", "d"}}),
                           pure("du", 1, {{"h1", "d"}, {"h1low", "u"}})};
  f.document.profiles = {prof("same-view", {{1, "uu"}}),
                         prof("shifted-view", {{1, "ud"}})};
  return f;
}

Fixture make_reach_occur() {
  Fixture f;
  f.name = "reach-occur";
  f.summary = "Reached and occurring information sets pull apart.";
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "g",
           {dec("g", 1, {"l", "r"}, {{"l", "a"}, {"r", "b"}}),
            dec("a", 2, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
            dec("b", 2, {"v", "w"}, {{"v", "t3"}, {"w", "t4"}}),
            term("t1", {{1, rat(3)}, {2, rat(1)}}),
            term("t2", {{1, rat(0)}, {2, rat(2)}}),
            term("t3", {{1, rat(1)}, {2, rat(0)}}),
            term("t4", {{1, rat(2)}, {2, rat(2)}})}));
  g.trees.push_back(subtree(
      "T0", "g0",
      {dec("g0", 1, {"l", "r"}, {{"l", "a0"}, {"r", "b0"}}),
       dec("a0", 2, {"x"}, {{"x", "t10"}}),
       dec("b0", 2, {"v"}, {{"v", "t30"}}),
       term("t10", {{1, rat(3)}, {2, rat(1)}}),
       term("t30", {{1, rat(1)}, {2, rat(0)}})},
      {{"g0", "g"}, {"a0", "a"}, {"b0", "b"}, {"t10", "t1"}, {"t30", "t3"}}));
  g.infosets = {infoset("h1", 1, "T1", {"g"}, {"g"}),
                infoset("h1low", 1, "T0", {"g0"}, {"g0"}),
                infoset("ha", 2, "T0", {"a0"}, {"a", "a0"}),
                infoset("hb", 2, "T0", {"b0"}, {"b", "b0"})};
  f.document.strategies = {
      pure("split1", 1, {{"h1", "l"}, {"h1low", "r"}}),
      pure("straight", 1, {{"h1", "l"}, {"h1low", "l"}}),
      pure("xv", 2, {{"ha", "x"}, {"hb", "v"}})};
  f.document.profiles = {prof("split", {{1, "split1"}, {2, "xv"}}),
                         prof("aligned", {{1, "straight"}, {2, "xv"}})};
  return f;
}

Fixture make_occur_no_member() {
  Fixture f;
  f.name = "occur-no-member";
  f.summary = "A set occurs although its only member does not.";
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "q",
           {dec("q", 1, {"l", "r"}, {{"l", "nl"}, {"r", "nr"}}),
            dec("nl", 2, {"v", "w"}, {{"v", "t1"}, {"w", "t2"}}),
            dec("nr", 2, {"v", "w"}, {{"v", "t3"}, {"w", "t4"}}),
            term("t1", {{1, rat(2)}, {2, rat(2)}}),
            term("t2", {{1, rat(0)}, {2, rat(1)}}),
            term("t3", {{1, rat(1)}, {2, rat(0)}}),
            term("t4", {{1, rat(3)}, {2, rat(1)}})}));
  g.trees.push_back(subtree(
      "T0", "q0",
      {dec("q0", 1, {"r"}, {{"r", "nr0"}}),
       dec("nr0", 2, {"v"}, {{"v", "t30"}}),
       term("t30", {{1, rat(1)}, {2, rat(0)}})},
      {{"q0", "q"}, {"nr0", "nr"}, {"t30", "t3"}}));
  g.infosets = {infoset("hq", 1, "T1", {"q"}, {"q"}),
                infoset("hqlow", 1, "T0", {"q0"}, {"q0"}),
                infoset("h2", 2, "T0", {"nr0"}, {"nl", "nr", "nr0"})};
  f.document.strategies = {
      pure("go-left", 1, {{"hq", "l"}, {"hqlow", "r"}}),
      pure("go-right", 1, {{"hq", "r"}, {"hqlow", "r"}}),
      pure("pick-v", 2, {{"h2", "v"}})};
  f.document.profiles = {prof("left-play", {{1, "go-left"}, {2, "pick-v"}})};
  return f;
}

Fixture make_recall_ok() {
  Fixture f;
  f.name = "recall-ok";
  f.summary = "Awareness grows along the path; recall still holds.";
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"a", "b"}, {{"a", "m"}, {"b", "tb"}}),
            dec("m", 1, {"c", "e"}, {{"c", "t1"}, {"e", "t2"}}),
            term("t1", {{1, rat(2)}}), term("t2", {{1, rat(5)}}),
            term("tb", {{1, rat(1)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "m0"}, {"b", "tb0"}}),
       dec("m0", 1, {"c"}, {{"c", "t10"}}), term("t10", {{1, rat(2)}}),
       term("tb0", {{1, rat(1)}})},
      {{"r0", "r"}, {"m0", "m"}, {"t10", "t1"}, {"tb0", "tb"}}));
  g.infosets = {infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
                infoset("hm", 1, "T1", {"m"}, {"m"}),
                infoset("hm0", 1, "T0", {"m0"}, {"m0"})};
  f.document.strategies = {
      pure("acc", 1, {{"hr", "a"}, {"hm", "c"}, {"hm0", "c"}}),
      pure("bec", 1, {{"hr", "b"}, {"hm", "e"}, {"hm0", "c"}}),
      mixed("blend", 1,
            {{{{"hr", "a"}, {"hm", "c"}, {"hm0", "c"}}, "1/2"},
             {{{"hr", "b"}, {"hm", "e"}, {"hm0", "c"}}, "1/2"}}),
      behavior("beta-blend", 1,
               {{"hr", {{"a", "1/2"}, {"b", "1/2"}}},
                {"hm", {{"c", "1"}, {"e", "0"}}},
                {"hm0", {{"c", "1"}}}})};
  f.document.profiles = {prof("main", {{1, "acc"}})};
  return f;
}

Fixture make_recall_bad_a() {
  Fixture f;
  f.name = "recall-bad-a";
  f.summary = "Recall fails at a branch the view prunes, yet every mixture "
              "still transforms and stays equivalent.";
  f.classes = {"I6", "I6records", "I6selten"};
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "n",
           {dec("n", 1, {"left", "right"}, {{"left", "nl"}, {"right", "nr"}}),
            dec("nl", 1, {"a", "b"}, {{"a", "t1"}, {"b", "t2"}}),
            dec("nr", 1, {"a", "b"}, {{"a", "t3"}, {"b", "t4"}}),
            term("t1", {{1, rat(1)}}), term("t2", {{1, rat(0)}}),
            term("t3", {{1, rat(3)}}), term("t4", {{1, rat(2)}})}));
  g.trees.push_back(subtree(
      "T0", "m",
      {dec("m", 1, {"left"}, {{"left", "ml"}}),
       dec("ml", 1, {"a", "b"}, {{"a", "t10"}, {"b", "t20"}}),
       term("t10", {{1, rat(1)}}), term("t20", {{1, rat(0)}})},
      {{"m", "n"}, {"ml", "nl"}, {"t10", "t1"}, {"t20", "t2"}}));
  g.infosets = {infoset("h0", 1, "T0", {"m"}, {"m", "n"}),
                infoset("h1", 1, "T0", {"ml"}, {"ml", "nl", "nr"})};
  f.document.strategies = {
      pure("la", 1, {{"h0", "left"}, {"h1", "a"}}),
      pure("lb", 1, {{"h0", "left"}, {"h1", "b"}}),
      mixed("forgetful", 1,
            {{{{"h0", "left"}, {"h1", "a"}}, "1/2"},
             {{{"h0", "left"}, {"h1", "b"}}, "1/2"}})};
  f.document.profiles = {prof("main", {{1, "la"}})};
  return f;
}

Fixture make_recall_bad_b() {
  Fixture f;
  f.name = "recall-bad-b";
  f.summary = "The coarse view merges two histories, so recall fails in "
              "both trees.";
  f.classes = {"I6", "I6records", "I6selten"};
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"a", "b"}, {{"a", "ma"}, {"b", "mb"}}),
            dec("ma", 1, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
            dec("mb", 1, {"x", "y"}, {{"x", "t3"}, {"y", "t4"}}),
            term("t1", {{1, rat(2)}}), term("t2", {{1, rat(0)}}),
            term("t3", {{1, rat(1)}}), term("t4", {{1, rat(3)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "ma0"}, {"b", "mb0"}}),
       dec("ma0", 1, {"x"}, {{"x", "t10"}}),
       dec("mb0", 1, {"x"}, {{"x", "t30"}}), term("t10", {{1, rat(2)}}),
       term("t30", {{1, rat(1)}})},
      {{"r0", "r"}, {"ma0", "ma"}, {"mb0", "mb"}, {"t10", "t1"},
       {"t30", "t3"}}));
  g.infosets = {
      infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
      infoset("hm", 1, "T0", {"ma0", "mb0"}, {"ma", "mb", "ma0", "mb0"})};
  f.document.strategies = {
      pure("ax", 1, {{"hr", "a"}, {"hm", "x"}}),
      pure("bx", 1, {{"hr", "b"}, {"hm", "x"}}),
      mixed("spread", 1,
            {{{{"hr", "a"}, {"hm", "x"}}, "1/2"},
             {{{"hr", "b"}, {"hm", "x"}}, "1/2"}})};
  f.document.profiles = {prof("main", {{1, "ax"}})};
  return f;
}

Fixture make_induced_action() {
  Fixture f;
  f.name = "induced-action";
  f.summary = "A narrower view induces the action at a wider node.";
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "n",
           {dec("n", 1, {"left", "right", "stay"},
                {{"left", "tl"}, {"right", "tr"}, {"stay", "ts"}}),
            term("tl", {{1, rat(1)}}), term("tr", {{1, rat(0)}}),
            term("ts", {{1, rat(5)}})}));
  g.trees.push_back(subtree(
      "T0", "n0",
      {dec("n0", 1, {"left", "right"}, {{"left", "tl0"}, {"right", "tr0"}}),
       term("tl0", {{1, rat(1)}}), term("tr0", {{1, rat(0)}})},
      {{"n0", "n"}, {"tl0", "tl"}, {"tr0", "tr"}}));
  g.infosets = {infoset("hn", 1, "T0", {"n0"}, {"n", "n0"})};
  f.document.strategies = {
      pure("go-left", 1, {{"hn", "left"}}),
      pure("go-right", 1, {{"hn", "right"}}),
      mixed("blend", 1,
            {{{{"hn", "left"}}, "1/2"}, {{{"hn", "right"}}, "1/2"}}),
      behavior("beta-blend", 1, {{"hn", {{"left", "1/2"}, {"right", "1/2"}}}})};
  f.document.profiles = {prof("left-play", {{1, "go-left"}})};
  return f;
}

Fixture make_p0_bad() {
  Fixture f;
  f.name = "p0-bad";
  f.summary = "A subtree edge skips a generation.";
  f.classes = {"P0"};
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(tree("T1", "r",
                         {dec("r", 1, {"a", "b"}, {{"a", "m"}, {"b", "tb"}}),
                          dec("m", 1, {"c"}, {{"c", "t1"}}),
                          term("t1", {{1, rat(2)}}), term("tb", {{1, rat(0)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "t10"}, {"b", "tb0"}}),
       term("t10", {{1, rat(2)}}), term("tb0", {{1, rat(0)}})},
      {{"r0", "r"}, {"t10", "t1"}, {"tb0", "tb"}}));
  g.infosets = {infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
                infoset("hm", 1, "T1", {"m"}, {"m"})};
  return f;
}

Fixture make_p1_bad() {
  Fixture f;
  f.name = "p1-bad";
  f.summary = "A copy of a decision node is terminal.";
  f.classes = {"P1"};
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"a", "b"}, {{"a", "m"}, {"b", "tb"}}),
            dec("m", 1, {"c", "e"}, {{"c", "t1"}, {"e", "t2"}}),
            term("t1", {{1, rat(3)}}), term("t2", {{1, rat(0)}}),
            term("tb", {{1, rat(1)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "m0"}, {"b", "tb0"}}),
       term("m0", {{1, rat(2)}}), term("tb0", {{1, rat(1)}})},
      {{"r0", "r"}, {"m0", "m"}, {"tb0", "tb"}}));
  g.infosets = {infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
                infoset("hm", 1, "T1", {"m"}, {"m"})};
  return f;
}

Fixture make_u0_bad() {
  Fixture f;
  f.name = "u0-bad";
  f.summary = "A view homed in a tree the node's tree does not refine.";
  f.classes = {"U0"};
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "TT";
  g.trees.push_back(
      tree("TT", "q",
           {dec("q", 1, {"l", "r"}, {{"l", "a"}, {"r", "b"}}),
            dec("a", 2, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
            dec("b", 2, {"w", "z"}, {{"w", "t3"}, {"z", "t4"}}),
            term("t1", {{1, rat(1)}, {2, rat(1)}}),
            term("t2", {{1, rat(0)}, {2, rat(2)}}),
            term("t3", {{1, rat(2)}, {2, rat(0)}}),
            term("t4", {{1, rat(1)}, {2, rat(3)}})}));
  g.trees.push_back(subtree(
      "TA", "q_a",
      {dec("q_a", 1, {"l", "r"}, {{"l", "a_a"}, {"r", "b_a"}}),
       dec("a_a", 2, {"x"}, {{"x", "ta1"}}),
       dec("b_a", 2, {"w", "z"}, {{"w", "ta3"}, {"z", "ta4"}}),
       term("ta1", {{1, rat(1)}, {2, rat(1)}}),
       term("ta3", {{1, rat(2)}, {2, rat(0)}}),
       term("ta4", {{1, rat(1)}, {2, rat(3)}})},
      {{"q_a", "q"}, {"a_a", "a"}, {"b_a", "b"}, {"ta1", "t1"},
       {"ta3", "t3"}, {"ta4", "t4"}}));
  g.trees.push_back(subtree(
      "TB", "q_b",
      {dec("q_b", 1, {"l"}, {{"l", "a_b"}}),
       dec("a_b", 2, {"x", "y"}, {{"x", "tb1"}, {"y", "tb2"}}),
       term("tb1", {{1, rat(1)}, {2, rat(1)}}),
       term("tb2", {{1, rat(0)}, {2, rat(2)}})},
      {{"q_b", "q"}, {"a_b", "a"}, {"tb1", "t1"}, {"tb2", "t2"}}));
  g.infosets = {infoset("hq", 1, "TT", {"q"}, {"q"}),
                infoset("hqa", 1, "TA", {"q_a"}, {"q_a"}),
                infoset("hqb", 1, "TB", {"q_b"}, {"q_b"}),
                infoset("hbad", 2, "TA", {"a_a"}, {"a", "a_a", "a_b"}),
                infoset("hb", 2, "TA", {"b_a"}, {"b", "b_a"})};
  return f;
}

Fixture make_u1_bad() {
  Fixture f;
  f.name = "u1-bad";
  f.summary = "A node's copy in the view is not among the members.";
  f.classes = {"U1"};
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"a", "b", "c"},
                {{"a", "ma"}, {"b", "mb"}, {"c", "tc"}}),
            dec("ma", 2, {"x"}, {{"x", "t1"}}),
            dec("mb", 2, {"x"}, {{"x", "t2"}}),
            term("t1", {{1, rat(1)}, {2, rat(0)}}),
            term("t2", {{1, rat(0)}, {2, rat(1)}}),
            term("tc", {{1, rat(2)}, {2, rat(2)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "ma0"}, {"b", "mb0"}}),
       dec("ma0", 2, {"x"}, {{"x", "t10"}}),
       dec("mb0", 2, {"x"}, {{"x", "t20"}}),
       term("t10", {{1, rat(1)}, {2, rat(0)}}),
       term("t20", {{1, rat(0)}, {2, rat(1)}})},
      {{"r0", "r"}, {"ma0", "ma"}, {"mb0", "mb"}, {"t10", "t1"},
       {"t20", "t2"}}));
  g.infosets = {
      infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
      infoset("hm", 2, "T0", {"ma0"}, {"ma", "mb", "ma0", "mb0"})};
  return f;
}

Fixture make_u4_bad() {
  Fixture f;
  f.name = "u4-bad";
  f.summary = "An intermediate copy carries a different set.";
  f.classes = {"U4"};
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(tree(
      "T1", "r",
      {dec("r", 1, {"a", "b"}, {{"a", "m"}, {"b", "tb"}}),
       dec("m", 2, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
       term("t1", {{1, rat(2)}, {2, rat(1)}}),
       term("t2", {{1, rat(0)}, {2, rat(2)}}),
       term("tb", {{1, rat(1)}, {2, rat(0)}})}));
  g.trees.push_back(subtree(
      "Tm", "r1",
      {dec("r1", 1, {"a"}, {{"a", "m1"}}),
       dec("m1", 2, {"x", "y"}, {{"x", "t11"}, {"y", "t21"}}),
       term("t11", {{1, rat(2)}, {2, rat(1)}}),
       term("t21", {{1, rat(0)}, {2, rat(2)}})},
      {{"r1", "r"}, {"m1", "m"}, {"t11", "t1"}, {"t21", "t2"}}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a"}, {{"a", "m0"}}), dec("m0", 2, {"x"}, {{"x", "t10"}}),
       term("t10", {{1, rat(2)}, {2, rat(1)}})},
      {{"r0", "r"}, {"m0", "m"}, {"t10", "t1"}}));
  g.infosets = {infoset("hr", 1, "T0", {"r0"}, {"r", "r0", "r1"}),
                infoset("hlow", 2, "T0", {"m0"}, {"m", "m0"}),
                infoset("hmid", 2, "Tm", {"m1"}, {"m1"})};
  return f;
}

Fixture make_u5_bad() {
  Fixture f;
  f.name = "u5-bad";
  f.summary = "A deeper view disagrees with the projected members.";
  f.classes = {"U3", "U5"};
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "T1";
  g.trees.push_back(
      tree("T1", "r",
           {dec("r", 1, {"a", "b", "c"},
                {{"a", "m"}, {"b", "tb"}, {"c", "tc"}}),
            dec("m", 2, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
            term("t1", {{1, rat(1)}, {2, rat(2)}}),
            term("t2", {{1, rat(2)}, {2, rat(0)}}),
            term("tb", {{1, rat(0)}, {2, rat(1)}}),
            term("tc", {{1, rat(3)}, {2, rat(3)}})}));
  g.trees.push_back(subtree(
      "T0", "r0",
      {dec("r0", 1, {"a", "b"}, {{"a", "m0"}, {"b", "tb0"}}),
       dec("m0", 2, {"x", "y"}, {{"x", "t10"}, {"y", "t20"}}),
       term("t10", {{1, rat(1)}, {2, rat(2)}}),
       term("t20", {{1, rat(2)}, {2, rat(0)}}),
       term("tb0", {{1, rat(0)}, {2, rat(1)}})},
      {{"r0", "r"}, {"m0", "m"}, {"t10", "t1"}, {"t20", "t2"},
       {"tb0", "tb"}}));
  g.trees.push_back(subtree(
      "T00", "r00",
      {dec("r00", 1, {"a"}, {{"a", "m00"}}),
       dec("m00", 2, {"x", "y"}, {{"x", "t100"}, {"y", "t200"}}),
       term("t100", {{1, rat(1)}, {2, rat(2)}}),
       term("t200", {{1, rat(2)}, {2, rat(0)}})},
      {{"r00", "r"}, {"m00", "m"}, {"t100", "t1"}, {"t200", "t2"}}));
  g.trees.push_back(subtree(
      "T000", "r000",
      {dec("r000", 1, {"a"}, {{"a", "m000"}}),
       dec("m000", 2, {"x"}, {{"x", "t1000"}}),
       term("t1000", {{1, rat(1)}, {2, rat(2)}})},
      {{"r000", "r"}, {"m000", "m"}, {"t1000", "t1"}}));
  g.infosets = {infoset("hr", 1, "T0", {"r0"}, {"r", "r0"}),
                infoset("hr00", 1, "T00", {"r00"}, {"r00"}),
                infoset("hr000", 1, "T000", {"r000"}, {"r000"}),
                infoset("hm", 2, "T0", {"m0"}, {"m", "m0"}),
                infoset("hc", 2, "T000", {"m000"}, {"m00", "m000"})};
  return f;
}

Fixture make_diamond() {
  Fixture f;
  f.name = "diamond";
  f.summary = "Four trees in a diamond; joins and partial games.";
  RawGame& g = f.document.game;
  g.players = {1, 2};
  g.objective = "TT";
  g.trees.push_back(
      tree("TT", "q",
           {dec("q", 1, {"l", "r"}, {{"l", "a"}, {"r", "b"}}),
            dec("a", 2, {"x", "y"}, {{"x", "t1"}, {"y", "t2"}}),
            dec("b", 2, {"w", "z"}, {{"w", "t3"}, {"z", "t4"}}),
            term("t1", {{1, rat(2)}, {2, rat(1)}}),
            term("t2", {{1, rat(0)}, {2, rat(2)}}),
            term("t3", {{1, rat(1)}, {2, rat(0)}}),
            term("t4", {{1, rat(3)}, {2, rat(2)}})}));
  g.trees.push_back(subtree(
      "TA", "qa",
      {dec("qa", 1, {"l", "r"}, {{"l", "aa"}, {"r", "ba"}}),
       dec("aa", 2, {"x", "y"}, {{"x", "ta1"}, {"y", "ta2"}}),
       dec("ba", 2, {"w"}, {{"w", "ta3"}}),
       term("ta1", {{1, rat(2)}, {2, rat(1)}}),
       term("ta2", {{1, rat(0)}, {2, rat(2)}}),
       term("ta3", {{1, rat(1)}, {2, rat(0)}})},
      {{"qa", "q"}, {"aa", "a"}, {"ba", "b"}, {"ta1", "t1"}, {"ta2", "t2"},
       {"ta3", "t3"}}));
  g.trees.push_back(subtree(
      "TB", "qb",
      {dec("qb", 1, {"l", "r"}, {{"l", "ab"}, {"r", "bb"}}),
       dec("ab", 2, {"x"}, {{"x", "tb1"}}),
       dec("bb", 2, {"w", "z"}, {{"w", "tb3"}, {"z", "tb4"}}),
       term("tb1", {{1, rat(2)}, {2, rat(1)}}),
       term("tb3", {{1, rat(1)}, {2, rat(0)}}),
       term("tb4", {{1, rat(3)}, {2, rat(2)}})},
      {{"qb", "q"}, {"ab", "a"}, {"bb", "b"}, {"tb1", "t1"}, {"tb3", "t3"},
       {"tb4", "t4"}}));
  g.trees.push_back(subtree(
      "TC", "qc",
      {dec("qc", 1, {"l", "r"}, {{"l", "ac"}, {"r", "bc"}}),
       dec("ac", 2, {"x"}, {{"x", "tc1"}}), dec("bc", 2, {"w"}, {{"w", "tc3"}}),
       term("tc1", {{1, rat(2)}, {2, rat(1)}}),
       term("tc3", {{1, rat(1)}, {2, rat(0)}})},
      {{"qc", "q"}, {"ac", "a"}, {"bc", "b"}, {"tc1", "t1"}, {"tc3", "t3"}}));
  g.infosets = {infoset("hq", 1, "TT", {"q"}, {"q"}),
                infoset("hqa", 1, "TA", {"qa"}, {"qa"}),
                infoset("hqb", 1, "TB", {"qb"}, {"qb"}),
                infoset("hqc", 1, "TC", {"qc"}, {"qc"}),
                infoset("ha", 2, "TA", {"aa"}, {"a", "aa"}),
                infoset("hb", 2, "TB", {"bb"}, {"b", "bb"}),
                infoset("hac", 2, "TC", {"ac"}, {"ab", "ac"}),
                infoset("hbc", 2, "TC", {"bc"}, {"ba", "bc"})};
  f.document.strategies = {
      pure("all-left", 1,
           {{"hq", "l"}, {"hqa", "l"}, {"hqb", "l"}, {"hqc", "l"}}),
      pure("all-right", 1,
           {{"hq", "r"}, {"hqa", "r"}, {"hqb", "r"}, {"hqc", "r"}}),
      pure("pick-xw", 2,
           {{"ha", "x"}, {"hb", "w"}, {"hac", "x"}, {"hbc", "w"}})};
  f.document.profiles = {prof("main", {{1, "all-left"}, {2, "pick-xw"}})};
  return f;
}

Fixture make_absent_minded() {
  Fixture f;
  f.name = "absent-minded";
  f.summary = "One set twice on a path; mixtures are node dependent.";
  f.classes = {"I6", "I6records", "I6selten", "absentmindedness"};
  RawGame& g = f.document.game;
  g.players = {1};
  g.objective = "T";
  g.trees.push_back(
      tree("T", "r",
           {dec("r", 1, {"go", "stop"}, {{"go", "m"}, {"stop", "t0"}}),
            dec("m", 1, {"go", "stop"}, {{"go", "t2"}, {"stop", "t1"}}),
            term("t0", {{1, rat(1)}}), term("t1", {{1, rat(3)}}),
            term("t2", {{1, rat(0)}})}));
  g.infosets = {infoset("h", 1, "T", {"m", "r"}, {"m", "r"})};
  f.document.strategies = {
      pure("always-go", 1, {{"h", "go"}}),
      pure("always-stop", 1, {{"h", "stop"}}),
      mixed("half-half", 1,
            {{{{"h", "go"}}, "1/2"}, {{{"h", "stop"}}, "1/2"}}),
      behavior("beta-half", 1, {{"h", {{"go", "1/2"}, {"stop", "1/2"}}}})};
  f.document.profiles = {prof("main", {{1, "always-go"}})};
  return f;
}

// Deterministic generator internals. Information sets are keyed by
// (owner, own record); every key owns a globally unique action alphabet, so
// equal menus inside a tree always mean the same key.

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct AbsNode {
  std::string id;
  bool terminal = false;
  PlayerIx owner = 0;
  int group = -1;
  std::map<PlayerIx, std::string> record;  // own record per actor
  std::vector<int> kids;                   // aligned with the group menu
  std::map<PlayerIx, Rational> payoffs;
};

struct Group {
  PlayerIx owner = 0;
  std::vector<ActionLabel> menu;
};

struct Generator {
  GeneratorParams p;
  std::mt19937_64 rng;
  std::uint64_t record_seed = 0;
  int levels = 0;
  std::vector<AbsNode> nodes;
  std::vector<Group> groups;
  std::map<std::string, int> group_ix;
  std::vector<PlayerIx> players;
  std::vector<std::vector<std::set<int>>> keep;  // level -> group -> slots
  std::vector<std::set<int>> alive;              // level -> abstract indices
  std::map<std::string, int> clamp;              // (j,record) -> level floor

  std::uint64_t draw(std::uint64_t n) { return rng() % n; }

  int group_for(PlayerIx owner, const std::string& rec) {
    std::string key = player_name(owner) + "#" + rec;
    auto it = group_ix.find(key);
    if (it != group_ix.end()) return it->second;
    Group grp;
    grp.owner = owner;
    std::size_t width = 2 + (p.max_branch > 2 ? draw(2) : 0);
    for (std::size_t k = 0; k < width; ++k) {
      grp.menu.push_back("g" + std::to_string(groups.size()) +
                         std::string(1, static_cast<char>('a' + k)));
    }
    groups.push_back(std::move(grp));
    group_ix[key] = static_cast<int>(groups.size()) - 1;
    return group_ix[key];
  }

  // Returns the index of the new abstract node, or -1 past the size cap.
  int grow(int depth, std::map<PlayerIx, std::string> record) {
    if (nodes.size() >= 70) return -1;
    int ix = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes[ix].id = "n" + std::to_string(ix);
    nodes[ix].record = record;
    bool terminal = depth >= p.max_depth || (depth > 0 && draw(100) < 40);
    if (terminal) {
      nodes[ix].terminal = true;
      for (PlayerIx j : players) {
        if (j != kNature) {
          nodes[ix].payoffs[j] =
              Rational(static_cast<long long>(draw(10)) - 3);
        }
      }
      return ix;
    }
    PlayerIx owner;
    if (p.nature && draw(4) == 0) {
      owner = kNature;
    } else {
      std::vector<PlayerIx> own;
      for (PlayerIx j : players) {
        if (j != kNature) own.push_back(j);
      }
      owner = own[draw(own.size())];
    }
    nodes[ix].owner = owner;
    std::string rec;
    if (owner == kNature) {
      rec = "node" + std::to_string(ix);
    } else {
      rec = record[owner];
      nodes[ix].record[owner] = rec;
    }
    int gi = group_for(owner, rec);
    nodes[ix].group = gi;
    std::size_t width = groups[gi].menu.size();
    for (std::size_t k = 0; k < width; ++k) {
      std::map<PlayerIx, std::string> next = record;
      if (owner != kNature) {
        next[owner] += "|g" + std::to_string(gi) + ":" + groups[gi].menu[k];
      }
      int kid = grow(depth + 1, next);
      if (kid < 0) return -1;
      nodes[ix].kids.push_back(kid);
    }
    return ix;
  }

  std::set<int> walk(int level) const {
    std::set<int> out;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
      int ix = stack.back();
      stack.pop_back();
      out.insert(ix);
      const AbsNode& n = nodes[ix];
      if (n.terminal) continue;
      for (int slot : keep[level][n.group]) {
        stack.push_back(n.kids[slot]);
      }
    }
    return out;
  }

  bool prune_levels() {
    keep.assign(levels, {});
    alive.assign(levels, {});
    keep[levels - 1].resize(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      for (std::size_t k = 0; k < groups[gi].menu.size(); ++k) {
        keep[levels - 1][gi].insert(static_cast<int>(k));
      }
    }
    alive[levels - 1] = walk(levels - 1);
    for (int t = levels - 2; t >= 0; --t) {
      keep[t] = keep[t + 1];
      std::size_t cuts = 1 + draw(2);
      for (std::size_t c = 0; c < cuts; ++c) {
        std::vector<int> cand;
        for (int ix : alive[t + 1]) {
          const AbsNode& n = nodes[ix];
          if (!n.terminal && keep[t][n.group].size() >= 2) {
            cand.push_back(n.group);
          }
        }
        if (cand.empty()) {
          if (c == 0) return false;
          break;
        }
        int g = cand[draw(cand.size())];
        std::vector<int> slots(keep[t][g].begin(), keep[t][g].end());
        keep[t][g].erase(slots[draw(slots.size())]);
      }
      alive[t] = walk(t);
      if (alive[t] == alive[t + 1]) return false;
    }
    return true;
  }

  std::string concrete(int ix, int level) const {
    if (level == levels - 1) return nodes[ix].id;
    return nodes[ix].id + "c" + std::to_string(level);
  }

  int clamp_for(PlayerIx j, const std::string& rec) {
    std::string key = player_name(j) + "#" + rec;
    auto it = clamp.find(key);
    if (it != clamp.end()) return it->second;
    int base = static_cast<int>(mix64(record_seed ^ fnv1a(key)) %
                                static_cast<std::uint64_t>(levels));
    std::size_t cut = rec.rfind('|');
    if (cut != std::string::npos) {
      base = std::max(base, clamp_for(j, rec.substr(0, cut)));
    }
    // First level where this record class is populated at all.
    int first = levels - 1;
    for (int t = 0; t < levels; ++t) {
      bool found = false;
      for (int ix : alive[t]) {
        const AbsNode& n = nodes[ix];
        if (!n.terminal && n.owner == j && n.record.at(j) == rec) {
          found = true;
          break;
        }
      }
      if (found) {
        first = t;
        break;
      }
    }
    int out = std::max(base, first);
    clamp[key] = out;
    return out;
  }

  RawDocument emit() {
    RawDocument doc;
    RawGame& g = doc.game;
    for (PlayerIx j : players) {
      if (j != kNature) g.players.push_back(j);
    }
    g.nature = p.nature;
    g.objective = "T" + std::to_string(levels - 1);
    for (int t = levels - 1; t >= 0; --t) {
      RawTree rt;
      rt.id = "T" + std::to_string(t);
      rt.root = concrete(0, t);
      rt.has_copies = t != levels - 1;
      std::vector<int> stack = {0};
      while (!stack.empty()) {
        int ix = stack.back();
        stack.pop_back();
        const AbsNode& n = nodes[ix];
        std::string id = concrete(ix, t);
        if (rt.has_copies) rt.copies[id] = n.id;
        if (n.terminal) {
          rt.nodes.push_back(term(id, n.payoffs));
          continue;
        }
        RawNode d;
        d.id = id;
        d.kind = NodeKind::kDecision;
        d.players = {n.owner};
        for (int slot : keep[t][n.group]) {
          d.actions[n.owner].push_back(groups[n.group].menu[slot]);
          d.successors.push_back(
              {{{n.owner, groups[n.group].menu[slot]}},
               concrete(n.kids[slot], t)});
          stack.push_back(n.kids[slot]);
        }
        rt.nodes.push_back(std::move(d));
      }
      g.trees.push_back(std::move(rt));
    }
    // One information set per (owner, record, view level).
    std::map<std::string, RawInfoset> sets;
    std::vector<std::string> order;
    for (int t = 0; t < levels; ++t) {
      for (int ix : alive[t]) {
        const AbsNode& n = nodes[ix];
        if (n.terminal || n.owner == kNature) continue;
        const std::string& rec = n.record.at(n.owner);
        int v = std::min(t, clamp_for(n.owner, rec));
        std::string key = player_name(n.owner) + "#" + rec + "#" +
                          std::to_string(v);
        auto it = sets.find(key);
        if (it == sets.end()) {
          RawInfoset h;
          h.id = "h" + player_name(n.owner) + "s" +
                 std::to_string(order.size());
          h.owner = n.owner;
          h.home = "T" + std::to_string(v);
          for (int mx : alive[v]) {
            const AbsNode& m = nodes[mx];
            if (!m.terminal && m.owner == n.owner &&
                m.record.at(n.owner) == rec) {
              h.members.push_back(concrete(mx, v));
            }
          }
          it = sets.emplace(key, std::move(h)).first;
          order.push_back(key);
        }
        it->second.assignments.push_back(concrete(ix, t));
      }
    }
    for (const std::string& key : order) {
      g.infosets.push_back(sets.at(key));
    }
    return doc;
  }

  bool attempt(std::uint64_t seed, RawDocument& out) {
    rng.seed(mix64(seed));
    record_seed = rng();
    nodes.clear();
    groups.clear();
    group_ix.clear();
    clamp.clear();
    levels = std::clamp(p.trees, 1, 3);
    players.clear();
    for (int j = 1; j <= std::clamp(p.players, 1, 3); ++j) players.push_back(j);
    if (p.nature) players.push_back(kNature);
    std::sort(players.begin(), players.end());
    if (grow(0, {}) < 0) return false;
    if (nodes[0].terminal) return false;
    if (!prune_levels()) return false;
    out = emit();

    GameForest forest = build_forest(out.game);
    Awareness aw = build_awareness(forest, out.game.infosets);
    if (forest.nodes.size() > 120) return false;
    std::vector<std::uint64_t> sizes;
    std::vector<PlayerIx> actors = forest.actors();
    for (PlayerIx j : actors) {
      std::uint64_t count = 1;
      for (const std::string& locus : loci(forest, aw, j)) {
        count *= locus_actions(forest, aw, j, locus).size();
        if (count > 16) return false;
      }
      sizes.push_back(count);
    }
    for (std::size_t i = 0; i < actors.size(); ++i) {
      std::uint64_t rest = 1;
      for (std::size_t k = 0; k < actors.size(); ++k) {
        if (k != i) rest *= sizes[k];
      }
      if (rest > 120) return false;
    }
    if (!validate_structure(forest).empty()) return false;
    if (!validate_awareness(forest, aw).empty()) return false;
    if (!check_perfect_recall_direct(forest, aw).empty()) return false;
    if (!check_perfect_recall_records(forest, aw).empty()) return false;
    if (!check_perfect_recall_selten(forest, aw).empty()) return false;
    if (!check_derived(forest, aw).empty()) return false;
    return true;
  }
};

RawDocument fallback_game(std::uint64_t seed) {
  RawDocument doc;
  RawGame& g = doc.game;
  g.players = {1};
  g.objective = "T0";
  g.trees.push_back(
      tree("T0", "r",
           {dec("r", 1, {"l", "r"}, {{"l", "tl"}, {"r", "tr"}}),
            term("tl", {{1, Rational(1 + static_cast<long long>(seed % 3))}}),
            term("tr", {{1, Rational(static_cast<long long>(seed % 2))}})}));
  g.infosets = {infoset("h1s0", 1, "T0", {"r"}, {"r"})};
  return doc;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    out.push_back(make_std());
    out.push_back(make_converse());
    out.push_back(make_reach_occur());
    out.push_back(make_occur_no_member());
    out.push_back(make_recall_ok());
    out.push_back(make_recall_bad_a());
    out.push_back(make_recall_bad_b());
    out.push_back(make_induced_action());
    out.push_back(make_p0_bad());
    out.push_back(make_p1_bad());
    out.push_back(make_u0_bad());
    out.push_back(make_u1_bad());
    out.push_back(make_u4_bad());
    out.push_back(make_u5_bad());
    out.push_back(make_diamond());
    out.push_back(make_absent_minded());
    return out;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  fail(ErrorKind::kNotFound, "no fixture named " + name);
}

RawDocument generate(std::uint64_t seed, const GeneratorParams& params) {
  Generator gen;
  gen.p = params;
  for (std::uint64_t k = 0; k < 60; ++k) {
    RawDocument doc;
    try {
      if (gen.attempt(mix64(seed) ^ mix64(k * 0x9e3779b97f4a7c15ULL + 1), doc)) {
        return doc;
      }
    } catch (const Error&) {
      // An unlucky draw; resample.
    }
  }
  return fallback_game(seed);
}

RawDocument generate(std::uint64_t seed) {
  GeneratorParams p;
  p.trees = 1 + static_cast<int>((seed + 2) % 3);
  p.players = 1 + static_cast<int>(seed % 2) + (seed % 5 == 0 ? 1 : 0);
  p.nature = seed % 2 == 0;
  p.max_depth = 3 + static_cast<int>(seed % 2);
  p.max_branch = 2 + (seed % 3 == 0 ? 1 : 0);
  return generate(seed, p);
}

Rational oracle_rho(const GameForest& g, const Awareness& h,
                    const MixedStrategy& sigma, const StrategyProfile& others,
                    const NodeId& n) {
  const TreeId& T = g.node(n).tree;
  Rational total(0);
  for (const auto& [pure, weight] : sigma.weights) {
    StrategyProfile full = others;
    full.parts[sigma.owner] = pure;
    std::vector<NodeId> path = play_path(g, h, full, T);
    if (std::find(path.begin(), path.end(), n) != path.end()) {
      total += weight;
    }
  }
  return total;
}

Rational oracle_rho(const GameForest& g, const Awareness& h,
                    const BehaviorStrategy& beta, const StrategyProfile& others,
                    const NodeId& n) {
  const Tree& tree = g.trees.at(g.node(n).tree);
  std::map<NodeId, Rational> flow;
  flow[tree.root] = Rational(1);
  std::vector<NodeId> queue = {tree.root};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Node& x = g.node(queue[q]);
    if (!x.is_decision()) continue;
    Rational in = flow[x.id];
    for (const auto& [profile, child] : x.successors) {
      Rational f = in;
      for (PlayerIx j : x.players) {
        const ActionLabel& a = profile.at(j);
        const std::string locus =
            j == kNature ? x.id : *h.assigned(x.id, j);
        const auto& menu = locus_actions(g, h, j, locus);
        bool playable =
            std::find(menu.begin(), menu.end(), a) != menu.end();
        if (j == beta.owner) {
          auto jt = beta.locals.find(locus);
          if (jt == beta.locals.end()) {
            fail(ErrorKind::kArgument,
                 "the behavior strategy does not cover information set " +
                     locus);
          }
          auto kt = jt->second.find(a);
          if (!playable || kt == jt->second.end()) {
            f = Rational(0);
          } else {
            f *= kt->second;
          }
        } else {
          bool taken = false;
          auto pt = others.parts.find(j);
          if (pt != others.parts.end()) {
            auto ct = pt->second.choices.find(locus);
            taken = ct != pt->second.choices.end() && ct->second == a;
          }
          if (!playable || !taken) f = Rational(0);
        }
      }
      flow[child] += f;
      queue.push_back(child);
    }
  }
  return flow[n];
}

}  // namespace efgu
