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

#ifndef EFGU_TESTS_SUPPORT_HPP_
#define EFGU_TESTS_SUPPORT_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "efgu/forest.hpp"

namespace efgu::testing {

inline RawNode dec(
    std::string id, std::vector<PlayerIx> players,
    std::map<PlayerIx, std::vector<ActionLabel>> actions,
    std::vector<std::pair<std::map<PlayerIx, ActionLabel>, NodeId>> succ) {
  RawNode n;
  n.id = std::move(id);
  n.kind = NodeKind::kDecision;
  n.players = std::move(players);
  n.actions = std::move(actions);
  n.successors = std::move(succ);
  return n;
}

inline RawNode term(std::string id, std::map<PlayerIx, Rational> payoffs) {
  RawNode n;
  n.id = std::move(id);
  n.kind = NodeKind::kTerminal;
  n.payoffs = std::move(payoffs);
  return n;
}

inline RawTree tree(std::string id, std::string root,
                    std::vector<RawNode> nodes) {
  RawTree t;
  t.id = std::move(id);
  t.root = std::move(root);
  t.nodes = std::move(nodes);
  return t;
}

inline RawTree subtree(std::string id, std::string root,
                       std::vector<RawNode> nodes,
                       std::map<NodeId, NodeId> copies) {
  RawTree t = tree(std::move(id), std::move(root), std::move(nodes));
  t.copies = std::move(copies);
  t.has_copies = true;
  return t;
}

inline RawInfoset infoset(std::string id, PlayerIx owner, std::string home,
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

// One player, one tree: root r with actions l/r to terminals tl/tr.
inline RawGame tiny_game() {
  RawGame g;
  g.players = {1};
  g.objective = "T";
  g.trees.push_back(tree(
      "T", "r",
      {dec("r", {1}, {{1, {"l", "r"}}}, {{{{1, "l"}}, "tl"}, {{{1, "r"}}, "tr"}}),
       term("tl", {{1, Rational(1)}}), term("tr", {{1, Rational(0)}})}));
  return g;
}

}  // namespace efgu::testing

#endif  // EFGU_TESTS_SUPPORT_HPP_
