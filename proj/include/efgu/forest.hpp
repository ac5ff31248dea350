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

#ifndef EFGU_FOREST_HPP_
#define EFGU_FOREST_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "efgu/error.hpp"
#include "efgu/rational.hpp"
#include "efgu/report.hpp"

namespace efgu {

using NodeId = std::string;
using TreeId = std::string;
using ActionLabel = std::string;

// Player 0 is reserved for nature; regular players are positive.
using PlayerIx = int;
constexpr PlayerIx kNature = 0;

inline std::string player_name(PlayerIx p) { return std::to_string(p); }

enum class NodeKind { kDecision, kTerminal };

// Document-shaped input. build_forest consumes these and rejects anything
// referentially broken; property violations are left to validate_structure
// so that negative fixtures still load.
struct RawNode {
  NodeId id;
  NodeKind kind = NodeKind::kDecision;
  std::vector<PlayerIx> players;
  std::map<PlayerIx, std::vector<ActionLabel>> actions;
  std::vector<std::pair<std::map<PlayerIx, ActionLabel>, NodeId>> successors;
  std::map<PlayerIx, Rational> payoffs;
};

struct RawTree {
  TreeId id;
  NodeId root;
  std::vector<RawNode> nodes;
  // For subtrees: total map node -> objective node. Absent on the objective
  // tree itself.
  std::map<NodeId, NodeId> copies;
  bool has_copies = false;
};

struct RawInfoset {
  std::string id;
  PlayerIx owner = 0;
  TreeId home;
  std::vector<NodeId> members;
  std::vector<NodeId> assignments;
};

struct RawGame {
  std::vector<PlayerIx> players;  // non-nature players
  bool nature = false;
  TreeId objective;
  std::vector<RawTree> trees;
  std::vector<RawInfoset> infosets;
};

struct Node {
  NodeId id;
  TreeId tree;
  NodeKind kind = NodeKind::kDecision;
  std::vector<PlayerIx> players;  // ascending, nature first
  std::map<PlayerIx, std::vector<ActionLabel>> actions;
  std::vector<std::pair<std::map<PlayerIx, ActionLabel>, NodeId>> successors;
  std::map<PlayerIx, Rational> payoffs;
  NodeId parent;                          // empty at the root
  std::map<PlayerIx, ActionLabel> step;   // edge profile parent -> this node
  int depth = 0;
  NodeId objective;  // objective-tree node this node is a copy of

  bool is_decision() const { return kind == NodeKind::kDecision; }
  bool has_player(PlayerIx p) const;
  const std::vector<ActionLabel>& action_set(PlayerIx p) const;
};

struct Tree {
  TreeId id;
  NodeId root;
  std::vector<NodeId> nodes;            // document order
  std::map<NodeId, NodeId> copies;      // this tree -> objective
  std::map<NodeId, NodeId> from_objective;
  std::set<NodeId> footprint;           // objective ids covered by this tree
  // Arborescence diagnostics collected while linking: nodes reached through
  // more than one successor edge (or a root that is somebody's child), and
  // nodes never reached from the root.
  std::vector<NodeId> extra_parent;
  std::vector<NodeId> unreachable;
};

struct GameForest {
  std::vector<PlayerIx> players;  // non-nature, ascending
  bool nature = false;
  TreeId objective;
  std::vector<TreeId> tree_order;  // document order
  std::map<TreeId, Tree> trees;
  std::map<NodeId, Node> nodes;  // ids are unique across the forest
  std::map<TreeId, std::set<TreeId>> below;  // below[T] = {T' : T' <= T}

  const Node& node(const NodeId& id) const;
  const Tree& tree(const TreeId& id) const;
  bool has_node(const NodeId& id) const { return nodes.count(id) != 0; }
  bool is_leq(const TreeId& a, const TreeId& b) const;
  // All acting parties, nature first when present.
  std::vector<PlayerIx> actors() const;
  bool is_player(PlayerIx p) const;
};

// Links the raw description into an immutable forest. Throws Error(kBuild)
// on referential breakage (dangling ids, duplicate ids, non-bijective
// successors, copies leaving the objective tree, malformed payoffs, ...).
// Does not check the subtree properties; see validate_structure.
GameForest build_forest(const RawGame& raw);

// Strict ancestry inside a single tree.
bool is_strict_ancestor(const GameForest& g, const NodeId& anc,
                        const NodeId& desc);

// The child of anc on the path toward desc; nullptr when anc is not a
// strict ancestor of desc.
const Node* child_toward(const GameForest& g, const NodeId& anc,
                         const NodeId& desc);

// Strict descendants of n inside its own tree, sorted by identifier.
std::vector<NodeId> strict_descendants(const GameForest& g, const NodeId& n);

// Collects every violation of the subtree properties P0-P3 together with
// arborescence, join-semilattice and nodes-commute checks. Empty report
// means the forest is structurally a game forest.
ViolationReport validate_structure(const GameForest& g);

// The copy of node n inside tree T, if any. Requires T <= tree of n.
std::optional<NodeId> copy_in(const GameForest& g, const NodeId& n,
                              const TreeId& T);

// Least upper bound of two trees. Throws Error(kArgument) when the pair has
// no join (validate_structure reports such pairs as violations).
TreeId join(const GameForest& g, const TreeId& a, const TreeId& b);

}  // namespace efgu

#endif  // EFGU_FOREST_HPP_
