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

#include "efgu/forest.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace efgu {
namespace {

std::string describe_profile(const std::map<PlayerIx, ActionLabel>& profile) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, a] : profile) {
    if (!first) out << ",";
    first = false;
    out << player_name(p) << ":" << a;
  }
  return out.str();
}

void check_decision_node(const RawGame& raw, const RawTree& tree,
                         const RawNode& n,
                         const std::set<NodeId>& tree_ids) {
  if (n.players.empty()) {
    fail(ErrorKind::kBuild, "decision node " + n.id + " has no active players");
  }
  std::set<PlayerIx> active(n.players.begin(), n.players.end());
  if (active.size() != n.players.size()) {
    fail(ErrorKind::kBuild, "node " + n.id + " lists a player twice");
  }
  std::size_t profile_count = 1;
  for (PlayerIx p : active) {
    if (p == kNature) {
      if (!raw.nature) {
        fail(ErrorKind::kBuild,
             "node " + n.id + " activates nature but the game has none");
      }
    } else if (std::find(raw.players.begin(), raw.players.end(), p) ==
               raw.players.end()) {
      fail(ErrorKind::kBuild,
           "node " + n.id + " activates unknown player " + player_name(p));
    }
    auto it = n.actions.find(p);
    if (it == n.actions.end() || it->second.empty()) {
      fail(ErrorKind::kBuild, "node " + n.id + " has no actions for player " +
                                  player_name(p));
    }
    std::set<ActionLabel> labels(it->second.begin(), it->second.end());
    if (labels.size() != it->second.size()) {
      fail(ErrorKind::kBuild, "node " + n.id +
                                  " repeats an action label for player " +
                                  player_name(p));
    }
    profile_count *= it->second.size();
  }
  if (n.actions.size() != active.size()) {
    fail(ErrorKind::kBuild,
         "node " + n.id + " declares actions for a non-active player");
  }
  if (!n.payoffs.empty()) {
    fail(ErrorKind::kBuild, "decision node " + n.id + " carries payoffs");
  }
  if (n.successors.size() != profile_count) {
    fail(ErrorKind::kBuild,
         "non-bijective successors at " + n.id + ": " +
             std::to_string(n.successors.size()) + " edges for " +
             std::to_string(profile_count) + " action profiles");
  }
  std::set<std::string> seen_profiles;
  std::set<NodeId> seen_children;
  for (const auto& [profile, child] : n.successors) {
    if (profile.size() != active.size()) {
      fail(ErrorKind::kBuild, "successor profile at " + n.id +
                                  " does not cover the active players");
    }
    for (const auto& [p, a] : profile) {
      auto it = n.actions.find(p);
      if (it == n.actions.end()) {
        fail(ErrorKind::kBuild, "successor profile at " + n.id +
                                    " names non-active player " +
                                    player_name(p));
      }
      if (std::find(it->second.begin(), it->second.end(), a) ==
          it->second.end()) {
        fail(ErrorKind::kBuild, "successor profile at " + n.id +
                                    " uses unknown action " + a);
      }
    }
    if (!seen_profiles.insert(describe_profile(profile)).second) {
      fail(ErrorKind::kBuild,
           "non-bijective successors at " + n.id + ": duplicate profile " +
               describe_profile(profile));
    }
    if (!seen_children.insert(child).second) {
      fail(ErrorKind::kBuild, "non-bijective successors at " + n.id +
                                  ": two profiles lead to " + child);
    }
    if (tree_ids.count(child) == 0) {
      fail(ErrorKind::kBuild, "node " + n.id + " in tree " + tree.id +
                                  " references missing child " + child);
    }
  }
}

void check_terminal_node(const RawGame& raw, const RawNode& n) {
  if (!n.players.empty() || !n.actions.empty() || !n.successors.empty()) {
    fail(ErrorKind::kBuild,
         "terminal node " + n.id + " carries players, actions or successors");
  }
  for (PlayerIx p : raw.players) {
    if (n.payoffs.count(p) == 0) {
      fail(ErrorKind::kBuild, "terminal node " + n.id +
                                  " lacks a payoff for player " +
                                  player_name(p));
    }
  }
  if (n.payoffs.size() != raw.players.size()) {
    fail(ErrorKind::kBuild,
         "terminal node " + n.id + " carries a payoff for an unknown player");
  }
}

void link_tree(GameForest& g, Tree& tree) {
  std::map<NodeId, int> indegree;
  for (const NodeId& id : tree.nodes) {
    for (const auto& [profile, child] : g.nodes.at(id).successors) {
      (void)profile;
      ++indegree[child];
    }
  }
  for (const NodeId& id : tree.nodes) {
    auto it = indegree.find(id);
    int deg = it == indegree.end() ? 0 : it->second;
    if (id == tree.root ? deg > 0 : deg > 1) tree.extra_parent.push_back(id);
  }
  std::set<NodeId> visited{tree.root};
  std::deque<NodeId> queue{tree.root};
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    const Node& node = g.nodes.at(cur);
    for (const auto& [profile, child] : node.successors) {
      if (!visited.insert(child).second) continue;
      Node& ch = g.nodes.at(child);
      ch.parent = cur;
      ch.step = profile;
      ch.depth = node.depth + 1;
      queue.push_back(child);
    }
  }
  for (const NodeId& id : tree.nodes) {
    if (visited.count(id) == 0) tree.unreachable.push_back(id);
  }
}

}  // namespace

bool Node::has_player(PlayerIx p) const {
  return std::find(players.begin(), players.end(), p) != players.end();
}

const std::vector<ActionLabel>& Node::action_set(PlayerIx p) const {
  auto it = actions.find(p);
  if (it == actions.end()) {
    fail(ErrorKind::kArgument,
         "player " + player_name(p) + " is not active at node " + id);
  }
  return it->second;
}

const Node& GameForest::node(const NodeId& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) fail(ErrorKind::kNotFound, "no node named " + id);
  return it->second;
}

const Tree& GameForest::tree(const TreeId& id) const {
  auto it = trees.find(id);
  if (it == trees.end()) fail(ErrorKind::kNotFound, "no tree named " + id);
  return it->second;
}

bool GameForest::is_leq(const TreeId& a, const TreeId& b) const {
  auto it = below.find(b);
  return it != below.end() && it->second.count(a) != 0;
}

std::vector<PlayerIx> GameForest::actors() const {
  std::vector<PlayerIx> out;
  if (nature) out.push_back(kNature);
  out.insert(out.end(), players.begin(), players.end());
  return out;
}

bool GameForest::is_player(PlayerIx p) const {
  if (p == kNature) return nature;
  return std::find(players.begin(), players.end(), p) != players.end();
}

GameForest build_forest(const RawGame& raw) {
  GameForest g;
  g.players = raw.players;
  std::sort(g.players.begin(), g.players.end());
  if (g.players.empty()) {
    fail(ErrorKind::kBuild, "the game declares no players");
  }
  if (g.players.front() <= kNature) {
    fail(ErrorKind::kBuild,
         "player identifiers must be positive; 0 is reserved for nature");
  }
  if (std::adjacent_find(g.players.begin(), g.players.end()) !=
      g.players.end()) {
    fail(ErrorKind::kBuild, "duplicate player identifier");
  }
  g.nature = raw.nature;
  g.objective = raw.objective;

  if (raw.trees.empty()) fail(ErrorKind::kBuild, "the game has no trees");
  for (const RawTree& rt : raw.trees) {
    if (g.trees.count(rt.id) != 0) {
      fail(ErrorKind::kBuild, "duplicate tree identifier " + rt.id);
    }
    if (rt.nodes.empty()) {
      fail(ErrorKind::kBuild, "tree " + rt.id + " has no nodes");
    }
    std::set<NodeId> tree_ids;
    for (const RawNode& rn : rt.nodes) tree_ids.insert(rn.id);
    if (tree_ids.size() != rt.nodes.size()) {
      fail(ErrorKind::kBuild, "duplicate node identifier in tree " + rt.id);
    }
    if (tree_ids.count(rt.root) == 0) {
      fail(ErrorKind::kBuild,
           "tree " + rt.id + " names missing root " + rt.root);
    }
    Tree tree;
    tree.id = rt.id;
    tree.root = rt.root;
    for (const RawNode& rn : rt.nodes) {
      if (g.nodes.count(rn.id) != 0) {
        fail(ErrorKind::kBuild,
             "node identifier " + rn.id + " is used in two trees");
      }
      if (rn.kind == NodeKind::kDecision) {
        check_decision_node(raw, rt, rn, tree_ids);
      } else {
        check_terminal_node(raw, rn);
      }
      Node node;
      node.id = rn.id;
      node.tree = rt.id;
      node.kind = rn.kind;
      node.players = rn.players;
      std::sort(node.players.begin(), node.players.end());
      node.actions = rn.actions;
      node.successors = rn.successors;
      node.payoffs = rn.payoffs;
      g.nodes.emplace(rn.id, std::move(node));
      tree.nodes.push_back(rn.id);
    }
    g.tree_order.push_back(rt.id);
    g.trees.emplace(rt.id, std::move(tree));
  }
  if (g.trees.count(g.objective) == 0) {
    fail(ErrorKind::kBuild, "objective tree " + g.objective + " not found");
  }

  // Copy maps: the objective tree maps to itself, subtrees carry explicit
  // total maps into the objective tree.
  const std::set<NodeId> objective_ids = [&] {
    std::set<NodeId> out;
    for (const NodeId& id : g.trees.at(g.objective).nodes) out.insert(id);
    return out;
  }();
  for (const RawTree& rt : raw.trees) {
    Tree& tree = g.trees.at(rt.id);
    if (rt.id == g.objective) {
      if (rt.has_copies) {
        fail(ErrorKind::kBuild, "objective tree must not declare copies");
      }
      for (const NodeId& id : tree.nodes) {
        tree.copies[id] = id;
        tree.from_objective[id] = id;
        g.nodes.at(id).objective = id;
      }
    } else {
      if (!rt.has_copies) {
        fail(ErrorKind::kBuild, "tree " + rt.id + " declares no copy map");
      }
      for (const NodeId& id : tree.nodes) {
        auto it = rt.copies.find(id);
        if (it == rt.copies.end()) {
          fail(ErrorKind::kBuild,
               "node " + id + " of tree " + rt.id + " copies nothing");
        }
        if (objective_ids.count(it->second) == 0) {
          fail(ErrorKind::kBuild, "node " + id + " copies " + it->second +
                                      " outside the objective tree");
        }
        if (!tree.from_objective.emplace(it->second, id).second) {
          fail(ErrorKind::kBuild, "tree " + rt.id + " copies " + it->second +
                                      " twice");
        }
        tree.copies[id] = it->second;
        g.nodes.at(id).objective = it->second;
      }
      for (const auto& [from, to] : rt.copies) {
        if (tree.copies.count(from) == 0) {
          fail(ErrorKind::kBuild, "copy map of tree " + rt.id +
                                      " names missing node " + from);
        }
        (void)to;
      }
    }
    for (const auto& [from, to] : tree.copies) {
      (void)from;
      tree.footprint.insert(to);
    }
  }

  // The tree order: footprint inclusion. Identical footprints would make two
  // trees indistinguishable, which the loader rejects.
  for (std::size_t i = 0; i < g.tree_order.size(); ++i) {
    for (std::size_t j = i + 1; j < g.tree_order.size(); ++j) {
      if (g.trees.at(g.tree_order[i]).footprint ==
          g.trees.at(g.tree_order[j]).footprint) {
        fail(ErrorKind::kBuild, "trees " + g.tree_order[i] + " and " +
                                    g.tree_order[j] +
                                    " describe the same node set");
      }
    }
  }
  for (const TreeId& a : g.tree_order) {
    for (const TreeId& b : g.tree_order) {
      const std::set<NodeId>& fa = g.trees.at(a).footprint;
      const std::set<NodeId>& fb = g.trees.at(b).footprint;
      if (std::includes(fb.begin(), fb.end(), fa.begin(), fa.end())) {
        g.below[b].insert(a);
      }
    }
  }

  for (auto& [id, tree] : g.trees) {
    (void)id;
    link_tree(g, tree);
  }
  return g;
}

bool is_strict_ancestor(const GameForest& g, const NodeId& anc,
                        const NodeId& desc) {
  for (NodeId cur = g.node(desc).parent; !cur.empty();
       cur = g.node(cur).parent) {
    if (cur == anc) return true;
  }
  return false;
}

const Node* child_toward(const GameForest& g, const NodeId& anc,
                         const NodeId& desc) {
  NodeId cur = desc;
  while (true) {
    const Node& node = g.node(cur);
    if (node.parent.empty()) return nullptr;
    if (node.parent == anc) return &node;
    cur = node.parent;
  }
}

std::vector<NodeId> strict_descendants(const GameForest& g, const NodeId& n) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{n};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    for (const auto& [profile, child] : g.node(cur).successors) {
      (void)profile;
      out.push_back(child);
      stack.push_back(child);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NodeId> copy_in(const GameForest& g, const NodeId& n,
                              const TreeId& T) {
  const Node& node = g.node(n);
  const Tree& target = g.tree(T);
  if (!g.is_leq(T, node.tree)) {
    fail(ErrorKind::kArgument, "tree " + T + " is not below tree " +
                                   node.tree + " of node " + n);
  }
  auto it = target.from_objective.find(node.objective);
  if (it == target.from_objective.end()) return std::nullopt;
  return it->second;
}

TreeId join(const GameForest& g, const TreeId& a, const TreeId& b) {
  g.tree(a);
  g.tree(b);
  std::vector<TreeId> ubs;
  for (const TreeId& t : g.tree_order) {
    if (g.is_leq(a, t) && g.is_leq(b, t)) ubs.push_back(t);
  }
  std::vector<TreeId> minimal;
  for (const TreeId& t : ubs) {
    bool is_min = true;
    for (const TreeId& u : ubs) {
      if (u != t && g.is_leq(u, t)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(t);
  }
  if (minimal.size() != 1) {
    fail(ErrorKind::kArgument, "trees " + a + " and " + b + " have no join");
  }
  return minimal.front();
}

namespace {

// Objective chain from x down to y, exclusive of x. Empty when y is not a
// strict descendant of x.
std::vector<NodeId> objective_chain(const GameForest& g, const NodeId& x,
                                    const NodeId& y) {
  std::vector<NodeId> chain;
  NodeId cur = y;
  while (!cur.empty() && cur != x) {
    chain.push_back(cur);
    cur = g.node(cur).parent;
  }
  if (cur != x) return {};
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void check_subtree_edges(const GameForest& g, const Tree& tree,
                         ViolationReport& report) {
  for (const NodeId& id : tree.nodes) {
    const Node& n = g.node(id);
    const Node& obj = g.node(n.objective);
    if (!n.is_decision()) {
      if (obj.is_decision()) {
        report.add("P1", "",
                   "tree=" + tree.id + " node=" + id + " objective=" + obj.id);
      }
      continue;
    }
    if (!obj.is_decision() || obj.players != n.players) {
      report.add("P2", "",
                 "tree=" + tree.id + " node=" + id + " issue=players");
      continue;
    }
    bool actions_ok = true;
    for (PlayerIx p : n.players) {
      const auto& sub = n.action_set(p);
      const auto& full = obj.action_set(p);
      for (const ActionLabel& a : sub) {
        if (std::find(full.begin(), full.end(), a) == full.end()) {
          report.add("P2", player_name(p),
                     "tree=" + tree.id + " node=" + id + " issue=actions");
          actions_ok = false;
          break;
        }
      }
    }
    if (!actions_ok) continue;
    for (const auto& [profile, child] : n.successors) {
      const Node& ch = g.node(child);
      std::vector<NodeId> chain = objective_chain(g, obj.id, ch.objective);
      if (chain.empty()) {
        report.add("copy", "",
                   "tree=" + tree.id + " node=" + id + " child=" + child);
        continue;
      }
      if (g.node(chain.front()).step != profile) {
        report.add("P2", "",
                   "tree=" + tree.id + " node=" + id + " child=" + child +
                       " issue=first-step");
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        report.add("P0", "",
                   "tree=" + tree.id + " from=" + obj.id +
                       " skipped=" + chain[k] + " to=" + ch.objective);
      }
    }
  }
}

void check_p3(const GameForest& g, const Tree& tree, ViolationReport& report) {
  std::map<PlayerIx, std::vector<const Node*>> by_player;
  for (const NodeId& id : tree.nodes) {
    const Node& n = g.node(id);
    if (!n.is_decision()) continue;
    for (PlayerIx p : n.players) by_player[p].push_back(&n);
  }
  for (const auto& [p, list] : by_player) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const auto& sa = list[i]->action_set(p);
        const auto& sb = list[j]->action_set(p);
        std::set<ActionLabel> a(sa.begin(), sa.end());
        std::set<ActionLabel> b(sb.begin(), sb.end());
        bool overlap = false;
        for (const ActionLabel& l : a) {
          if (b.count(l) != 0) {
            overlap = true;
            break;
          }
        }
        if (overlap && a != b) {
          NodeId lo = std::min(list[i]->id, list[j]->id);
          NodeId hi = std::max(list[i]->id, list[j]->id);
          report.add("P3", player_name(p),
                     "tree=" + tree.id + " a=" + lo + " b=" + hi);
        }
      }
    }
  }
}

}  // namespace

ViolationReport validate_structure(const GameForest& g) {
  ViolationReport report;
  for (const TreeId& tid : g.tree_order) {
    const Tree& tree = g.trees.at(tid);
    for (const NodeId& n : tree.extra_parent) {
      report.add("arborescence", "",
                 "tree=" + tid + " node=" + n + " issue=multi-parent");
    }
    for (const NodeId& n : tree.unreachable) {
      report.add("arborescence", "",
                 "tree=" + tid + " node=" + n + " issue=unreachable");
    }
    if (tid != g.objective) check_subtree_edges(g, tree, report);
    check_p3(g, tree, report);
  }

  for (std::size_t i = 0; i < g.tree_order.size(); ++i) {
    for (std::size_t j = i + 1; j < g.tree_order.size(); ++j) {
      const TreeId& a = g.tree_order[i];
      const TreeId& b = g.tree_order[j];
      std::vector<TreeId> ubs;
      for (const TreeId& t : g.tree_order) {
        if (g.is_leq(a, t) && g.is_leq(b, t)) ubs.push_back(t);
      }
      int minimal = 0;
      for (const TreeId& t : ubs) {
        bool is_min = true;
        for (const TreeId& u : ubs) {
          if (u != t && g.is_leq(u, t)) {
            is_min = false;
            break;
          }
        }
        if (is_min) ++minimal;
      }
      if (minimal != 1) {
        report.add("semilattice", "",
                   "t1=" + std::min(a, b) + " t2=" + std::max(a, b));
      }
    }
  }

  for (const auto& [nid, node] : g.nodes) {
    for (const TreeId& tp : g.tree_order) {
      if (!g.is_leq(tp, node.tree)) continue;
      auto via = copy_in(g, nid, tp);
      if (!via) continue;
      for (const TreeId& t : g.tree_order) {
        if (!g.is_leq(t, tp)) continue;
        auto direct = copy_in(g, nid, t);
        auto composed = copy_in(g, *via, t);
        if (direct != composed) {
          report.add("commute", "",
                     "node=" + nid + " via=" + tp + " to=" + t);
        }
      }
    }
  }

  report.finalize();
  return report;
}

}  // namespace efgu
