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

#include "efgu/awareness.hpp"

#include <algorithm>

namespace efgu {
namespace {

bool sorted_contains(const std::vector<NodeId>& v, const NodeId& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// A copy instance participates in the awareness properties only when it is a
// decision node where the owner acts.
bool well_typed(const GameForest& g, PlayerIx owner, const NodeId& c) {
  const Node& node = g.node(c);
  return node.is_decision() && node.has_player(owner);
}

}  // namespace

const Infoset& Awareness::set(const std::string& id) const {
  auto it = sets.find(id);
  if (it == sets.end()) {
    fail(ErrorKind::kNotFound, "no information set named " + id);
  }
  return it->second;
}

const std::string* Awareness::assigned(const NodeId& n, PlayerIx p) const {
  auto it = at.find(n);
  if (it == at.end()) return nullptr;
  auto jt = it->second.find(p);
  return jt == it->second.end() ? nullptr : &jt->second;
}

Awareness build_awareness(const GameForest& g,
                          const std::vector<RawInfoset>& raw) {
  Awareness h;
  for (const RawInfoset& rh : raw) {
    if (h.sets.count(rh.id) != 0) {
      fail(ErrorKind::kBuild,
           "duplicate information set identifier " + rh.id);
    }
    if (rh.owner == kNature) {
      fail(ErrorKind::kBuild,
           "information set " + rh.id + " is owned by nature");
    }
    if (!g.is_player(rh.owner)) {
      fail(ErrorKind::kBuild, "information set " + rh.id +
                                  " has unknown owner " +
                                  player_name(rh.owner));
    }
    if (g.trees.count(rh.home) == 0) {
      fail(ErrorKind::kBuild, "information set " + rh.id +
                                  " names missing home tree " + rh.home);
    }
    if (rh.members.empty()) {
      fail(ErrorKind::kBuild, "information set " + rh.id + " has no members");
    }
    Infoset set;
    set.id = rh.id;
    set.owner = rh.owner;
    set.home = rh.home;
    set.members = rh.members;
    std::sort(set.members.begin(), set.members.end());
    if (std::adjacent_find(set.members.begin(), set.members.end()) !=
        set.members.end()) {
      fail(ErrorKind::kBuild,
           "information set " + rh.id + " lists a member twice");
    }
    for (const NodeId& m : set.members) {
      if (!g.has_node(m)) {
        fail(ErrorKind::kBuild,
             "information set " + rh.id + " names missing member " + m);
      }
      const Node& node = g.node(m);
      if (node.tree != rh.home) {
        fail(ErrorKind::kBuild, "member " + m + " of information set " +
                                    rh.id + " lies outside the home tree");
      }
      if (!node.is_decision()) {
        fail(ErrorKind::kBuild, "member " + m + " of information set " +
                                    rh.id + " is terminal");
      }
      if (!node.has_player(rh.owner)) {
        fail(ErrorKind::kBuild, "the owner of information set " + rh.id +
                                    " is inactive at member " + m);
      }
    }
    set.assignments = rh.assignments;
    std::sort(set.assignments.begin(), set.assignments.end());
    for (const NodeId& a : set.assignments) {
      if (!g.has_node(a)) {
        fail(ErrorKind::kBuild,
             "information set " + rh.id + " is assigned at missing node " + a);
      }
      const Node& node = g.node(a);
      if (!node.is_decision()) {
        fail(ErrorKind::kBuild,
             "information set " + rh.id + " is assigned at terminal node " + a);
      }
      if (!node.has_player(rh.owner)) {
        fail(ErrorKind::kBuild, "information set " + rh.id +
                                    " is assigned at node " + a +
                                    " where its owner is inactive");
      }
      if (!h.at[a].emplace(rh.owner, rh.id).second) {
        fail(ErrorKind::kBuild, "node " + a +
                                    " carries two information sets for player " +
                                    player_name(rh.owner));
      }
    }
    set.actions = g.node(set.members.front()).action_set(rh.owner);
    h.order.push_back(rh.id);
    h.sets.emplace(rh.id, std::move(set));
  }

  for (const auto& [nid, node] : g.nodes) {
    if (!node.is_decision()) continue;
    for (PlayerIx p : node.players) {
      if (p == kNature) continue;
      if (h.assigned(nid, p) == nullptr) {
        fail(ErrorKind::kBuild, "player " + player_name(p) +
                                    " has no information set at node " + nid);
      }
    }
  }
  for (const auto& [hid, set] : h.sets) {
    (void)set;
    if (h.sets.at(hid).assignments.empty()) {
      fail(ErrorKind::kBuild,
           "information set " + hid + " is never assigned");
    }
  }
  return h;
}

ViolationReport validate_awareness(const GameForest& g, const Awareness& h) {
  ViolationReport report;
  for (const auto& [nid, slots] : h.at) {
    const Node& n = g.node(nid);
    for (const auto& [i, hid] : slots) {
      const Infoset& set = h.sets.at(hid);
      const std::string player = player_name(i);

      if (!g.is_leq(set.home, n.tree)) {
        report.add("U0", player, "set=" + hid + " node=" + nid);
      } else {
        auto c = copy_in(g, nid, set.home);
        if (c && well_typed(g, i, *c) && !sorted_contains(set.members, *c)) {
          report.add("U1", player,
                     "set=" + hid + " node=" + nid + " copy=" + *c);
        }
      }

      const auto& avail = n.action_set(i);
      for (const ActionLabel& a : set.actions) {
        if (std::find(avail.begin(), avail.end(), a) == avail.end()) {
          report.add("I4", player,
                     "set=" + hid + " node=" + nid + " action=" + a);
          break;
        }
      }

      for (const TreeId& tp : g.tree_order) {
        if (!g.is_leq(set.home, tp) || !g.is_leq(tp, n.tree)) continue;
        auto c = copy_in(g, nid, tp);
        if (!c || !well_typed(g, i, *c)) continue;
        const std::string* hc = h.assigned(*c, i);
        if (hc == nullptr || *hc != hid) {
          report.add("U4", player, "set=" + hid + " node=" + nid +
                                       " tree=" + tp + " copy=" + *c);
        }
      }

      for (const TreeId& t : g.tree_order) {
        if (!g.is_leq(t, set.home) || !g.is_leq(t, n.tree)) continue;
        auto c = copy_in(g, nid, t);
        if (!c || !well_typed(g, i, *c)) continue;
        const std::string* hc = h.assigned(*c, i);
        if (hc == nullptr) continue;
        std::set<NodeId> required;
        for (const NodeId& m : set.members) {
          auto mc = copy_in(g, m, t);
          if (mc) required.insert(*mc);
        }
        const Infoset& other = h.sets.at(*hc);
        std::set<NodeId> actual(other.members.begin(), other.members.end());
        if (actual != required) {
          report.add("U5", player,
                     "set=" + hid + " node=" + nid + " tree=" + t);
        }
      }

      if (sorted_contains(set.members, nid)) {
        for (const TreeId& t : g.tree_order) {
          if (!g.is_leq(t, n.tree)) continue;
          auto c = copy_in(g, nid, t);
          if (!c || !well_typed(g, i, *c)) continue;
          const std::string* hc = h.assigned(*c, i);
          if (hc == nullptr) continue;
          if (!sorted_contains(h.sets.at(*hc).members, *c)) {
            report.add("U3", player,
                       "set=" + hid + " node=" + nid + " tree=" + t);
          }
        }
      }
    }
  }

  for (const auto& [hid, set] : h.sets) {
    const std::string player = player_name(set.owner);
    for (const NodeId& m : set.members) {
      const std::string* hm = h.assigned(m, set.owner);
      if (hm != nullptr && *hm != hid) {
        report.add("I2", player,
                   "set=" + hid + " member=" + m + " assigned=" + *hm);
      }
      for (const NodeId& d : strict_descendants(g, m)) {
        const Node& dn = g.node(d);
        if (!dn.is_decision() || !dn.has_player(set.owner)) continue;
        const std::string* hd = h.assigned(d, set.owner);
        if (hd == nullptr) continue;
        if (h.sets.at(*hd).home != set.home) {
          report.add("I3", player,
                     "set=" + hid + " member=" + m + " node=" + d);
        }
      }
    }
  }

  for (const TreeId& tid : g.tree_order) {
    const Tree& tree = g.trees.at(tid);
    std::map<PlayerIx, std::vector<const Node*>> by_player;
    for (const NodeId& nid : tree.nodes) {
      const Node& n = g.node(nid);
      if (!n.is_decision()) continue;
      for (PlayerIx p : n.players) {
        if (p != kNature) by_player[p].push_back(&n);
      }
    }
    for (const auto& [p, list] : by_player) {
      for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = a + 1; b < list.size(); ++b) {
          const auto& sa = list[a]->action_set(p);
          const auto& sb = list[b]->action_set(p);
          if (std::set<ActionLabel>(sa.begin(), sa.end()) !=
              std::set<ActionLabel>(sb.begin(), sb.end())) {
            continue;
          }
          const std::string* ha = h.assigned(list[a]->id, p);
          const std::string* hb = h.assigned(list[b]->id, p);
          if (ha != nullptr && hb != nullptr && *ha != *hb) {
            NodeId lo = std::min(list[a]->id, list[b]->id);
            NodeId hi = std::max(list[a]->id, list[b]->id);
            report.add("I5", player_name(p),
                       "tree=" + tid + " a=" + lo + " b=" + hi);
          }
        }
      }
    }
  }

  report.finalize();
  return report;
}

namespace {

void direct_recall_for(const GameForest& g, const Awareness& h, PlayerIx i,
                       ViolationReport& report) {
  for (const auto& [nk_id, node] : g.nodes) {
    if (!node.is_decision() || !node.has_player(i)) continue;
    const std::string* hk = h.assigned(nk_id, i);
    if (hk == nullptr) continue;
    const Infoset& set = h.sets.at(*hk);
    for (NodeId cur = node.parent; !cur.empty(); cur = g.node(cur).parent) {
      const Node& n1 = g.node(cur);
      if (!n1.is_decision() || !n1.has_player(i)) continue;
      const std::string* h1 = h.assigned(cur, i);
      if (h1 == nullptr) continue;
      ActionLabel a = child_toward(g, cur, nk_id)->step.at(i);
      for (const NodeId& m : set.members) {
        bool found = false;
        for (NodeId anc = g.node(m).parent; !anc.empty();
             anc = g.node(anc).parent) {
          const Node& cand = g.node(anc);
          if (!cand.is_decision() || !cand.has_player(i)) continue;
          const std::string* hc = h.assigned(anc, i);
          if (hc == nullptr || *hc != *h1) continue;
          if (child_toward(g, anc, m)->step.at(i) == a) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.add("I6", player_name(i),
                     "anc=" + cur + " action=" + a + " node=" + nk_id +
                         " member=" + m);
        }
      }
    }
  }
}

}  // namespace

ViolationReport check_perfect_recall_direct(const GameForest& g,
                                            const Awareness& h) {
  ViolationReport report;
  for (PlayerIx i : g.players) direct_recall_for(g, h, i, report);
  report.finalize();
  return report;
}

ViolationReport check_perfect_recall_direct(const GameForest& g,
                                            const Awareness& h, PlayerIx i) {
  ViolationReport report;
  direct_recall_for(g, h, i, report);
  report.finalize();
  return report;
}

ExperienceRecord experience_record(const GameForest& g, const Awareness& h,
                                   PlayerIx i, const NodeId& n) {
  const Node& node = g.node(n);
  if (!node.is_decision() || !node.has_player(i)) {
    fail(ErrorKind::kArgument,
         "player " + player_name(i) + " is not active at node " + n);
  }
  std::vector<std::pair<std::string, ActionLabel>> steps;
  for (NodeId cur = node.parent; !cur.empty(); cur = g.node(cur).parent) {
    const Node& y = g.node(cur);
    if (!y.is_decision() || !y.has_player(i)) continue;
    const std::string* hy = h.assigned(cur, i);
    steps.push_back({hy ? *hy : std::string(),
                     child_toward(g, cur, n)->step.at(i)});
  }
  std::reverse(steps.begin(), steps.end());
  return ExperienceRecord{std::move(steps)};
}

ViolationReport check_perfect_recall_records(const GameForest& g,
                                             const Awareness& h) {
  ViolationReport report;
  for (const auto& [nid, slots] : h.at) {
    for (const auto& [i, hid] : slots) {
      ExperienceRecord mine = experience_record(g, h, i, nid);
      for (const NodeId& m : h.sets.at(hid).members) {
        if (experience_record(g, h, i, m) != mine) {
          report.add("I6records", player_name(i),
                     "node=" + nid + " member=" + m);
        }
      }
    }
  }
  report.finalize();
  return report;
}

ViolationReport check_perfect_recall_selten(const GameForest& g,
                                            const Awareness& h) {
  ViolationReport report;
  std::map<std::string, std::vector<NodeId>> assigned_at;
  for (const auto& [nid, slots] : h.at) {
    for (const auto& [i, hid] : slots) {
      (void)i;
      assigned_at[hid].push_back(nid);
    }
  }
  for (const auto& [nk_id, slots] : h.at) {
    const Node& node = g.node(nk_id);
    for (const auto& [i, hk] : slots) {
      for (NodeId cur = node.parent; !cur.empty(); cur = g.node(cur).parent) {
        const Node& n1 = g.node(cur);
        if (!n1.is_decision() || !n1.has_player(i)) continue;
        const std::string* h1 = h.assigned(cur, i);
        if (h1 == nullptr) continue;
        ActionLabel a = child_toward(g, cur, nk_id)->step.at(i);
        for (const NodeId& other : assigned_at.at(hk)) {
          bool found = false;
          for (NodeId anc = g.node(other).parent; !anc.empty();
               anc = g.node(anc).parent) {
            const Node& cand = g.node(anc);
            if (!cand.is_decision() || !cand.has_player(i)) continue;
            const std::string* hc = h.assigned(anc, i);
            if (hc == nullptr || *hc != *h1) continue;
            if (child_toward(g, anc, other)->step.at(i) == a) {
              found = true;
              break;
            }
          }
          if (!found) {
            report.add("I6selten", player_name(i),
                       "anc=" + cur + " action=" + a + " node=" + nk_id +
                           " other=" + other);
          }
        }
      }
    }
  }
  report.finalize();
  return report;
}

ViolationReport check_derived(const GameForest& g, const Awareness& h) {
  ViolationReport report;

  for (const auto& [hid, set] : h.sets) {
    for (const NodeId& m1 : set.members) {
      for (const NodeId& m2 : set.members) {
        if (m1 != m2 && is_strict_ancestor(g, m1, m2)) {
          report.add("absentmindedness", player_name(set.owner),
                     "set=" + hid + " a=" + m1 + " b=" + m2);
        }
      }
    }
  }

  for (const auto& [nid, slots] : h.at) {
    const Node& node = g.node(nid);
    for (const auto& [i, hd] : slots) {
      const TreeId& down = h.sets.at(hd).home;
      for (NodeId cur = node.parent; !cur.empty(); cur = g.node(cur).parent) {
        const Node& anc = g.node(cur);
        if (!anc.is_decision() || !anc.has_player(i)) continue;
        const std::string* ha = h.assigned(cur, i);
        if (ha == nullptr) continue;
        if (!g.is_leq(h.sets.at(*ha).home, down)) {
          report.add("DA", player_name(i),
                     "tree=" + node.tree + " anc=" + cur + " desc=" + nid);
        }
      }
    }
  }

  auto precedes = [&](const Infoset& a, const Infoset& b) {
    for (const NodeId& mb : b.members) {
      bool covered = false;
      for (const NodeId& ma : a.members) {
        if (is_strict_ancestor(g, ma, mb)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };
  for (const auto& [hid, set] : h.sets) {
    std::vector<const Infoset*> preds;
    for (const auto& [oid, other] : h.sets) {
      if (oid == hid || other.owner != set.owner) continue;
      if (precedes(other, set)) preds.push_back(&other);
    }
    for (std::size_t a = 0; a < preds.size(); ++a) {
      for (std::size_t b = a + 1; b < preds.size(); ++b) {
        if (!precedes(*preds[a], *preds[b]) &&
            !precedes(*preds[b], *preds[a])) {
          report.add("infoset-precedence", player_name(set.owner),
                     "set=" + hid + " a=" + preds[a]->id +
                         " b=" + preds[b]->id);
        }
      }
    }
  }

  report.finalize();
  return report;
}

TreeRelations tree_relations(const GameForest& g, const Awareness& h) {
  TreeRelations rel;
  for (const auto& [nid, slots] : h.at) {
    const Node& node = g.node(nid);
    for (const auto& [i, hid] : slots) {
      (void)i;
      rel.direct.insert({node.tree, h.sets.at(hid).home});
    }
  }
  rel.closure = rel.direct;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<TreeId, TreeId>> add;
    for (const auto& [a, b] : rel.closure) {
      for (const auto& [c, d] : rel.closure) {
        if (b == c && rel.closure.count({a, d}) == 0) add.push_back({a, d});
      }
    }
    for (const auto& p : add) {
      rel.closure.insert(p);
      changed = true;
    }
  }
  return rel;
}

PartialGame t_partial_game(const GameForest& g, const Awareness& h,
                           const TreeId& T) {
  g.tree(T);
  TreeRelations rel = tree_relations(g, h);
  std::set<TreeId> keep{T};
  for (const auto& [a, b] : rel.closure) {
    if (a == T) keep.insert(b);
  }

  RawGame raw;
  raw.players = g.players;
  raw.nature = g.nature;
  raw.objective = T;
  const Tree& target = g.trees.at(T);
  for (const TreeId& tid : g.tree_order) {
    if (keep.count(tid) == 0) continue;
    const Tree& tree = g.trees.at(tid);
    RawTree rt;
    rt.id = tid;
    rt.root = tree.root;
    for (const NodeId& nid : tree.nodes) {
      const Node& n = g.nodes.at(nid);
      RawNode rn;
      rn.id = nid;
      rn.kind = n.kind;
      rn.players = n.players;
      rn.actions = n.actions;
      rn.successors = n.successors;
      rn.payoffs = n.payoffs;
      rt.nodes.push_back(std::move(rn));
    }
    if (tid != T) {
      if (!g.is_leq(tid, T)) {
        fail(ErrorKind::kArgument,
             "tree " + tid + " in the restriction is not below " + T);
      }
      rt.has_copies = true;
      for (const NodeId& nid : tree.nodes) {
        rt.copies[nid] = target.from_objective.at(g.nodes.at(nid).objective);
      }
    }
    raw.trees.push_back(std::move(rt));
  }

  std::vector<RawInfoset> sets;
  for (const std::string& hid : h.order) {
    const Infoset& s = h.sets.at(hid);
    if (keep.count(s.home) == 0) continue;
    RawInfoset rh;
    rh.id = hid;
    rh.owner = s.owner;
    rh.home = s.home;
    rh.members = s.members;
    for (const NodeId& a : s.assignments) {
      if (keep.count(g.nodes.at(a).tree) != 0) rh.assignments.push_back(a);
    }
    if (rh.assignments.empty()) continue;
    sets.push_back(std::move(rh));
  }

  PartialGame out;
  out.forest = build_forest(raw);
  out.awareness = build_awareness(out.forest, sets);
  return out;
}

}  // namespace efgu
