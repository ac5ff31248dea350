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

#include "efgu/strategy.hpp"

#include <algorithm>

namespace efgu {
namespace {

void require_actor(const GameForest& g, PlayerIx i) {
  if (!g.is_player(i)) {
    fail(ErrorKind::kArgument, "no actor named " + player_name(i));
  }
}

const PureStrategy& part_of(const StrategyProfile& s, PlayerIx j) {
  auto it = s.parts.find(j);
  if (it == s.parts.end()) {
    fail(ErrorKind::kArgument,
         "the profile has no strategy for player " + player_name(j));
  }
  return it->second;
}

ActionLabel choice_at(const PureStrategy& s, const std::string& locus,
                      PlayerIx j) {
  auto it = s.choices.find(locus);
  if (it == s.choices.end()) {
    fail(ErrorKind::kArgument, "the strategy of player " + player_name(j) +
                                   " does not cover locus " + locus);
  }
  return it->second;
}

}  // namespace

std::vector<std::string> loci(const GameForest& g, const Awareness& h,
                              PlayerIx i) {
  require_actor(g, i);
  std::vector<std::string> out;
  if (i == kNature) {
    for (const auto& [nid, node] : g.nodes) {
      if (node.is_decision() && node.has_player(kNature)) out.push_back(nid);
    }
  } else {
    for (const auto& [hid, set] : h.sets) {
      if (set.owner == i) out.push_back(hid);
    }
  }
  return out;  // map iteration is already sorted
}

const std::vector<ActionLabel>& locus_actions(const GameForest& g,
                                              const Awareness& h, PlayerIx i,
                                              const std::string& locus) {
  if (i == kNature) return g.node(locus).action_set(kNature);
  return h.set(locus).actions;
}

std::vector<PureStrategy> enumerate_pure(const GameForest& g,
                                         const Awareness& h, PlayerIx i,
                                         std::uint64_t cap) {
  std::vector<std::string> places = loci(g, h, i);
  std::uint64_t count = 1;
  for (const std::string& locus : places) {
    std::uint64_t size = locus_actions(g, h, i, locus).size();
    if (size == 0 || count > cap / size) {
      fail(ErrorKind::kCapExceeded, "pure strategies of player " +
                                        player_name(i) + " exceed the cap");
    }
    count *= size;
  }
  std::vector<PureStrategy> out;
  out.reserve(count);
  std::vector<std::size_t> idx(places.size(), 0);
  while (true) {
    PureStrategy s;
    s.owner = i;
    for (std::size_t k = 0; k < places.size(); ++k) {
      s.choices[places[k]] = locus_actions(g, h, i, places[k])[idx[k]];
    }
    out.push_back(std::move(s));
    std::size_t k = places.size();
    while (k > 0) {
      --k;
      if (++idx[k] < locus_actions(g, h, i, places[k]).size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (places.empty()) return out;
  }
}

PureStrategy t_partial_strategy(const PartialGame& pg, const PureStrategy& s) {
  PureStrategy out;
  out.owner = s.owner;
  for (const std::string& locus :
       loci(pg.forest, pg.awareness, s.owner)) {
    auto it = s.choices.find(locus);
    if (it != s.choices.end()) out.choices[locus] = it->second;
  }
  return out;
}

std::vector<NodeId> play_path(const GameForest& g, const Awareness& h,
                              const StrategyProfile& s, const TreeId& T) {
  const Tree& tree = g.tree(T);
  std::vector<NodeId> out;
  NodeId cur = tree.root;
  while (true) {
    out.push_back(cur);
    const Node& node = g.node(cur);
    if (!node.is_decision()) return out;
    std::map<PlayerIx, ActionLabel> profile;
    for (PlayerIx j : node.players) {
      std::string locus =
          j == kNature ? cur : *h.assigned(cur, j);
      ActionLabel a = choice_at(part_of(s, j), locus, j);
      const auto& avail = node.action_set(j);
      if (std::find(avail.begin(), avail.end(), a) == avail.end()) {
        fail(ErrorKind::kInternal, "player " + player_name(j) +
                                       " induces unavailable action " + a +
                                       " at node " + cur);
      }
      profile[j] = a;
    }
    const NodeId* next = nullptr;
    for (const auto& [p, child] : node.successors) {
      if (p == profile) {
        next = &child;
        break;
      }
    }
    if (next == nullptr) {
      fail(ErrorKind::kInternal, "no successor at node " + cur);
    }
    cur = *next;
    if (out.size() > g.nodes.size()) {
      fail(ErrorKind::kInternal, "the play in tree " + T + " does not end");
    }
  }
}

std::set<NodeId> reach_nodes(const GameForest& g, const Awareness& h,
                             const StrategyProfile& s) {
  std::set<NodeId> out;
  for (const TreeId& tid : g.tree_order) {
    for (const NodeId& n : play_path(g, h, s, tid)) out.insert(n);
  }
  return out;
}

std::set<NodeId> occur_nodes(const GameForest& g, const Awareness& h,
                             const StrategyProfile& s) {
  std::vector<NodeId> path = play_path(g, h, s, g.objective);
  std::set<NodeId> on_path(path.begin(), path.end());
  std::set<NodeId> out;
  for (const auto& [nid, node] : g.nodes) {
    if (on_path.count(node.objective) != 0) out.insert(nid);
  }
  return out;
}

std::set<std::string> reached_infosets(const GameForest& g, const Awareness& h,
                                       const StrategyProfile& s, PlayerIx i) {
  std::set<NodeId> reached = reach_nodes(g, h, s);
  std::set<std::string> out;
  for (const auto& [hid, set] : h.sets) {
    if (set.owner != i) continue;
    for (const NodeId& m : set.members) {
      if (reached.count(m) != 0) {
        out.insert(hid);
        break;
      }
    }
  }
  return out;
}

std::set<std::string> occurring_infosets(const GameForest& g,
                                         const Awareness& h,
                                         const StrategyProfile& s,
                                         PlayerIx i) {
  std::set<NodeId> occurring = occur_nodes(g, h, s);
  std::set<std::string> out;
  for (const auto& [hid, set] : h.sets) {
    if (set.owner != i) continue;
    for (const NodeId& a : set.assignments) {
      if (occurring.count(a) != 0) {
        out.insert(hid);
        break;
      }
    }
  }
  return out;
}

std::map<PlayerIx, NodeConstraint> path_constraint(const GameForest& g,
                                                   const Awareness& h,
                                                   const NodeId& n) {
  std::map<PlayerIx, NodeConstraint> out;
  const Node& target = g.node(n);
  std::vector<NodeId> chain;
  for (NodeId cur = target.parent; !cur.empty(); cur = g.node(cur).parent) {
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  for (const NodeId& y : chain) {
    const Node& node = g.node(y);
    const std::map<PlayerIx, ActionLabel>& step =
        child_toward(g, y, n)->step;
    for (PlayerIx j : node.players) {
      const ActionLabel& a = step.at(j);
      NodeConstraint& c = out[j];
      if (j == kNature) {
        c.required[y] = a;
        continue;
      }
      const std::string& locus = *h.assigned(y, j);
      const auto& menu = h.set(locus).actions;
      if (std::find(menu.begin(), menu.end(), a) == menu.end()) {
        c.ok = false;
        continue;
      }
      auto [it, fresh] = c.required.emplace(locus, a);
      if (!fresh && it->second != a) c.ok = false;
    }
  }
  return out;
}

bool matches(const PureStrategy& s, const NodeConstraint& c) {
  if (!c.ok) return false;
  for (const auto& [locus, a] : c.required) {
    auto it = s.choices.find(locus);
    if (it == s.choices.end() || it->second != a) return false;
  }
  return true;
}

std::vector<PureStrategy> strategies_allowing(
    const GameForest& g, const Awareness& h, PlayerIx i, const NodeId& n,
    const std::optional<ActionLabel>& action, std::uint64_t cap) {
  g.node(n);
  std::map<PlayerIx, NodeConstraint> constraint = path_constraint(g, h, n);
  std::string at_n;
  if (action) {
    const Node& node = g.node(n);
    if (!node.is_decision() || !node.has_player(i)) {
      fail(ErrorKind::kArgument, "player " + player_name(i) +
                                     " is not active at node " + n);
    }
    at_n = *h.assigned(n, i);
  }
  std::vector<PureStrategy> out;
  NodeConstraint own = constraint.count(i) ? constraint.at(i)
                                           : NodeConstraint{};
  for (PureStrategy& s : enumerate_pure(g, h, i, cap)) {
    if (!matches(s, own)) continue;
    if (action && s.choices.at(at_n) != *action) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<StrategyProfile> enumerate_others(const GameForest& g,
                                              const Awareness& h, PlayerIx i,
                                              std::uint64_t cap) {
  require_actor(g, i);
  std::vector<PlayerIx> actors;
  for (PlayerIx j : g.actors()) {
    if (j != i) actors.push_back(j);
  }
  std::vector<std::vector<PureStrategy>> per;
  std::uint64_t count = 1;
  for (PlayerIx j : actors) {
    per.push_back(enumerate_pure(g, h, j, cap));
    std::uint64_t size = per.back().size();
    if (size == 0 || count > cap / size) {
      fail(ErrorKind::kCapExceeded,
           "profiles of everyone but " + player_name(i) + " exceed the cap");
    }
    count *= size;
  }
  std::vector<StrategyProfile> out;
  out.reserve(count);
  std::vector<std::size_t> idx(actors.size(), 0);
  while (true) {
    StrategyProfile s;
    for (std::size_t k = 0; k < actors.size(); ++k) {
      s.parts[actors[k]] = per[k][idx[k]];
    }
    out.push_back(std::move(s));
    std::size_t k = actors.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (actors.empty()) return out;
  }
}

namespace {

// Shared across both rho forms: everyone else must be able and willing to
// walk toward n. Returns false when the probability is zero outright.
bool others_deliver(const std::map<PlayerIx, NodeConstraint>& constraint,
                    const StrategyProfile& others, PlayerIx owner) {
  for (const auto& [j, c] : constraint) {
    if (j == owner) continue;
    if (!c.ok) return false;
    if (!matches(part_of(others, j), c)) return false;
  }
  return true;
}

}  // namespace

Rational rho(const GameForest& g, const Awareness& h,
             const MixedStrategy& sigma, const StrategyProfile& others,
             const NodeId& n) {
  std::map<PlayerIx, NodeConstraint> constraint = path_constraint(g, h, n);
  if (!others_deliver(constraint, others, sigma.owner)) return Rational(0);
  auto it = constraint.find(sigma.owner);
  if (it == constraint.end()) return Rational(1);
  if (!it->second.ok) return Rational(0);
  Rational total(0);
  for (const auto& [pure, weight] : sigma.weights) {
    if (matches(pure, it->second)) total += weight;
  }
  return total;
}

Rational rho(const GameForest& g, const Awareness& h,
             const BehaviorStrategy& beta, const StrategyProfile& others,
             const NodeId& n) {
  std::map<PlayerIx, NodeConstraint> constraint = path_constraint(g, h, n);
  if (!others_deliver(constraint, others, beta.owner)) return Rational(0);
  Rational total(1);
  const Node& target = g.node(n);
  for (NodeId cur = target.parent; !cur.empty(); cur = g.node(cur).parent) {
    const Node& y = g.node(cur);
    if (!y.is_decision() || !y.has_player(beta.owner)) continue;
    const ActionLabel& a = child_toward(g, cur, n)->step.at(beta.owner);
    const std::string locus =
        beta.owner == kNature ? cur : *h.assigned(cur, beta.owner);
    const auto& menu = locus_actions(g, h, beta.owner, locus);
    if (std::find(menu.begin(), menu.end(), a) == menu.end()) {
      return Rational(0);
    }
    auto jt = beta.locals.find(locus);
    if (jt == beta.locals.end()) {
      fail(ErrorKind::kArgument,
           "the behavior strategy does not cover information set " + locus);
    }
    auto kt = jt->second.find(a);
    if (kt == jt->second.end()) return Rational(0);
    total *= kt->second;
  }
  return total;
}

Rational occ_prob(const GameForest& g, const Awareness& h,
                  const MixedStrategy& sigma, const StrategyProfile& others,
                  const NodeId& n) {
  return rho(g, h, sigma, others, g.node(n).objective);
}

Rational occ_prob(const GameForest& g, const Awareness& h,
                  const BehaviorStrategy& beta, const StrategyProfile& others,
                  const NodeId& n) {
  return rho(g, h, beta, others, g.node(n).objective);
}

}  // namespace efgu
