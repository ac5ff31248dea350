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

#ifndef EFGU_STRATEGY_HPP_
#define EFGU_STRATEGY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "efgu/awareness.hpp"
#include "efgu/forest.hpp"
#include "efgu/rational.hpp"

namespace efgu {

constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// A locus is where a strategy chooses: an information set id for a player,
// a node id for nature.
struct PureStrategy {
  PlayerIx owner = 0;
  std::map<std::string, ActionLabel> choices;
  auto operator<=>(const PureStrategy&) const = default;
};

struct MixedStrategy {
  PlayerIx owner = 0;
  std::vector<std::pair<PureStrategy, Rational>> weights;
};

struct BehaviorStrategy {
  PlayerIx owner = 0;
  std::map<std::string, std::map<ActionLabel, Rational>> locals;
};

struct StrategyProfile {
  std::map<PlayerIx, PureStrategy> parts;
  auto operator<=>(const StrategyProfile&) const = default;
};

std::vector<std::string> loci(const GameForest& g, const Awareness& h,
                              PlayerIx i);

const std::vector<ActionLabel>& locus_actions(const GameForest& g,
                                              const Awareness& h, PlayerIx i,
                                              const std::string& locus);

// All pure strategies of i, last locus varying fastest, actions in declared
// order.
std::vector<PureStrategy> enumerate_pure(
    const GameForest& g, const Awareness& h, PlayerIx i,
    std::uint64_t cap = kDefaultEnumerationCap);

// Restriction of a pure strategy to the loci of a partial game.
PureStrategy t_partial_strategy(const PartialGame& pg, const PureStrategy& s);

// The unique play the profile induces in tree T, root to terminal.
std::vector<NodeId> play_path(const GameForest& g, const Awareness& h,
                              const StrategyProfile& s, const TreeId& T);

// Nodes the profile reaches: every tree is played out under the views its
// nodes carry.
std::set<NodeId> reach_nodes(const GameForest& g, const Awareness& h,
                             const StrategyProfile& s);

// Nodes that occur: the objective play plus all its copies.
std::set<NodeId> occur_nodes(const GameForest& g, const Awareness& h,
                             const StrategyProfile& s);

std::set<std::string> reached_infosets(const GameForest& g, const Awareness& h,
                                       const StrategyProfile& s, PlayerIx i);

std::set<std::string> occurring_infosets(const GameForest& g,
                                         const Awareness& h,
                                         const StrategyProfile& s, PlayerIx i);

// What reaching n asks of each actor on the way there.
struct NodeConstraint {
  bool ok = true;
  std::map<std::string, ActionLabel> required;
};

std::map<PlayerIx, NodeConstraint> path_constraint(const GameForest& g,
                                                   const Awareness& h,
                                                   const NodeId& n);

bool matches(const PureStrategy& s, const NodeConstraint& c);

// Pure strategies of i compatible with reaching n, optionally taking a there.
std::vector<PureStrategy> strategies_allowing(
    const GameForest& g, const Awareness& h, PlayerIx i, const NodeId& n,
    const std::optional<ActionLabel>& action = std::nullopt,
    std::uint64_t cap = kDefaultEnumerationCap);

// Full profiles of everyone but i, last actor and last locus fastest.
std::vector<StrategyProfile> enumerate_others(
    const GameForest& g, const Awareness& h, PlayerIx i,
    std::uint64_t cap = kDefaultEnumerationCap);

// Probability that the play visits n when the owner mixes and the rest play
// others.
Rational rho(const GameForest& g, const Awareness& h,
             const MixedStrategy& sigma, const StrategyProfile& others,
             const NodeId& n);
Rational rho(const GameForest& g, const Awareness& h,
             const BehaviorStrategy& beta, const StrategyProfile& others,
             const NodeId& n);

// Probability that n occurs: its objective copy is visited.
Rational occ_prob(const GameForest& g, const Awareness& h,
                  const MixedStrategy& sigma, const StrategyProfile& others,
                  const NodeId& n);
Rational occ_prob(const GameForest& g, const Awareness& h,
                  const BehaviorStrategy& beta, const StrategyProfile& others,
                  const NodeId& n);

}  // namespace efgu

#endif  // EFGU_STRATEGY_HPP_
