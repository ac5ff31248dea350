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

#ifndef EFGU_AWARENESS_HPP_
#define EFGU_AWARENESS_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "efgu/forest.hpp"
#include "efgu/report.hpp"

namespace efgu {

// An information set: members describe what the owner considers possible,
// assignments name the nodes where the set is the owner's current view.
struct Infoset {
  std::string id;
  PlayerIx owner = 0;
  TreeId home;
  std::vector<NodeId> members;      // sorted, all in the home tree
  std::vector<NodeId> assignments;  // sorted, may lie in any tree
  std::vector<ActionLabel> actions;  // owner's choices at this set
};

struct Awareness {
  std::vector<std::string> order;  // declaration order
  std::map<std::string, Infoset> sets;
  // node -> player -> infoset id; total over active non-nature pairs.
  std::map<NodeId, std::map<PlayerIx, std::string>> at;

  const Infoset& set(const std::string& id) const;
  const std::string* assigned(const NodeId& n, PlayerIx p) const;
};

Awareness build_awareness(const GameForest& g,
                          const std::vector<RawInfoset>& raw);

// Properties U0, U1, I2, I3, I4, I5, U4, U5 and the diagnostic U3.
ViolationReport validate_awareness(const GameForest& g, const Awareness& h);

// Perfect recall, three readings that agree on emptiness.
ViolationReport check_perfect_recall_direct(const GameForest& g,
                                            const Awareness& h);
ViolationReport check_perfect_recall_direct(const GameForest& g,
                                            const Awareness& h, PlayerIx i);
ViolationReport check_perfect_recall_records(const GameForest& g,
                                             const Awareness& h);
ViolationReport check_perfect_recall_selten(const GameForest& g,
                                            const Awareness& h);

struct ExperienceRecord {
  std::vector<std::pair<std::string, ActionLabel>> steps;
  bool operator==(const ExperienceRecord&) const = default;
};

// The (information set, own action) sequence player i walked through on the
// way to n. Requires i to be active at n.
ExperienceRecord experience_record(const GameForest& g, const Awareness& h,
                                   PlayerIx i, const NodeId& n);

// Derived diagnostics: absentmindedness, DA, infoset-precedence.
ViolationReport check_derived(const GameForest& g, const Awareness& h);

struct TreeRelations {
  std::set<std::pair<TreeId, TreeId>> direct;   // some view in T lives in T'
  std::set<std::pair<TreeId, TreeId>> closure;  // transitive closure
};

TreeRelations tree_relations(const GameForest& g, const Awareness& h);

struct PartialGame {
  GameForest forest;
  Awareness awareness;
};

// Restriction to T and every tree reachable from it through awareness.
PartialGame t_partial_game(const GameForest& g, const Awareness& h,
                           const TreeId& T);

}  // namespace efgu

#endif  // EFGU_AWARENESS_HPP_
