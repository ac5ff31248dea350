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

#ifndef EFGU_DOCUMENT_HPP_
#define EFGU_DOCUMENT_HPP_

#include <map>
#include <string>
#include <vector>

#include "efgu/awareness.hpp"
#include "efgu/forest.hpp"
#include "efgu/strategy.hpp"

namespace efgu {

// Strategies as they appear in a document: weights stay textual so that a
// parse/serialize round trip is exact.
struct RawStrategy {
  std::string name;
  PlayerIx owner = 0;
  std::string kind;  // "pure" | "mixed" | "behavior"
  std::map<std::string, ActionLabel> choices;  // pure
  struct Entry {
    std::map<std::string, ActionLabel> choices;
    std::string weight;
  };
  std::vector<Entry> weights;  // mixed
  std::map<std::string, std::map<ActionLabel, std::string>> locals;  // behavior
};

struct RawProfile {
  std::string name;
  std::map<PlayerIx, std::string> strategies;  // actor -> strategy name
};

struct RawDocument {
  RawGame game;
  std::vector<RawStrategy> strategies;
  std::vector<RawProfile> profiles;
};

// Strict reader for the efgu/1 schema. Malformed JSON or rational literals
// raise kParse; schema-level problems (unknown keys, wrong types, duplicate
// names) raise kBuild.
RawDocument parse_document(const std::string& text);

// Canonical form: keys sorted, trees/nodes/sets by id, strategies/profiles
// by name, members and assignments sorted, two-space indentation.
std::string serialize_document(const RawDocument& doc);

struct NamedStrategy {
  std::string name;
  std::string kind;
  PlayerIx owner = 0;
  PureStrategy pure;
  MixedStrategy mixed;
  BehaviorStrategy behavior;
};

struct NamedProfile {
  std::string name;
  std::map<PlayerIx, std::string> strategies;
};

struct GameBundle {
  GameForest forest;
  Awareness awareness;
  std::vector<NamedStrategy> strategies;
  std::vector<NamedProfile> profiles;

  const NamedStrategy* find_strategy(const std::string& name) const;
  const NamedProfile* find_profile(const std::string& name) const;
  // Assembles the named profile into pure parts. Throws kNotFound for an
  // unknown name, kArgument when an entry is not a pure strategy.
  StrategyProfile assemble(const std::string& name) const;
};

// Builds the forest and awareness and resolves strategy references. Throws
// Error(kBuild) on duplicate or dangling names and owner mismatches.
GameBundle load_document(const RawDocument& doc);

// Graphviz rendering, one cluster per tree.
std::string export_dot(const GameForest& g, const Awareness& h);

}  // namespace efgu

#endif  // EFGU_DOCUMENT_HPP_
