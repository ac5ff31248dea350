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

#ifndef EFGU_KUHN_HPP_
#define EFGU_KUHN_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "efgu/awareness.hpp"
#include "efgu/strategy.hpp"

namespace efgu {

// The mixed strategy as a locally weighted one. In checked mode the game
// must validate and the owner must have perfect recall; detection of node
// dependent mixtures is always on.
BehaviorStrategy kuhn_transform(const GameForest& g, const Awareness& h,
                                const MixedStrategy& sigma, bool checked = true,
                                std::uint64_t cap = kDefaultEnumerationCap);

struct Witness {
  NodeId node;
  std::map<PlayerIx, PureStrategy> others;
  Rational mixed_value;
  Rational behavior_value;
};

struct EquivalenceVerdict {
  bool equivalent = true;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;
};

// rho agreement on every (node, profile of the others) pair; the witness is
// the first mismatch in node id then odometer order.
EquivalenceVerdict check_equivalence(const GameForest& g, const Awareness& h,
                                     const MixedStrategy& sigma,
                                     const BehaviorStrategy& beta,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// Same sweep over occurrence probabilities.
EquivalenceVerdict check_realization_equivalence(
    const GameForest& g, const Awareness& h, const MixedStrategy& sigma,
    const BehaviorStrategy& beta, std::uint64_t cap = kDefaultEnumerationCap);

// Members of a view admit the same strategies as the node holding it, in the
// full game and in every T partial restriction.
ViolationReport check_lemma1(const GameForest& g, const Awareness& h,
                             PlayerIx i,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Profiles of i that reach the same nodes against fixed others also make the
// same nodes occur.
ViolationReport check_lemma2(const GameForest& g, const Awareness& h,
                             PlayerIx i,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Deterministic mixtures for sweeps: all point masses, even pairs over the
// first twelve pures, and ten rational triples over the first three.
std::vector<MixedStrategy> make_test_family(
    const GameForest& g, const Awareness& h, PlayerIx i,
    std::uint64_t cap = kDefaultEnumerationCap);

std::vector<MixedStrategy> make_random_family(const GameForest& g,
                                              const Awareness& h, PlayerIx i,
                                              std::uint64_t seed,
                                              std::size_t count);

}  // namespace efgu

#endif  // EFGU_KUHN_HPP_
