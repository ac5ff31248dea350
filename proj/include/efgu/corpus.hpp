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

#ifndef EFGU_CORPUS_HPP_
#define EFGU_CORPUS_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "efgu/document.hpp"
#include "efgu/strategy.hpp"

namespace efgu {

// A named example with the violation classes its validators are expected to
// report; empty for clean games.
struct Fixture {
  std::string name;
  std::string summary;
  std::set<std::string> classes;
  RawDocument document;
};

const std::vector<Fixture>& fixtures();

// Throws Error(kNotFound) for an unknown name.
const Fixture& fixture(const std::string& name);

struct GeneratorParams {
  int trees = 2;       // 1..3
  int players = 2;     // 1..3
  bool nature = false;
  int max_depth = 3;   // 1..5
  int max_branch = 2;  // 2..3
};

// Deterministic random game that passes every validator including perfect
// recall. Information sets are keyed by the owner's experience, subtrees
// prune whole branches uniformly across a key, and awareness levels only
// grow along a path, so the properties hold by construction; resampling
// plus a small fallback game keep the result total in the seed.
RawDocument generate(std::uint64_t seed, const GeneratorParams& params);
RawDocument generate(std::uint64_t seed);

// Visit probability computed from played-out paths rather than the ancestor
// walk in rho: the mixed form replays every pure in the support, the
// behavior form pushes flow down the tree of n. Inputs must be total over
// the loci met in that tree (documents and transforms always are); on a gap
// oracle_rho raises kArgument eagerly where rho can still report zero.
Rational oracle_rho(const GameForest& g, const Awareness& h,
                    const MixedStrategy& sigma, const StrategyProfile& others,
                    const NodeId& n);
Rational oracle_rho(const GameForest& g, const Awareness& h,
                    const BehaviorStrategy& beta, const StrategyProfile& others,
                    const NodeId& n);

}  // namespace efgu

#endif  // EFGU_CORPUS_HPP_
