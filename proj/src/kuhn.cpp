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

#include "efgu/kuhn.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace efgu {
namespace {

std::string render_pure(const PureStrategy& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [locus, a] : s.choices) {
    if (!first) out << ",";
    first = false;
    out << locus << ":" << a;
  }
  return out.str();
}

std::string render_profile(const StrategyProfile& s, PlayerIx skip) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, part] : s.parts) {
    if (j == skip) continue;
    if (!first) out << ";";
    first = false;
    out << player_name(j) << "=" << render_pure(part);
  }
  return out.str();
}

std::string render_nodes(const std::set<NodeId>& nodes) {
  std::ostringstream out;
  bool first = true;
  for (const NodeId& n : nodes) {
    if (!first) out << ",";
    first = false;
    out << n;
  }
  return out.str();
}

}  // namespace

BehaviorStrategy kuhn_transform(const GameForest& g, const Awareness& h,
                                const MixedStrategy& sigma, bool checked,
                                std::uint64_t cap) {
  const PlayerIx i = sigma.owner;
  if (!g.is_player(i)) {
    fail(ErrorKind::kArgument, "no actor named " + player_name(i));
  }
  if (checked) {
    if (!validate_structure(g).empty()) {
      fail(ErrorKind::kArgument, "structure violations block the transform");
    }
    if (!validate_awareness(g, h).empty()) {
      fail(ErrorKind::kArgument, "awareness violations block the transform");
    }
    if (i != kNature && !check_perfect_recall_direct(g, h, i).empty()) {
      fail(ErrorKind::kArgument,
           "player " + player_name(i) + " lacks perfect recall");
    }
    Rational total(0);
    for (const auto& [pure, weight] : sigma.weights) {
      (void)pure;
      if (weight < Rational(0)) {
        fail(ErrorKind::kArgument, "mixed strategy weights must not be negative");
      }
      total += weight;
    }
    if (total != Rational(1)) {
      fail(ErrorKind::kArgument, "mixed strategy weights must sum to 1");
    }
  }

  BehaviorStrategy beta;
  beta.owner = i;
  for (const std::string& locus : loci(g, h, i)) {
    const auto& menu = locus_actions(g, h, i, locus);
    std::vector<NodeId> anchors =
        i == kNature ? std::vector<NodeId>{locus} : h.set(locus).assignments;
    std::optional<std::pair<NodeId, std::map<ActionLabel, Rational>>> chosen;
    for (const NodeId& x : anchors) {
      std::map<PlayerIx, NodeConstraint> constraint = path_constraint(g, h, x);
      NodeConstraint own =
          constraint.count(i) != 0 ? constraint.at(i) : NodeConstraint{};
      Rational denom(0);
      std::map<ActionLabel, Rational> mass;
      for (const auto& [pure, weight] : sigma.weights) {
        if (!matches(pure, own)) continue;
        auto it = pure.choices.find(locus);
        if (it == pure.choices.end()) {
          fail(ErrorKind::kArgument,
               "a support strategy does not cover locus " + locus);
        }
        if (std::find(menu.begin(), menu.end(), it->second) == menu.end()) {
          fail(ErrorKind::kArgument, "a support strategy chooses " +
                                         it->second + " outside locus " +
                                         locus);
        }
        denom += weight;
        mass[it->second] += weight;
      }
      if (denom.is_zero()) continue;
      std::map<ActionLabel, Rational> dist;
      for (const ActionLabel& a : menu) {
        auto it = mass.find(a);
        dist[a] = it == mass.end() ? Rational(0) : it->second / denom;
      }
      if (!chosen) {
        chosen = {x, std::move(dist)};
      } else if (chosen->second != dist) {
        fail(ErrorKind::kNodeDependence,
             "the mixture of player " + player_name(i) +
                 " is node dependent at locus " + locus + ": nodes " +
                 chosen->first + " and " + x +
                 " induce different local behavior");
      }
    }
    if (chosen) {
      beta.locals[locus] = chosen->second;
    } else {
      Rational uniform(1, static_cast<std::int64_t>(menu.size()));
      for (const ActionLabel& a : menu) beta.locals[locus][a] = uniform;
    }
  }
  return beta;
}

namespace {

EquivalenceVerdict equivalence_sweep(const GameForest& g, const Awareness& h,
                                     const MixedStrategy& sigma,
                                     const BehaviorStrategy& beta,
                                     std::uint64_t cap, bool realization) {
  if (sigma.owner != beta.owner) {
    fail(ErrorKind::kArgument, "the strategies belong to different actors");
  }
  std::vector<StrategyProfile> others =
      enumerate_others(g, h, sigma.owner, cap);
  if (static_cast<std::uint64_t>(g.nodes.size()) >
      cap / std::max<std::uint64_t>(others.size(), 1)) {
    fail(ErrorKind::kCapExceeded, "the equivalence sweep exceeds the cap");
  }
  EquivalenceVerdict verdict;
  for (const auto& [nid, node] : g.nodes) {
    (void)node;
    for (const StrategyProfile& o : others) {
      Rational lhs = realization ? occ_prob(g, h, sigma, o, nid)
                                 : rho(g, h, sigma, o, nid);
      Rational rhs = realization ? occ_prob(g, h, beta, o, nid)
                                 : rho(g, h, beta, o, nid);
      ++verdict.checked;
      if (lhs != rhs) {
        verdict.equivalent = false;
        verdict.witness = Witness{nid, o.parts, lhs, rhs};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace

EquivalenceVerdict check_equivalence(const GameForest& g, const Awareness& h,
                                     const MixedStrategy& sigma,
                                     const BehaviorStrategy& beta,
                                     std::uint64_t cap) {
  return equivalence_sweep(g, h, sigma, beta, cap, false);
}

EquivalenceVerdict check_realization_equivalence(const GameForest& g,
                                                 const Awareness& h,
                                                 const MixedStrategy& sigma,
                                                 const BehaviorStrategy& beta,
                                                 std::uint64_t cap) {
  return equivalence_sweep(g, h, sigma, beta, cap, true);
}

namespace {

void lemma1_in(const GameForest& g, const Awareness& h, PlayerIx i,
               std::uint64_t cap, const std::string& tag,
               ViolationReport& report) {
  std::map<NodeId, std::set<PureStrategy>> memo;
  auto allowing = [&](const NodeId& n) -> const std::set<PureStrategy>& {
    auto it = memo.find(n);
    if (it == memo.end()) {
      std::vector<PureStrategy> list =
          strategies_allowing(g, h, i, n, std::nullopt, cap);
      it = memo.emplace(n, std::set<PureStrategy>(list.begin(), list.end()))
               .first;
    }
    return it->second;
  };
  for (const auto& [nid, slots] : h.at) {
    auto slot = slots.find(i);
    if (slot == slots.end()) continue;
    const Infoset& set = h.sets.at(slot->second);
    const std::set<PureStrategy>& at_node = allowing(nid);
    for (const NodeId& m : set.members) {
      if (allowing(m) != at_node) {
        report.add("lemma1", player_name(i),
                   tag + "node=" + nid + " member=" + m);
      }
    }
  }
}

}  // namespace

ViolationReport check_lemma1(const GameForest& g, const Awareness& h,
                             PlayerIx i, std::uint64_t cap) {
  if (!g.is_player(i)) {
    fail(ErrorKind::kArgument, "no actor named " + player_name(i));
  }
  ViolationReport report;
  lemma1_in(g, h, i, cap, "", report);
  for (const TreeId& t : g.tree_order) {
    PartialGame pg = t_partial_game(g, h, t);
    lemma1_in(pg.forest, pg.awareness, i, cap, "tree=" + t + " ", report);
  }
  report.finalize();
  return report;
}

ViolationReport check_lemma2(const GameForest& g, const Awareness& h,
                             PlayerIx i, std::uint64_t cap) {
  if (!g.is_player(i)) {
    fail(ErrorKind::kArgument, "no actor named " + player_name(i));
  }
  std::vector<PlayerIx> actors = g.actors();
  std::vector<std::vector<PureStrategy>> per;
  std::uint64_t count = 1;
  for (PlayerIx j : actors) {
    per.push_back(enumerate_pure(g, h, j, cap));
    std::uint64_t size = per.back().size();
    if (count > cap / size) {
      fail(ErrorKind::kCapExceeded, "full profiles exceed the cap");
    }
    count *= size;
  }

  ViolationReport report;
  struct Bucket {
    StrategyProfile profile;
    std::set<NodeId> occur;
  };
  std::map<std::pair<std::string, std::string>, Bucket> buckets;
  std::vector<std::size_t> idx(actors.size(), 0);
  while (true) {
    StrategyProfile s;
    for (std::size_t k = 0; k < actors.size(); ++k) {
      s.parts[actors[k]] = per[k][idx[k]];
    }
    std::set<NodeId> reach = reach_nodes(g, h, s);
    std::set<NodeId> occur = occur_nodes(g, h, s);
    std::pair<std::string, std::string> key{render_profile(s, i),
                                            render_nodes(reach)};
    auto [it, fresh] = buckets.emplace(key, Bucket{s, occur});
    if (!fresh && it->second.occur != occur) {
      report.add("lemma2", player_name(i),
                 "others=" + key.first +
                     " a=" + render_pure(it->second.profile.parts.at(i)) +
                     " b=" + render_pure(s.parts.at(i)));
    }
    std::size_t k = actors.size();
    bool done = actors.empty();
    while (k > 0) {
      --k;
      if (++idx[k] < per[k].size()) break;
      idx[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  report.finalize();
  return report;
}

std::vector<MixedStrategy> make_test_family(const GameForest& g,
                                            const Awareness& h, PlayerIx i,
                                            std::uint64_t cap) {
  std::vector<PureStrategy> pures = enumerate_pure(g, h, i, cap);
  std::vector<MixedStrategy> out;
  for (const PureStrategy& p : pures) {
    MixedStrategy m;
    m.owner = i;
    m.weights.push_back({p, Rational(1)});
    out.push_back(std::move(m));
  }
  std::size_t pair_limit = std::min<std::size_t>(pures.size(), 12);
  for (std::size_t a = 0; a < pair_limit; ++a) {
    for (std::size_t b = a + 1; b < pair_limit; ++b) {
      MixedStrategy m;
      m.owner = i;
      m.weights.push_back({pures[a], Rational(1, 2)});
      m.weights.push_back({pures[b], Rational(1, 2)});
      out.push_back(std::move(m));
    }
  }
  if (pures.size() >= 3) {
    constexpr int kTriples[10][3] = {{1, 1, 4}, {1, 4, 1}, {4, 1, 1},
                                     {1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                     {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
                                     {2, 2, 2}};
    for (const auto& w : kTriples) {
      MixedStrategy m;
      m.owner = i;
      for (int k = 0; k < 3; ++k) {
        m.weights.push_back({pures[k], Rational(w[k], 6)});
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<MixedStrategy> make_random_family(const GameForest& g,
                                              const Awareness& h, PlayerIx i,
                                              std::uint64_t seed,
                                              std::size_t count) {
  std::vector<PureStrategy> pures = enumerate_pure(g, h, i);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(0, 6);
  std::vector<MixedStrategy> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<int> ticket(pures.size(), 0);
    int total = 0;
    for (std::size_t k = 0; k < pures.size(); ++k) {
      ticket[k] = draw(rng);
      total += ticket[k];
    }
    if (total == 0) {
      ticket[0] = 1;
      total = 1;
    }
    MixedStrategy m;
    m.owner = i;
    for (std::size_t k = 0; k < pures.size(); ++k) {
      if (ticket[k] > 0) {
        m.weights.push_back({pures[k], Rational(ticket[k], total)});
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace efgu
