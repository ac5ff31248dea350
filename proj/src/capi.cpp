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

#include "efgu/efgu.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <set>
#include <string>

#include "efgu/corpus.hpp"
#include "efgu/document.hpp"
#include "efgu/error.hpp"
#include "efgu/kuhn.hpp"

using nlohmann::json;

struct efgu_game {
  efgu::RawDocument doc;
  efgu::GameBundle bundle;
  std::uint64_t cap = efgu::kDefaultEnumerationCap;
};

namespace {

using namespace efgu;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot != nullptr) *slot = dup(s);
}

efgu_status map_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kBuild:
      return EFGU_ERR_PARSE;
    case ErrorKind::kArgument:
      return EFGU_ERR_ARG;
    case ErrorKind::kNotFound:
      return EFGU_ERR_NOT_FOUND;
    case ErrorKind::kCapExceeded:
      return EFGU_ERR_CAP;
    case ErrorKind::kNodeDependence:
      return EFGU_ERR_STATE;
    case ErrorKind::kInternal:
      return EFGU_ERR_INTERNAL;
  }
  return EFGU_ERR_INTERNAL;
}

template <typename F>
efgu_status guarded(char** error, F&& body) {
  if (error != nullptr) *error = nullptr;
  try {
    return body();
  } catch (const Error& e) {
    put(error, e.what());
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    put(error, e.what());
    return EFGU_ERR_INTERNAL;
  }
}

efgu_status need(bool ok, const char* message, char** error) {
  if (ok) return EFGU_OK;
  put(error, message);
  return EFGU_ERR_ARG;
}

// Gate shared by the strategy-level entry points: the forest and the
// awareness correspondence must be valid before strategies mean anything.
void require_valid(const efgu_game* game) {
  if (!validate_structure(game->bundle.forest).empty() ||
      !validate_awareness(game->bundle.forest, game->bundle.awareness)
           .empty()) {
    fail(ErrorKind::kArgument,
         "the game fails structure or awareness validation; run validate");
  }
}

const NamedStrategy& named(const efgu_game* game, const std::string& name) {
  const NamedStrategy* s = game->bundle.find_strategy(name);
  if (s == nullptr) fail(ErrorKind::kNotFound, "no strategy named " + name);
  return *s;
}

MixedStrategy as_mixed(const NamedStrategy& s) {
  if (s.kind == "mixed") return s.mixed;
  if (s.kind == "pure") {
    MixedStrategy m;
    m.owner = s.owner;
    m.weights = {{s.pure, Rational(1)}};
    return m;
  }
  fail(ErrorKind::kArgument,
       "strategy " + s.name + " is not pure or mixed");
}

json violations_json(const ViolationReport& r) {
  json items = json::array();
  for (const Violation& v : r.items()) {
    items.push_back({{"property", v.property},
                     {"player", v.player},
                     {"witness", v.witness}});
  }
  return items;
}

json locals_json(const BehaviorStrategy& beta) {
  json locals = json::object();
  for (const auto& [locus, dist] : beta.locals) {
    json d = json::object();
    for (const auto& [a, p] : dist) d[a] = p.to_string();
    locals[locus] = std::move(d);
  }
  return locals;
}

json verdict_json(const EquivalenceVerdict& v, bool realization) {
  json out = {{"equivalent", v.equivalent},
              {"checked", v.checked},
              {"realization", realization}};
  if (v.witness) {
    json others = json::object();
    for (const auto& [j, pure] : v.witness->others) {
      json choices = json::object();
      for (const auto& [locus, a] : pure.choices) choices[locus] = a;
      others[player_name(j)] = std::move(choices);
    }
    out["witness"] = {{"node", v.witness->node},
                      {"mixed", v.witness->mixed_value.to_string()},
                      {"behavior", v.witness->behavior_value.to_string()},
                      {"others", std::move(others)}};
  }
  return out;
}

// The raw image of a built forest; used to emit restrictions as documents.
RawGame raw_of(const GameForest& g) {
  RawGame raw;
  raw.players = g.players;
  raw.nature = g.nature;
  raw.objective = g.objective;
  for (const TreeId& tid : g.tree_order) {
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
    if (tid != g.objective) {
      rt.has_copies = true;
      rt.copies = tree.copies;
    }
    raw.trees.push_back(std::move(rt));
  }
  return raw;
}

std::vector<RawInfoset> raw_sets_of(const Awareness& h) {
  std::vector<RawInfoset> out;
  for (const std::string& hid : h.order) {
    const Infoset& s = h.sets.at(hid);
    RawInfoset rh;
    rh.id = s.id;
    rh.owner = s.owner;
    rh.home = s.home;
    rh.members = s.members;
    rh.assignments = s.assignments;
    out.push_back(std::move(rh));
  }
  return out;
}

ViolationReport run_property(const efgu_game* game,
                             const std::string& property) {
  const GameForest& g = game->bundle.forest;
  const Awareness& h = game->bundle.awareness;
  static const std::set<std::string> structure = {
      "P0", "P1", "P2", "P3", "copy", "arborescence", "semilattice",
      "commute"};
  static const std::set<std::string> awareness = {
      "U0", "U1", "U3", "U4", "U5", "I2", "I3", "I4", "I5"};
  static const std::set<std::string> derived = {"absentmindedness", "DA",
                                                "infoset-precedence"};
  ViolationReport all;
  if (property.empty()) {
    all.merge(validate_structure(g));
    all.merge(validate_awareness(g, h));
    all.merge(check_perfect_recall_direct(g, h));
    all.merge(check_perfect_recall_records(g, h));
    all.merge(check_perfect_recall_selten(g, h));
    all.merge(check_derived(g, h));
    all.finalize();
    return all;
  }
  ViolationReport source;
  if (structure.count(property) != 0) {
    source = validate_structure(g);
  } else if (awareness.count(property) != 0) {
    source = validate_awareness(g, h);
  } else if (property == "I6") {
    source = check_perfect_recall_direct(g, h);
  } else if (property == "I6records") {
    source = check_perfect_recall_records(g, h);
  } else if (property == "I6selten") {
    source = check_perfect_recall_selten(g, h);
  } else if (derived.count(property) != 0) {
    source = check_derived(g, h);
  } else {
    fail(ErrorKind::kArgument, "unknown property " + property);
  }
  for (const Violation& v : source.items()) {
    if (v.property == property) all.add(v.property, v.player, v.witness);
  }
  all.finalize();
  return all;
}

}  // namespace

extern "C" {

const char* efgu_version(void) { return "1.0.0"; }

void efgu_free(char* text) { std::free(text); }

void efgu_game_free(efgu_game* game) { delete game; }

efgu_status efgu_game_parse(const char* text, efgu_game** out, char** error) {
  if (need(text != nullptr && out != nullptr, "null argument", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *out = nullptr;
  return guarded(error, [&] {
    auto game = std::make_unique<efgu_game>();
    game->doc = parse_document(text);
    game->bundle = load_document(game->doc);
    *out = game.release();
    return EFGU_OK;
  });
}

efgu_status efgu_game_serialize(const efgu_game* game, char** out,
                                char** error) {
  if (need(game != nullptr && out != nullptr, "null argument", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *out = nullptr;
  return guarded(error, [&] {
    put(out, serialize_document(game->doc));
    return EFGU_OK;
  });
}

efgu_status efgu_set_enumeration_cap(efgu_game* game, uint64_t cap,
                                     char** error) {
  if (need(game != nullptr && cap > 0, "the cap must be positive", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  game->cap = cap;
  return EFGU_OK;
}

efgu_status efgu_validate(const efgu_game* game, const char* property,
                          char** report_json, char** error) {
  if (need(game != nullptr && report_json != nullptr, "null argument",
           error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *report_json = nullptr;
  return guarded(error, [&] {
    ViolationReport r =
        run_property(game, property == nullptr ? "" : property);
    json out = {{"ok", r.empty()},
                {"classes", r.classes()},
                {"violations", violations_json(r)}};
    put(report_json, out.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_strategies(const efgu_game* game, int player, char** json_out,
                            char** error) {
  if (need(game != nullptr && json_out != nullptr, "null argument", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    require_valid(game);
    const GameForest& g = game->bundle.forest;
    const Awareness& h = game->bundle.awareness;
    json list = json::array();
    for (const PureStrategy& s : enumerate_pure(g, h, player, game->cap)) {
      json choices = json::object();
      for (const auto& [locus, a] : s.choices) choices[locus] = a;
      list.push_back(std::move(choices));
    }
    json out = {{"player", player},
                {"loci", loci(g, h, player)},
                {"strategies", std::move(list)}};
    put(json_out, out.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_reach(const efgu_game* game, const char* profile,
                       char** json_out, char** error) {
  if (need(game != nullptr && profile != nullptr && json_out != nullptr,
           "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    require_valid(game);
    const GameForest& g = game->bundle.forest;
    const Awareness& h = game->bundle.awareness;
    StrategyProfile s = game->bundle.assemble(profile);
    json sets = json::object();
    for (PlayerIx j : g.players) {
      sets[player_name(j)] = reached_infosets(g, h, s, j);
    }
    json out = {{"profile", profile},
                {"nodes", reach_nodes(g, h, s)},
                {"infosets", std::move(sets)}};
    put(json_out, out.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_occur(const efgu_game* game, const char* profile,
                       char** json_out, char** error) {
  if (need(game != nullptr && profile != nullptr && json_out != nullptr,
           "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    require_valid(game);
    const GameForest& g = game->bundle.forest;
    const Awareness& h = game->bundle.awareness;
    StrategyProfile s = game->bundle.assemble(profile);
    json sets = json::object();
    for (PlayerIx j : g.players) {
      sets[player_name(j)] = occurring_infosets(g, h, s, j);
    }
    json out = {{"profile", profile},
                {"nodes", occur_nodes(g, h, s)},
                {"infosets", std::move(sets)}};
    put(json_out, out.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_transform(const efgu_game* game, const char* strategy,
                           int unchecked, char** json_out, char** error) {
  if (need(game != nullptr && strategy != nullptr && json_out != nullptr,
           "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    MixedStrategy sigma = as_mixed(named(game, strategy));
    BehaviorStrategy beta =
        kuhn_transform(game->bundle.forest, game->bundle.awareness, sigma,
                       unchecked == 0, game->cap);
    json out = {{"strategy", strategy},
                {"owner", player_name(beta.owner)},
                {"locals", locals_json(beta)}};
    put(json_out, out.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_equivalence(const efgu_game* game, const char* mixed,
                             const char* behavior, int realization,
                             char** json_out, char** error) {
  if (need(game != nullptr && mixed != nullptr && behavior != nullptr &&
               json_out != nullptr,
           "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    require_valid(game);
    MixedStrategy sigma = as_mixed(named(game, mixed));
    const NamedStrategy& b = named(game, behavior);
    if (b.kind != "behavior") {
      fail(ErrorKind::kArgument,
           "strategy " + b.name + " is not a behavior strategy");
    }
    if (b.owner != sigma.owner) {
      fail(ErrorKind::kArgument, "the strategies belong to different players");
    }
    const GameForest& g = game->bundle.forest;
    const Awareness& h = game->bundle.awareness;
    EquivalenceVerdict v =
        realization != 0
            ? check_realization_equivalence(g, h, sigma, b.behavior,
                                            game->cap)
            : check_equivalence(g, h, sigma, b.behavior, game->cap);
    put(json_out, verdict_json(v, realization != 0).dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_t_partial(const efgu_game* game, const char* tree,
                           char** document, char** error) {
  if (need(game != nullptr && tree != nullptr && document != nullptr,
           "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *document = nullptr;
  return guarded(error, [&] {
    require_valid(game);
    PartialGame pg =
        t_partial_game(game->bundle.forest, game->bundle.awareness, tree);
    RawDocument doc;
    doc.game = raw_of(pg.forest);
    doc.game.infosets = raw_sets_of(pg.awareness);
    put(document, serialize_document(doc));
    return EFGU_OK;
  });
}

efgu_status efgu_export_dot(const efgu_game* game, char** dot, char** error) {
  if (need(game != nullptr && dot != nullptr, "null argument", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *dot = nullptr;
  return guarded(error, [&] {
    put(dot, export_dot(game->bundle.forest, game->bundle.awareness));
    return EFGU_OK;
  });
}

efgu_status efgu_generate(uint64_t seed, char** document, char** error) {
  if (need(document != nullptr, "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *document = nullptr;
  return guarded(error, [&] {
    put(document, serialize_document(generate(seed)));
    return EFGU_OK;
  });
}

efgu_status efgu_fixture_list(char** json_out, char** error) {
  if (need(json_out != nullptr, "null argument", error) != EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *json_out = nullptr;
  return guarded(error, [&] {
    json list = json::array();
    for (const Fixture& f : fixtures()) {
      list.push_back({{"name", f.name},
                      {"summary", f.summary},
                      {"classes", f.classes}});
    }
    put(json_out, list.dump(2));
    return EFGU_OK;
  });
}

efgu_status efgu_fixture_emit(const char* name, char** document,
                              char** error) {
  if (need(name != nullptr && document != nullptr, "null argument", error) !=
      EFGU_OK) {
    return EFGU_ERR_ARG;
  }
  *document = nullptr;
  return guarded(error, [&] {
    put(document, serialize_document(fixture(name).document));
    return EFGU_OK;
  });
}

}  // extern "C"
