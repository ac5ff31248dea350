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

#include "efgu/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace efgu {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
  fail(ErrorKind::kBuild, message);
}

void need_object(const json& v, const std::string& where) {
  if (!v.is_object()) bad(where + " must be an object");
}

void need_array(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
}

void allow_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      bad(where + " has unknown key \"" + it.key() + "\"");
    }
  }
}

const json& member(const json& obj, const std::string& key,
                   const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " is missing \"" + key + "\"");
  return *it;
}

std::string get_string(const json& obj, const std::string& key,
                       const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) bad(where + " needs a string at \"" + key + "\"");
  return v.get<std::string>();
}

// Player names are canonical decimal: no sign, no leading zeros.
PlayerIx parse_player(const std::string& text, const std::string& where) {
  bool canonical = !text.empty() && text.size() <= 9 &&
                   (text.size() == 1 || text[0] != '0');
  for (char c : text) canonical = canonical && c >= '0' && c <= '9';
  if (!canonical) bad(where + ": \"" + text + "\" is not a player name");
  return std::stoi(text);
}

std::vector<ActionLabel> parse_labels(const json& v, const std::string& where) {
  need_array(v, where);
  std::vector<ActionLabel> out;
  for (const json& item : v) {
    if (!item.is_string()) bad(where + " must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string normal_rational(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where + " must be a rational string");
  return Rational::parse(v.get<std::string>()).to_string();
}

std::map<PlayerIx, ActionLabel> parse_action_profile(const json& v,
                                                     const std::string& where) {
  need_object(v, where);
  std::map<PlayerIx, ActionLabel> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it.value().is_string()) bad(where + " must map players to actions");
    out[parse_player(it.key(), where)] = it.value().get<std::string>();
  }
  return out;
}

RawNode parse_node(const json& v, const std::string& tree_id) {
  std::string where = "a node of tree " + tree_id;
  need_object(v, where);
  RawNode node;
  node.id = get_string(v, "id", where);
  where = "node " + node.id;
  std::string kind = get_string(v, "kind", where);
  if (kind == "terminal") {
    allow_keys(v, {"id", "kind", "payoffs"}, where);
    node.kind = NodeKind::kTerminal;
    const json& payoffs = member(v, "payoffs", where);
    need_object(payoffs, where + " payoffs");
    for (auto it = payoffs.begin(); it != payoffs.end(); ++it) {
      PlayerIx p = parse_player(it.key(), where + " payoffs");
      if (!it.value().is_string()) bad(where + " payoffs must be strings");
      node.payoffs[p] = Rational::parse(it.value().get<std::string>());
    }
    return node;
  }
  if (kind != "decision") bad(where + " has unknown kind \"" + kind + "\"");
  allow_keys(v, {"id", "kind", "players", "actions", "successors"}, where);
  node.kind = NodeKind::kDecision;
  for (const json& p : member(v, "players", where)) {
    if (!p.is_string()) bad(where + " players must be strings");
    node.players.push_back(parse_player(p.get<std::string>(), where));
  }
  const json& actions = member(v, "actions", where);
  need_object(actions, where + " actions");
  for (auto it = actions.begin(); it != actions.end(); ++it) {
    node.actions[parse_player(it.key(), where + " actions")] =
        parse_labels(it.value(), where + " actions");
  }
  const json& succ = member(v, "successors", where);
  need_array(succ, where + " successors");
  for (const json& s : succ) {
    std::string swhere = where + " successor";
    need_object(s, swhere);
    allow_keys(s, {"profile", "child"}, swhere);
    node.successors.emplace_back(
        parse_action_profile(member(s, "profile", swhere), swhere + " profile"),
        get_string(s, "child", swhere));
  }
  return node;
}

RawTree parse_tree(const json& v, const TreeId& objective) {
  need_object(v, "a tree");
  RawTree tree;
  tree.id = get_string(v, "id", "a tree");
  std::string where = "tree " + tree.id;
  allow_keys(v, {"id", "root", "nodes", "copies"}, where);
  tree.root = get_string(v, "root", where);
  const json& nodes = member(v, "nodes", where);
  need_array(nodes, where + " nodes");
  for (const json& n : nodes) tree.nodes.push_back(parse_node(n, tree.id));
  bool is_objective = tree.id == objective;
  if (v.contains("copies")) {
    if (is_objective) bad("the objective tree carries copies");
    const json& copies = v["copies"];
    need_object(copies, where + " copies");
    for (auto it = copies.begin(); it != copies.end(); ++it) {
      if (!it.value().is_string()) bad(where + " copies must map node ids");
      tree.copies[it.key()] = it.value().get<std::string>();
    }
    tree.has_copies = true;
  } else if (!is_objective) {
    bad(where + " is missing \"copies\"");
  }
  return tree;
}

RawInfoset parse_infoset(const json& v) {
  need_object(v, "an information set");
  RawInfoset set;
  set.id = get_string(v, "id", "an information set");
  std::string where = "information set " + set.id;
  allow_keys(v, {"id", "owner", "tree", "members", "assignments"}, where);
  set.owner = parse_player(get_string(v, "owner", where), where);
  set.home = get_string(v, "tree", where);
  set.members = parse_labels(member(v, "members", where), where);
  set.assignments = parse_labels(member(v, "assignments", where), where);
  return set;
}

std::map<std::string, ActionLabel> parse_choices(const json& v,
                                                 const std::string& where) {
  need_object(v, where);
  std::map<std::string, ActionLabel> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it.value().is_string()) bad(where + " must map loci to actions");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

RawStrategy parse_strategy(const json& v) {
  need_object(v, "a strategy");
  RawStrategy s;
  s.name = get_string(v, "name", "a strategy");
  std::string where = "strategy " + s.name;
  s.owner = parse_player(get_string(v, "player", where), where);
  s.kind = get_string(v, "kind", where);
  if (s.kind == "pure") {
    allow_keys(v, {"name", "player", "kind", "choices"}, where);
    s.choices = parse_choices(member(v, "choices", where), where + " choices");
  } else if (s.kind == "mixed") {
    allow_keys(v, {"name", "player", "kind", "weights"}, where);
    const json& weights = member(v, "weights", where);
    need_array(weights, where + " weights");
    for (const json& w : weights) {
      need_object(w, where + " weights");
      allow_keys(w, {"choices", "weight"}, where + " weights");
      RawStrategy::Entry entry;
      entry.choices = parse_choices(member(w, "choices", where + " weights"),
                                    where + " choices");
      entry.weight =
          normal_rational(member(w, "weight", where + " weights"), where);
      s.weights.push_back(std::move(entry));
    }
  } else if (s.kind == "behavior") {
    allow_keys(v, {"name", "player", "kind", "locals"}, where);
    const json& locals = member(v, "locals", where);
    need_object(locals, where + " locals");
    for (auto it = locals.begin(); it != locals.end(); ++it) {
      need_object(it.value(), where + " local at " + it.key());
      std::map<ActionLabel, std::string> local;
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        local[jt.key()] = normal_rational(jt.value(), where);
      }
      s.locals[it.key()] = std::move(local);
    }
  } else {
    bad(where + " has unknown kind \"" + s.kind + "\"");
  }
  return s;
}

RawProfile parse_profile(const json& v) {
  need_object(v, "a profile");
  RawProfile p;
  p.name = get_string(v, "name", "a profile");
  std::string where = "profile " + p.name;
  allow_keys(v, {"name", "strategies"}, where);
  const json& strategies = member(v, "strategies", where);
  need_object(strategies, where + " strategies");
  for (auto it = strategies.begin(); it != strategies.end(); ++it) {
    if (!it.value().is_string()) bad(where + " must map players to names");
    p.strategies[parse_player(it.key(), where)] = it.value().get<std::string>();
  }
  return p;
}

json action_profile_json(const std::map<PlayerIx, ActionLabel>& profile) {
  json out = json::object();
  for (const auto& [p, a] : profile) out[player_name(p)] = a;
  return out;
}

json node_json(const RawNode& node) {
  json out = json::object();
  out["id"] = node.id;
  if (node.kind == NodeKind::kTerminal) {
    out["kind"] = "terminal";
    json payoffs = json::object();
    for (const auto& [p, value] : node.payoffs)
      payoffs[player_name(p)] = value.to_string();
    out["payoffs"] = payoffs;
    return out;
  }
  out["kind"] = "decision";
  std::vector<PlayerIx> players = node.players;
  std::sort(players.begin(), players.end());
  json names = json::array();
  for (PlayerIx p : players) names.push_back(player_name(p));
  out["players"] = names;
  json actions = json::object();
  for (const auto& [p, labels] : node.actions)
    actions[player_name(p)] = labels;
  out["actions"] = actions;
  // Successors go out in lexicographic action-index order.
  auto order_key = [&node](const std::map<PlayerIx, ActionLabel>& profile) {
    std::vector<int> key;
    for (const auto& [p, a] : profile) {
      const auto it = node.actions.find(p);
      int index = 0;
      if (it != node.actions.end()) {
        auto pos = std::find(it->second.begin(), it->second.end(), a);
        index = static_cast<int>(pos - it->second.begin());
      }
      key.push_back(index);
    }
    return key;
  };
  auto successors = node.successors;
  std::stable_sort(successors.begin(), successors.end(),
                   [&](const auto& a, const auto& b) {
                     return order_key(a.first) < order_key(b.first);
                   });
  json list = json::array();
  for (const auto& [profile, child] : successors) {
    json s = json::object();
    s["profile"] = action_profile_json(profile);
    s["child"] = child;
    list.push_back(s);
  }
  out["successors"] = list;
  return out;
}

json tree_json(const RawTree& tree) {
  json out = json::object();
  out["id"] = tree.id;
  out["root"] = tree.root;
  auto nodes = tree.nodes;
  std::sort(nodes.begin(), nodes.end(),
            [](const RawNode& a, const RawNode& b) { return a.id < b.id; });
  json list = json::array();
  for (const RawNode& n : nodes) list.push_back(node_json(n));
  out["nodes"] = list;
  if (tree.has_copies) {
    json copies = json::object();
    for (const auto& [from, to] : tree.copies) copies[from] = to;
    out["copies"] = copies;
  }
  return out;
}

json infoset_json(const RawInfoset& set) {
  json out = json::object();
  out["id"] = set.id;
  out["owner"] = player_name(set.owner);
  out["tree"] = set.home;
  auto members = set.members;
  std::sort(members.begin(), members.end());
  out["members"] = members;
  auto assignments = set.assignments;
  std::sort(assignments.begin(), assignments.end());
  out["assignments"] = assignments;
  return out;
}

json strategy_json(const RawStrategy& s) {
  json out = json::object();
  out["name"] = s.name;
  out["player"] = player_name(s.owner);
  out["kind"] = s.kind;
  if (s.kind == "pure") {
    out["choices"] = s.choices;
  } else if (s.kind == "mixed") {
    auto weights = s.weights;
    std::sort(weights.begin(), weights.end(),
              [](const RawStrategy::Entry& a, const RawStrategy::Entry& b) {
                return a.choices < b.choices;
              });
    json list = json::array();
    for (const RawStrategy::Entry& entry : weights) {
      json w = json::object();
      w["choices"] = entry.choices;
      w["weight"] = entry.weight;
      list.push_back(w);
    }
    out["weights"] = list;
  } else {
    json locals = json::object();
    for (const auto& [locus, local] : s.locals) locals[locus] = local;
    out["locals"] = locals;
  }
  return out;
}

json profile_json(const RawProfile& p) {
  json out = json::object();
  out["name"] = p.name;
  json strategies = json::object();
  for (const auto& [player, name] : p.strategies)
    strategies[player_name(player)] = name;
  out["strategies"] = strategies;
  return out;
}

// Checks one pure choice map against the owner's loci.
void check_choices(const GameForest& g, const Awareness& h, PlayerIx owner,
                   const std::map<std::string, ActionLabel>& choices,
                   const std::string& where) {
  std::vector<std::string> all = loci(g, h, owner);
  std::set<std::string> known(all.begin(), all.end());
  for (const auto& [locus, action] : choices) {
    if (!known.count(locus)) bad(where + " chooses at unknown locus " + locus);
    const std::vector<ActionLabel>& menu = locus_actions(g, h, owner, locus);
    if (std::find(menu.begin(), menu.end(), action) == menu.end()) {
      bad(where + ": action " + action + " is not available at " + locus);
    }
  }
  for (const std::string& locus : all) {
    if (!choices.count(locus)) bad(where + " does not cover locus " + locus);
  }
}

NamedStrategy resolve_strategy(const GameForest& g, const Awareness& h,
                               const RawStrategy& raw) {
  std::string where = "strategy " + raw.name;
  if (!g.is_player(raw.owner)) {
    bad(where + " belongs to unknown player " + player_name(raw.owner));
  }
  NamedStrategy out;
  out.name = raw.name;
  out.kind = raw.kind;
  out.owner = raw.owner;
  if (raw.kind == "pure") {
    check_choices(g, h, raw.owner, raw.choices, where);
    out.pure = {raw.owner, raw.choices};
    return out;
  }
  if (raw.kind == "mixed") {
    out.mixed.owner = raw.owner;
    Rational total(0);
    std::set<std::map<std::string, ActionLabel>> seen;
    for (const RawStrategy::Entry& entry : raw.weights) {
      check_choices(g, h, raw.owner, entry.choices, where);
      if (!seen.insert(entry.choices).second) {
        bad(where + " lists a pure strategy twice");
      }
      Rational w = Rational::parse(entry.weight);
      if (w < Rational(0)) bad(where + " has a negative weight");
      total += w;
      out.mixed.weights.emplace_back(PureStrategy{raw.owner, entry.choices}, w);
    }
    if (total != Rational(1)) bad(where + " weights must sum to 1");
    return out;
  }
  out.behavior.owner = raw.owner;
  std::vector<std::string> all = loci(g, h, raw.owner);
  std::set<std::string> known(all.begin(), all.end());
  for (const auto& [locus, local] : raw.locals) {
    if (!known.count(locus)) bad(where + " chooses at unknown locus " + locus);
    const std::vector<ActionLabel>& menu =
        locus_actions(g, h, raw.owner, locus);
    Rational total(0);
    std::map<ActionLabel, Rational> parsed;
    for (const auto& [action, text] : local) {
      if (std::find(menu.begin(), menu.end(), action) == menu.end()) {
        bad(where + ": action " + action + " is not available at " + locus);
      }
      Rational w = Rational::parse(text);
      if (w < Rational(0)) bad(where + " has a negative weight");
      total += w;
      parsed[action] = w;
    }
    for (const ActionLabel& action : menu) {
      if (!parsed.count(action)) {
        bad(where + " is missing a weight for " + action + " at " + locus);
      }
    }
    if (total != Rational(1)) {
      bad(where + " weights must sum to 1 at " + locus);
    }
    out.behavior.locals[locus] = std::move(parsed);
  }
  for (const std::string& locus : all) {
    if (!out.behavior.locals.count(locus)) {
      bad(where + " does not cover locus " + locus);
    }
  }
  return out;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

RawDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  need_object(doc, "the document");
  allow_keys(doc,
             {"schema", "players", "nature", "objective_tree", "trees",
              "information_sets", "strategies", "profiles"},
             "the document");
  std::string schema = get_string(doc, "schema", "the document");
  if (schema != "efgu/1") {
    fail(ErrorKind::kParse, "unsupported schema \"" + schema + "\"");
  }
  RawDocument out;
  const json& players = member(doc, "players", "the document");
  need_array(players, "players");
  for (const json& p : players) {
    if (!p.is_string()) bad("players must be strings");
    out.game.players.push_back(parse_player(p.get<std::string>(), "players"));
  }
  if (doc.contains("nature")) {
    if (!doc["nature"].is_boolean()) bad("\"nature\" must be a boolean");
    out.game.nature = doc["nature"].get<bool>();
  }
  out.game.objective = get_string(doc, "objective_tree", "the document");
  const json& trees = member(doc, "trees", "the document");
  need_array(trees, "trees");
  for (const json& t : trees) {
    out.game.trees.push_back(parse_tree(t, out.game.objective));
  }
  const json& sets = member(doc, "information_sets", "the document");
  need_array(sets, "information_sets");
  for (const json& s : sets) out.game.infosets.push_back(parse_infoset(s));
  if (doc.contains("strategies")) {
    need_array(doc["strategies"], "strategies");
    for (const json& s : doc["strategies"]) {
      out.strategies.push_back(parse_strategy(s));
    }
  }
  if (doc.contains("profiles")) {
    need_array(doc["profiles"], "profiles");
    for (const json& p : doc["profiles"]) {
      out.profiles.push_back(parse_profile(p));
    }
  }
  return out;
}

std::string serialize_document(const RawDocument& doc) {
  json out = json::object();
  out["schema"] = "efgu/1";
  std::vector<PlayerIx> players = doc.game.players;
  std::sort(players.begin(), players.end());
  json names = json::array();
  for (PlayerIx p : players) names.push_back(player_name(p));
  out["players"] = names;
  out["nature"] = doc.game.nature;
  out["objective_tree"] = doc.game.objective;
  auto trees = doc.game.trees;
  std::sort(trees.begin(), trees.end(),
            [](const RawTree& a, const RawTree& b) { return a.id < b.id; });
  json tree_list = json::array();
  for (const RawTree& t : trees) tree_list.push_back(tree_json(t));
  out["trees"] = tree_list;
  auto sets = doc.game.infosets;
  std::sort(sets.begin(), sets.end(),
            [](const RawInfoset& a, const RawInfoset& b) { return a.id < b.id; });
  json set_list = json::array();
  for (const RawInfoset& s : sets) set_list.push_back(infoset_json(s));
  out["information_sets"] = set_list;
  if (!doc.strategies.empty()) {
    auto strategies = doc.strategies;
    std::sort(strategies.begin(), strategies.end(),
              [](const RawStrategy& a, const RawStrategy& b) {
                return a.name < b.name;
              });
    json list = json::array();
    for (const RawStrategy& s : strategies) list.push_back(strategy_json(s));
    out["strategies"] = list;
  }
  if (!doc.profiles.empty()) {
    auto profiles = doc.profiles;
    std::sort(profiles.begin(), profiles.end(),
              [](const RawProfile& a, const RawProfile& b) {
                return a.name < b.name;
              });
    json list = json::array();
    for (const RawProfile& p : profiles) list.push_back(profile_json(p));
    out["profiles"] = list;
  }
  return out.dump(2) + "\n";
}

const NamedStrategy* GameBundle::find_strategy(const std::string& name) const {
  for (const NamedStrategy& s : strategies) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const NamedProfile* GameBundle::find_profile(const std::string& name) const {
  for (const NamedProfile& p : profiles) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

StrategyProfile GameBundle::assemble(const std::string& name) const {
  const NamedProfile* profile = find_profile(name);
  if (profile == nullptr) {
    fail(ErrorKind::kNotFound, "no profile named " + name);
  }
  StrategyProfile out;
  for (const auto& [player, sname] : profile->strategies) {
    const NamedStrategy* s = find_strategy(sname);
    if (s == nullptr || s->kind != "pure") {
      fail(ErrorKind::kArgument, "profile " + name + " needs pure strategies");
    }
    out.parts[player] = s->pure;
  }
  return out;
}

GameBundle load_document(const RawDocument& doc) {
  GameBundle bundle;
  bundle.forest = build_forest(doc.game);
  bundle.awareness = build_awareness(bundle.forest, doc.game.infosets);
  std::set<std::string> names;
  for (const RawStrategy& raw : doc.strategies) {
    if (!names.insert(raw.name).second) {
      bad("duplicate strategy name " + raw.name);
    }
    bundle.strategies.push_back(
        resolve_strategy(bundle.forest, bundle.awareness, raw));
  }
  std::set<std::string> profile_names;
  std::vector<PlayerIx> actors = bundle.forest.actors();
  for (const RawProfile& raw : doc.profiles) {
    std::string where = "profile " + raw.name;
    if (!profile_names.insert(raw.name).second) {
      bad("duplicate profile name " + raw.name);
    }
    for (const auto& [player, sname] : raw.strategies) {
      const NamedStrategy* s = bundle.find_strategy(sname);
      if (s == nullptr) {
        bad(where + " references unknown strategy " + sname);
      }
      if (s->kind != "pure") bad(where + " needs pure strategies");
      if (s->owner != player) {
        bad(where + " assigns " + sname + " to player " + player_name(player) +
            " but it belongs to player " + player_name(s->owner));
      }
    }
    for (PlayerIx actor : actors) {
      if (!raw.strategies.count(actor)) {
        bad(where + " does not cover player " + player_name(actor));
      }
    }
    bundle.profiles.push_back(NamedProfile{raw.name, raw.strategies});
  }
  return bundle;
}

std::string export_dot(const GameForest& g, const Awareness& h) {
  std::ostringstream out;
  out << "digraph efgu {\n";
  out << "  rankdir=TB;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  int index = 0;
  for (const TreeId& tid : g.tree_order) {
    const Tree& tree = g.tree(tid);
    out << "  subgraph cluster_" << index++ << " {\n";
    out << "    label=" << quote(tid) << ";\n";
    for (const NodeId& nid : tree.nodes) {
      const Node& node = g.node(nid);
      std::string label = nid;
      if (node.is_decision()) {
        for (PlayerIx p : node.players) {
          const std::string* set = h.assigned(nid, p);
          label += "\\n" + player_name(p) + ":" + (set ? *set : "*");
        }
        out << "    " << quote(nid) << " [shape=box,label=" << quote(label)
            << "];\n";
      } else {
        std::string payoffs;
        for (const auto& [p, value] : node.payoffs) {
          if (!payoffs.empty()) payoffs += ",";
          payoffs += player_name(p) + "=" + value.to_string();
        }
        label += "\\n" + payoffs;
        out << "    " << quote(nid)
            << " [shape=plaintext,label=" << quote(label) << "];\n";
      }
    }
    for (const NodeId& nid : tree.nodes) {
      const Node& node = g.node(nid);
      for (const auto& [profile, child] : node.successors) {
        std::string label;
        for (const auto& [p, a] : profile) {
          if (!label.empty()) label += ",";
          label += player_name(p) + ":" + a;
        }
        out << "    " << quote(nid) << " -> " << quote(child)
            << " [label=" << quote(label) << "];\n";
      }
    }
    out << "  }\n";
  }
  for (const std::string& sid : h.order) {
    const Infoset& set = h.set(sid);
    for (std::size_t k = 0; k + 1 < set.members.size(); ++k) {
      out << "  " << quote(set.members[k]) << " -> "
          << quote(set.members[k + 1])
          << " [style=dashed,dir=none,constraint=false,label=" << quote(sid)
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace efgu
