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

// Command line front end over the C interface. Exit code 0 means the answer
// is affirmative, 1 is a domain-negative answer (violations found, not
// equivalent, node dependent), 2 is any usage or input failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "efgu/efgu.h"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

struct Str {
  char* p = nullptr;
  ~Str() { efgu_free(p); }
};

struct Game {
  efgu_game* g = nullptr;
  ~Game() { efgu_game_free(g); }
};

int complain(const Str& message, const char* fallback) {
  std::cerr << "error: " << (message.p != nullptr ? message.p : fallback)
            << "\n";
  return kFailure;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Cap precedence: --cap beats EFGU_ENUM_CAP beats the built-in default.
int apply_cap(efgu_game* game, std::uint64_t flag_cap) {
  std::uint64_t cap = 0;
  if (flag_cap > 0) {
    cap = flag_cap;
  } else if (const char* env = std::getenv("EFGU_ENUM_CAP")) {
    try {
      cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: EFGU_ENUM_CAP is not a number\n";
      return kFailure;
    }
  }
  if (cap == 0) return kOk;
  Str err;
  if (efgu_set_enumeration_cap(game, cap, &err.p) != EFGU_OK) {
    return complain(err, "cannot apply the cap");
  }
  return kOk;
}

int open_game(const std::string& path, std::uint64_t cap, Game& game) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kFailure;
  }
  Str err;
  if (efgu_game_parse(text.c_str(), &game.g, &err.p) != EFGU_OK) {
    return complain(err, "cannot load the document");
  }
  return apply_cap(game.g, cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Games with unawareness: validation, strategies and the "
               "mixed to behavior transform."};
  app.set_version_flag("--version", std::string(efgu_version()));
  app.require_subcommand(1);

  std::string file;
  std::string property;
  std::string profile;
  std::string strategy;
  std::string mixed;
  std::string behavior;
  std::string tree;
  std::string emit;
  int player = 1;
  bool unchecked = false;
  bool realization = false;
  std::uint64_t cap = 0;
  std::uint64_t seed = 1;

  app.add_option("--cap", cap,
                 "Enumeration bound; EFGU_ENUM_CAP is the fallback");

  CLI::App* validate =
      app.add_subcommand("validate", "Check the document properties");
  validate->add_option("file", file, "Document path or -")->required();
  validate->add_option("--property", property,
                       "Restrict to one property, for example I6 or U4");

  CLI::App* strategies =
      app.add_subcommand("strategies", "Enumerate pure strategies");
  strategies->add_option("file", file, "Document path or -")->required();
  strategies->add_option("--player", player, "Player index, 0 is nature")
      ->required();

  CLI::App* reach = app.add_subcommand("reach", "Nodes a profile reaches");
  reach->add_option("file", file, "Document path or -")->required();
  reach->add_option("--profile", profile, "Profile name")->required();

  CLI::App* occur = app.add_subcommand("occur", "Nodes that occur");
  occur->add_option("file", file, "Document path or -")->required();
  occur->add_option("--profile", profile, "Profile name")->required();

  CLI::App* transform =
      app.add_subcommand("transform", "Mixed strategy to local behavior");
  transform->add_option("file", file, "Document path or -")->required();
  transform->add_option("--strategy", strategy, "Pure or mixed strategy name")
      ->required();
  transform->add_flag("--unchecked", unchecked,
                      "Skip the validity and recall gate");

  CLI::App* equiv =
      app.add_subcommand("equiv", "Exhaustive equivalence of two strategies");
  equiv->add_option("file", file, "Document path or -")->required();
  equiv->add_option("--mixed", mixed, "Pure or mixed strategy name")
      ->required();
  equiv->add_option("--behavior", behavior, "Behavior strategy name")
      ->required();
  equiv->add_flag("--realization", realization,
                  "Compare occurrence instead of visit probabilities");

  CLI::App* tpartial =
      app.add_subcommand("tpartial", "Restriction to one tree");
  tpartial->add_option("file", file, "Document path or -")->required();
  tpartial->add_option("--tree", tree, "Tree identifier")->required();

  CLI::App* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("file", file, "Document path or -")->required();

  CLI::App* generate =
      app.add_subcommand("generate", "Deterministic random document");
  generate->add_option("--seed", seed, "Generator seed")->required();

  CLI::App* fixtures =
      app.add_subcommand("fixtures", "Built-in example documents");
  fixtures->add_option("--emit", emit, "Print the named example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion"
               ? kOk
               : kFailure;
  }

  if (generate->parsed()) {
    Str doc;
    Str err;
    if (efgu_generate(seed, &doc.p, &err.p) != EFGU_OK) {
      return complain(err, "generation failed");
    }
    std::cout << doc.p;
    return kOk;
  }

  if (fixtures->parsed()) {
    Str out;
    Str err;
    efgu_status rc = emit.empty() ? efgu_fixture_list(&out.p, &err.p)
                                  : efgu_fixture_emit(emit.c_str(), &out.p,
                                                      &err.p);
    if (rc != EFGU_OK) return complain(err, "no such example");
    std::cout << out.p << "\n";
    return kOk;
  }

  Game game;
  int rc = open_game(file, cap, game);
  if (rc != kOk) return rc;

  if (validate->parsed()) {
    Str out;
    Str err;
    if (efgu_validate(game.g, property.empty() ? nullptr : property.c_str(),
                      &out.p, &err.p) != EFGU_OK) {
      return complain(err, "validation failed");
    }
    std::cout << out.p << "\n";
    return json::parse(std::string(out.p))["ok"] == true ? kOk : kNegative;
  }

  if (strategies->parsed()) {
    Str out;
    Str err;
    if (efgu_strategies(game.g, player, &out.p, &err.p) != EFGU_OK) {
      return complain(err, "enumeration failed");
    }
    std::cout << out.p << "\n";
    return kOk;
  }

  if (reach->parsed() || occur->parsed()) {
    Str out;
    Str err;
    efgu_status st =
        reach->parsed()
            ? efgu_reach(game.g, profile.c_str(), &out.p, &err.p)
            : efgu_occur(game.g, profile.c_str(), &out.p, &err.p);
    if (st != EFGU_OK) return complain(err, "profile evaluation failed");
    std::cout << out.p << "\n";
    return kOk;
  }

  if (transform->parsed()) {
    Str out;
    Str err;
    efgu_status st = efgu_transform(game.g, strategy.c_str(),
                                    unchecked ? 1 : 0, &out.p, &err.p);
    if (st == EFGU_ERR_STATE) {
      std::cerr << "node dependent: "
                << (err.p != nullptr ? err.p : "no local form") << "\n";
      return kNegative;
    }
    if (st != EFGU_OK) return complain(err, "transform failed");
    std::cout << out.p << "\n";
    return kOk;
  }

  if (equiv->parsed()) {
    Str out;
    Str err;
    if (efgu_equivalence(game.g, mixed.c_str(), behavior.c_str(),
                         realization ? 1 : 0, &out.p, &err.p) != EFGU_OK) {
      return complain(err, "equivalence sweep failed");
    }
    std::cout << out.p << "\n";
    return json::parse(std::string(out.p))["equivalent"] == true ? kOk
                                                                 : kNegative;
  }

  if (tpartial->parsed()) {
    Str out;
    Str err;
    if (efgu_t_partial(game.g, tree.c_str(), &out.p, &err.p) != EFGU_OK) {
      return complain(err, "restriction failed");
    }
    std::cout << out.p;
    return kOk;
  }

  if (dot->parsed()) {
    Str out;
    Str err;
    if (efgu_export_dot(game.g, &out.p, &err.p) != EFGU_OK) {
      return complain(err, "rendering failed");
    }
    std::cout << out.p;
    return kOk;
  }

  std::cerr << "error: no subcommand\n";
  return kFailure;
}
