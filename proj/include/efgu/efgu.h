/* Copyright 2025 The efgu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the efgu library. Every function reports through the
 * returned status; a human readable message is placed in *error (malloc'd,
 * release with efgu_free) when the last parameter is non-null. String
 * outputs are malloc'd as well. Domain-negative answers (violations found,
 * strategies not equivalent) are data in the JSON output, not errors.
 */

#ifndef EFGU_EFGU_H_
#define EFGU_EFGU_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct efgu_game efgu_game;

typedef enum efgu_status {
  EFGU_OK = 0,
  EFGU_ERR_PARSE = 1,     /* malformed text or a document contract breach */
  EFGU_ERR_ARG = 2,       /* inconsistent argument */
  EFGU_ERR_NOT_FOUND = 3, /* named entity does not exist */
  EFGU_ERR_CAP = 4,       /* enumeration larger than the configured cap */
  EFGU_ERR_STATE = 5,     /* node dependent mixture */
  EFGU_ERR_INTERNAL = 6   /* invariant breach inside the library */
} efgu_status;

/* Static storage; do not free. */
const char* efgu_version(void);

/* Releases any string this library handed out. Null is a no-op. */
void efgu_free(char* text);

/* Parses an efgu/1 document, builds the forest, awareness and named
 * strategies. The handle owns everything until efgu_game_free. */
efgu_status efgu_game_parse(const char* text, efgu_game** out, char** error);

void efgu_game_free(efgu_game* game);

/* Canonical serialization of the loaded document. */
efgu_status efgu_game_serialize(const efgu_game* game, char** out,
                                char** error);

/* Upper bound for strategy enumeration in later calls on this handle. */
efgu_status efgu_set_enumeration_cap(efgu_game* game, uint64_t cap,
                                     char** error);

/* Runs the named property check, or every check when property is null or
 * empty. The JSON object carries ok, classes and violations. */
efgu_status efgu_validate(const efgu_game* game, const char* property,
                          char** report_json, char** error);

/* Pure strategies of one player (0 is nature). */
efgu_status efgu_strategies(const efgu_game* game, int player, char** json,
                            char** error);

/* Nodes reached by the named profile and the reached sets per player. */
efgu_status efgu_reach(const efgu_game* game, const char* profile,
                       char** json, char** error);

/* Nodes that occur under the named profile and the occurring sets. */
efgu_status efgu_occur(const efgu_game* game, const char* profile,
                       char** json, char** error);

/* Local behavior induced by the named pure or mixed strategy. Unchecked
 * skips the validity and recall gate; node dependence always raises
 * EFGU_ERR_STATE. */
efgu_status efgu_transform(const efgu_game* game, const char* strategy,
                           int unchecked, char** json, char** error);

/* Exhaustive comparison of a named mixed strategy against a named behavior
 * strategy, over visit probabilities, or over occurrence probabilities when
 * realization is nonzero. */
efgu_status efgu_equivalence(const efgu_game* game, const char* mixed,
                             const char* behavior, int realization,
                             char** json, char** error);

/* The restriction to the given tree and everything awareness reaches from
 * it, emitted as a strategy-free document. */
efgu_status efgu_t_partial(const efgu_game* game, const char* tree,
                           char** document, char** error);

/* Graphviz rendering of the forest, one cluster per tree. */
efgu_status efgu_export_dot(const efgu_game* game, char** dot, char** error);

/* A deterministic random game document that passes every check. */
efgu_status efgu_generate(uint64_t seed, char** document, char** error);

/* Catalog of built-in example documents: name, summary, expected classes. */
efgu_status efgu_fixture_list(char** json, char** error);

/* The named example as a document. */
efgu_status efgu_fixture_emit(const char* name, char** document,
                              char** error);

#ifdef __cplusplus
}
#endif

#endif /* EFGU_EFGU_H_ */
