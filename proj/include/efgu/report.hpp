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

#ifndef EFGU_REPORT_HPP_
#define EFGU_REPORT_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace efgu {

// One concrete counterexample to a validated property.  `property` is the
// short class tag ("P0", "U1", "I6", ...), `player` is the display name of
// the player the instance is about (empty for purely structural checks), and
// `witness` is a canonical space-separated "key=value" string naming the
// nodes/trees/actions involved.
struct Violation {
  std::string property;
  std::string player;
  std::string witness;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.property == b.property && a.player == b.player &&
           a.witness == b.witness;
  }
  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.property, a.player, a.witness) <
           std::tie(b.property, b.player, b.witness);
  }
};

class ViolationReport {
 public:
  void add(std::string property, std::string player, std::string witness) {
    items_.push_back(
        {std::move(property), std::move(player), std::move(witness)});
  }

  void merge(const ViolationReport& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  // Deterministic order regardless of traversal order during checking.
  void finalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  bool empty() const { return items_.empty(); }
  const std::vector<Violation>& items() const { return items_; }

  std::set<std::string> classes() const {
    std::set<std::string> out;
    for (const auto& v : items_) out.insert(v.property);
    return out;
  }

 private:
  std::vector<Violation> items_;
};

}  // namespace efgu

#endif  // EFGU_REPORT_HPP_
