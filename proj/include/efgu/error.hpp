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

#ifndef EFGU_ERROR_HPP_
#define EFGU_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace efgu {

enum class ErrorKind {
  kParse,           // malformed document text
  kBuild,           // document parsed but violates the format contract
  kArgument,        // caller passed an inconsistent argument
  kNotFound,        // named entity does not exist
  kCapExceeded,     // enumeration size above the configured cap
  kNodeDependence,  // behavior construction disagrees across an information set
  kInternal,        // invariant breach inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kBuild: return "build";
    case ErrorKind::kArgument: return "argument";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kNodeDependence: return "node-dependence";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace efgu

#endif  // EFGU_ERROR_HPP_
