// Copyright 2026 The thermosim Authors
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

#ifndef THERMOSIM_ERRORS_H
#define THERMOSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace thermosim {

/// Raised when an operation receives arguments outside its domain
/// (bad subsystem indices, mismatched dimensions, out-of-regime parameters).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

}  // namespace thermosim

#endif
