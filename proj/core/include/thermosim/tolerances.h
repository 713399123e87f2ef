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

#ifndef THERMOSIM_TOLERANCES_H
#define THERMOSIM_TOLERANCES_H

namespace thermosim {

/// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double EQ_TOL = 1e-12;

/// Tolerance for anything computed through finite differences.
inline constexpr double FD_TOL = 1e-6;

/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double PSD_TOL = 1e-10;

}  // namespace thermosim

#endif
