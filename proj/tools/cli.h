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

#ifndef THERMOSIM_TOOLS_CLI_H
#define THERMOSIM_TOOLS_CLI_H

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "thermosim/interference.h"
#include "thermosim/protocol.h"

namespace thermosim::cli {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_CONFIG = 1;
inline constexpr int EXIT_ASSERTION = 2;

/// Seed for the pseudo-random energies generated by `eigencheck`.
inline constexpr uint64_t EIGENCHECK_SEED = 20171215;

/// Flat JSON run configuration, e.g.
/// {"beta_a":1.0,"beta_b":1.0,"energies_a":[5.0,0.0],"energies_b":[0.0,1.0],"phi":0.0}
struct RunConfig {
    double beta_a;
    double beta_b;
    std::array<double, 2> energies_a;
    std::array<double, 2> energies_b;
    double phi;

    ProtocolConfig to_protocol() const;
};

/// Parses and validates a RunConfig document. All five fields are required
/// and unknown fields are rejected. Throws ConfigError.
RunConfig parse_run_config(const std::string &json_text);
RunConfig load_run_config(const std::string &path);

/// Formats with 9 significant digits ("%.9g"), mapping -0 to 0.
std::string format_number(double value);

/// Full CSV text (header plus one line per row).
std::string interference_csv(const std::vector<SweepRow> &rows);

/// Energies in [-10, 10) drawn from a generator seeded with `seed`.
std::vector<double> eigencheck_energies(size_t dim, uint64_t seed = EIGENCHECK_SEED);

/// Runs the command line `args` (without the program name). Output is only
/// written once a command has succeeded, so failures leave `out` empty.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace thermosim::cli

#endif
