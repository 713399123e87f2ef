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

#ifndef THERMOSIM_INTERFERENCE_H
#define THERMOSIM_INTERFERENCE_H

#include <optional>
#include <string_view>
#include <vector>

#include "thermosim/protocol.h"

namespace thermosim {

/// Probability of reading |0> on A after CNOT(A -> B), discarding B and a
/// Hadamard on A, starting from the Phi+ post-selected state. Computed by
/// simulating the circuit; this is the reference value for the module.
double circuit_probability(const ProtocolConfig &cfg);

enum class Convention : uint8_t {
    /// Cross term e^{-(bA E0 + bB E1')/2} cos(phi) / (N^2 Z_A Z_B), the
    /// closed form that omits the unit-norm factor of 2.
    Paper,
    /// Same with a factor 2 on the cross term; matches circuit_probability.
    Corrected,
};

std::string_view convention_name(Convention c);
/// Parses "paper" / "corrected". Throws ConfigError otherwise.
Convention parse_convention(std::string_view text);

/// Closed-form read-out probability. Only valid in the regime E_0' = 0 and
/// E_1 = 0; anything else throws ConfigError.
double closed_form_probability(const ProtocolConfig &cfg, Convention convention);

/// 2 sqrt(p0 f0 p1 f1) / N^2, the amplitude of the cos(phi) modulation.
double visibility(const ProtocolConfig &cfg);

struct BetaBAxis {
    std::vector<double> values;
};

struct SweepSpec {
    ProtocolConfig cfg;
    std::vector<double> phi_points;
    std::optional<BetaBAxis> beta_b_axis;
};

struct SweepRow {
    double phi;
    std::optional<double> beta_b;
    double probability;
};

/// Evaluates the read-out probability over the grid. Rows come out with
/// beta_B as the outer axis and phi as the inner axis. When `convention` is
/// given the closed form is used instead of the circuit simulation.
std::vector<SweepRow> sweep(const SweepSpec &spec, std::optional<Convention> convention = std::nullopt);

/// n points evenly spaced over [lo, hi], both endpoints included (n >= 2).
std::vector<double> linspace(double lo, double hi, size_t n);

}  // namespace thermosim

#endif
