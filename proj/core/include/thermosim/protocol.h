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

#ifndef THERMOSIM_PROTOCOL_H
#define THERMOSIM_PROTOCOL_H

#include <array>
#include <cstdint>
#include <string_view>

#include "thermosim/qcore.h"
#include "thermosim/thermal.h"

namespace thermosim {

/// Outcome of a Bell-basis measurement on the ancilla pair A'B'.
/// The declaration order is the fixed outcome order used by the sampler.
enum class BellOutcome : uint8_t {
    PhiPlus = 0,
    PhiMinus = 1,
    PsiPlus = 2,
    PsiMinus = 3,
};

inline constexpr std::array<BellOutcome, 4> ALL_BELL_OUTCOMES = {
    BellOutcome::PhiPlus,
    BellOutcome::PhiMinus,
    BellOutcome::PsiPlus,
    BellOutcome::PsiMinus,
};

std::string_view outcome_name(BellOutcome outcome);

/// (|00> + |11>)/sqrt2, (|00> - |11>)/sqrt2, (|01> + |10>)/sqrt2,
/// (|01> - |10>)/sqrt2 on shape (2, 2).
StateVector bell_state(BellOutcome outcome);

/// Two thermal qubits A and B plus the relative phase carried by A's
/// purification. Rejects non-qubit specs and any Gibbs weight that
/// underflows to zero.
class ProtocolConfig {
   public:
    ProtocolConfig(ThermalSpec spec_a, ThermalSpec spec_b, double phi);

    const ThermalSpec &spec_a() const {
        return spec_a_;
    }
    const ThermalSpec &spec_b() const {
        return spec_b_;
    }
    double phi() const {
        return phi_;
    }
    /// Gibbs weights p_n of A.
    const std::array<double, 2> &p() const {
        return p_;
    }
    /// Gibbs weights f_n of B.
    const std::array<double, 2> &f() const {
        return f_;
    }

    ProtocolConfig with_phi(double phi) const;
    ProtocolConfig with_beta_b(double beta_b) const;

   private:
    ThermalSpec spec_a_;
    ThermalSpec spec_b_;
    double phi_;
    std::array<double, 2> p_;
    std::array<double, 2> f_;
};

struct PostSelectionResult {
    BellOutcome outcome;
    double probability;
    /// Unit-norm post-measurement state of AB, shape (2, 2).
    StateVector state;
};

/// Subsystem positions inside the joint state.
inline constexpr size_t ANCILLA_A = 0;
inline constexpr size_t SYSTEM_A = 1;
inline constexpr size_t ANCILLA_B = 2;
inline constexpr size_t SYSTEM_B = 3;

/// purify(A, phi) (x) purify(B, 0) on shape (2, 2, 2, 2) ordered (A', A, B', B).
StateVector joint_state(const ProtocolConfig &cfg);

/// Closed-form branch for a Bell outcome on A'B'.
///
/// The returned state has unit norm: for PhiPlus it is
/// (sqrt(p0 f0)|00> + e^{i phi} sqrt(p1 f1)|11>)/N with N^2 = p0 f0 + p1 f1,
/// and the factor 1/2 from the Bell-state overlap goes entirely into the
/// outcome probability N^2/2.
PostSelectionResult post_select(const ProtocolConfig &cfg, BellOutcome outcome);

/// Same quantity computed by brute force: project the joint state with
/// |Bell><Bell| on (A', B'), take the squared norm as the probability, and
/// contract the surviving A'B' factor away.
PostSelectionResult post_select_oracle(const ProtocolConfig &cfg, BellOutcome outcome);

enum class Branch : uint8_t {
    /// Phi+ or Phi- clicks; superposition when E_0' = 0 and E_1 = 0.
    Phi,
    /// Psi+ or Psi- clicks; superposition when E_1 = 0 and E_1' = 0.
    Psi,
};

double success_probability(const ProtocolConfig &cfg, Branch target);

/// Per-outcome counts indexed by the BellOutcome value.
struct OutcomeCounts {
    std::array<uint64_t, 4> counts{};

    uint64_t operator[](BellOutcome o) const {
        return counts[static_cast<size_t>(o)];
    }
    uint64_t total() const;
    bool operator==(const OutcomeCounts &) const = default;
};

/// n independent draws from the analytic outcome distribution. The
/// generator is seeded locally, so equal seeds give equal counts.
OutcomeCounts sample_outcomes(const ProtocolConfig &cfg, uint64_t n, uint64_t seed);

}  // namespace thermosim

#endif
