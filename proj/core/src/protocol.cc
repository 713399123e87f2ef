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

#include "thermosim/protocol.h"

#include <cmath>
#include <random>
#include <string>

#include "thermosim/errors.h"

using namespace thermosim;

namespace {

std::array<double, 2> qubit_weights(const ThermalSpec &spec, const char *label) {
    if (spec.dim() != 2) {
        throw ConfigError(std::string("Protocol system ") + label + " must be a qubit, got d = " +
                          std::to_string(spec.dim()) + ".");
    }
    auto g = gibbs_weights(spec);
    if (!(g.weights[0] > 0) || !(g.weights[1] > 0)) {
        throw ConfigError(std::string("Gibbs weights of system ") + label +
                          " underflow to zero; reduce beta or the level spacing.");
    }
    return {g.weights[0], g.weights[1]};
}

bool is_phi(BellOutcome o) {
    return o == BellOutcome::PhiPlus || o == BellOutcome::PhiMinus;
}

double sign_of(BellOutcome o) {
    return (o == BellOutcome::PhiPlus || o == BellOutcome::PsiPlus) ? 1.0 : -1.0;
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view thermosim::outcome_name(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PhiPlus:
            return "PhiPlus";
        case BellOutcome::PhiMinus:
            return "PhiMinus";
        case BellOutcome::PsiPlus:
            return "PsiPlus";
        case BellOutcome::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

StateVector thermosim::bell_state(BellOutcome outcome) {
    double s = 1 / std::sqrt(2.0);
    double sign = sign_of(outcome);
    std::vector<Complex> amps(4);
    if (is_phi(outcome)) {
        amps[0b00] = s;
        amps[0b11] = sign * s;
    } else {
        amps[0b01] = s;
        amps[0b10] = sign * s;
    }
    return StateVector(SubsystemShape({2, 2}), std::move(amps));
}

ProtocolConfig::ProtocolConfig(ThermalSpec spec_a, ThermalSpec spec_b, double phi)
    : spec_a_(std::move(spec_a)),
      spec_b_(std::move(spec_b)),
      phi_(phi),
      p_(qubit_weights(spec_a_, "A")),
      f_(qubit_weights(spec_b_, "B")) {
    if (!std::isfinite(phi_)) {
        throw ConfigError("Phase phi must be finite.");
    }
}

ProtocolConfig ProtocolConfig::with_phi(double phi) const {
    return ProtocolConfig(spec_a_, spec_b_, phi);
}

ProtocolConfig ProtocolConfig::with_beta_b(double beta_b) const {
    return ProtocolConfig(spec_a_, ThermalSpec(beta_b, spec_b_.hamiltonian()), phi_);
}

StateVector thermosim::joint_state(const ProtocolConfig &cfg) {
    return tensor_product(purify(cfg.spec_a(), cfg.phi()), purify(cfg.spec_b(), 0));
}

PostSelectionResult thermosim::post_select(const ProtocolConfig &cfg, BellOutcome outcome) {
    const auto &p = cfg.p();
    const auto &f = cfg.f();
    Complex phase = std::polar(1.0, cfg.phi());
    double sign = sign_of(outcome);

    // Phi branches pair equal ancilla labels (|00>, |11> on AB); Psi branches
    // pair opposite labels (|01>, |10>).
    size_t b_first = is_phi(outcome) ? 0 : 1;
    size_t b_second = 1 - b_first;
    double first = std::sqrt(p[0]) * std::sqrt(f[b_first]);
    double second = std::sqrt(p[1]) * std::sqrt(f[b_second]);
    double norm_sq = p[0] * f[b_first] + p[1] * f[b_second];
    double norm = std::sqrt(norm_sq);

    std::vector<Complex> amps(4);
    amps[0 * 2 + b_first] = first / norm;
    amps[1 * 2 + b_second] = sign * phase * (second / norm);
    return PostSelectionResult{
        .outcome = outcome,
        .probability = 0.5 * norm_sq,
        .state = StateVector(SubsystemShape({2, 2}), std::move(amps)),
    };
}

PostSelectionResult thermosim::post_select_oracle(const ProtocolConfig &cfg, BellOutcome outcome) {
    StateVector joint = joint_state(cfg);
    StateVector bell = bell_state(outcome);
    StateVector projected = apply(Operator::projector(bell), joint, {ANCILLA_A, ANCILLA_B});
    double probability = projected.squared_norm();
    StateVector normalized = projected.normalized();

    // The projected state is |bell>_{A'B'} (x) |chi>_{AB}; recover chi by
    // contracting with <bell| on the ancilla positions.
    std::vector<Complex> chi(4);
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            Complex acc = 0;
            for (size_t ap = 0; ap < 2; ap++) {
                for (size_t bp = 0; bp < 2; bp++) {
                    size_t idx = (ap << 3) | (a << 2) | (bp << 1) | b;
                    acc += std::conj(bell[ap * 2 + bp]) * normalized[idx];
                }
            }
            chi[a * 2 + b] = acc;
        }
    }
    return PostSelectionResult{
        .outcome = outcome,
        .probability = probability,
        .state = StateVector(SubsystemShape({2, 2}), std::move(chi)),
    };
}

double thermosim::success_probability(const ProtocolConfig &cfg, Branch target) {
    const auto &p = cfg.p();
    const auto &f = cfg.f();
    if (target == Branch::Phi) {
        return p[0] * f[0] + p[1] * f[1];
    }
    return p[0] * f[1] + p[1] * f[0];
}

uint64_t OutcomeCounts::total() const {
    uint64_t t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

OutcomeCounts thermosim::sample_outcomes(const ProtocolConfig &cfg, uint64_t n, uint64_t seed) {
    if (n == 0) {
        throw ConfigError("Sample count must be at least 1.");
    }
    std::array<double, 4> cdf{};
    double acc = 0;
    for (auto o : ALL_BELL_OUTCOMES) {
        acc += post_select(cfg, o).probability;
        cdf[static_cast<size_t>(o)] = acc;
    }

    std::mt19937_64 rng(seed);
    OutcomeCounts result;
    for (uint64_t k = 0; k < n; k++) {
        // Scale by the accumulated total so rounding never leaves a gap at the top.
        double u = unit_uniform(rng) * acc;
        size_t pick = 3;
        for (size_t j = 0; j < 3; j++) {
            if (u < cdf[j]) {
                pick = j;
                break;
            }
        }
        result.counts[pick]++;
    }
    return result;
}
