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

#include "gtest/gtest.h"
#include "test_util.h"
#include "thermosim/errors.h"
#include "thermosim/tolerances.h"

using namespace thermosim;
using namespace thermosim::testing;

// 30-digit reference values for the figure configuration
// (beta_A = beta_B = 1, E = (5, 0), E' = (0, 1)).
constexpr double FIG1_P_PHI_PLUS = 0.136017151306545333505302042815;
constexpr double FIG1_N_SQ = 0.27203430261309066701060408563;
constexpr double FIG1_P_PSI_PLUS = 0.363982848693454666494697957185;

namespace {

ProtocolConfig flat_config(double phi = 0) {
    return ProtocolConfig(ThermalSpec(0, QuditHamiltonian({5, 0})), ThermalSpec(0, QuditHamiltonian({0, 1})), phi);
}

}  // namespace

TEST(ProtocolConfig, validation) {
    ThermalSpec qubit(1, QuditHamiltonian({0, 1}));
    ThermalSpec qutrit(1, QuditHamiltonian({0, 1, 2}));
    EXPECT_THROW(ProtocolConfig(qutrit, qubit, 0), ConfigError);
    EXPECT_THROW(ProtocolConfig(qubit, qutrit, 0), ConfigError);
    // exp(-1000) underflows to zero.
    EXPECT_THROW(ProtocolConfig(ThermalSpec(100, QuditHamiltonian({10, 0})), qubit, 0), ConfigError);
}

TEST(bell_state, orthonormal_basis) {
    for (auto a : ALL_BELL_OUTCOMES) {
        for (auto b : ALL_BELL_OUTCOMES) {
            EXPECT_NEAR(fidelity_pure(bell_state(a), bell_state(b)), a == b ? 1 : 0, EQ_TOL);
        }
    }
}

TEST(joint_state, infinite_temperature) {
    auto s = joint_state(flat_config());
    EXPECT_EQ(s.shape(), SubsystemShape({2, 2, 2, 2}));
    for (size_t idx = 0; idx < 16; idx++) {
        bool on = idx == 0b0000 || idx == 0b0011 || idx == 0b1100 || idx == 0b1111;
        EXPECT_NEAR(std::abs(s[idx] - Complex(on ? 0.5 : 0)), 0, EQ_TOL) << idx;
    }
}

TEST(joint_state, reduced_state_of_a_is_thermal) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; trial++) {
        auto cfg = random_config(rng);
        auto rho = partial_trace(joint_state(cfg), {SYSTEM_A});
        auto expected = thermal_density(cfg.spec_a());
        for (size_t k = 0; k < 4; k++) {
            EXPECT_NEAR(std::abs(rho.entries()[k] - expected.entries()[k]), 0, EQ_TOL);
        }
    }
}

TEST(joint_state, amplitude_of_1100) {
    auto cfg = fig1_config(0.4);
    auto s = joint_state(cfg);
    Complex expected = std::sqrt(cfg.p()[1] * cfg.f()[0]) * std::polar(1.0, 0.4);
    EXPECT_NEAR(std::abs(s[0b1100] - expected), 0, EQ_TOL);
}

TEST(post_select, infinite_temperature_phi_plus) {
    auto r = post_select(flat_config(), BellOutcome::PhiPlus);
    EXPECT_NEAR(r.probability, 0.25, EQ_TOL);
    EXPECT_NEAR(fidelity_pure(r.state, bell_state(BellOutcome::PhiPlus)), 1, EQ_TOL);
}

TEST(post_select, figure_configuration) {
    auto cfg = fig1_config();
    EXPECT_NEAR(post_select(cfg, BellOutcome::PhiPlus).probability, FIG1_P_PHI_PLUS, EQ_TOL);
    EXPECT_NEAR(post_select(cfg, BellOutcome::PhiMinus).probability, FIG1_P_PHI_PLUS, EQ_TOL);
    EXPECT_NEAR(post_select(cfg, BellOutcome::PsiPlus).probability, FIG1_P_PSI_PLUS, EQ_TOL);
    EXPECT_NEAR(post_select(cfg, BellOutcome::PsiMinus).probability, FIG1_P_PSI_PLUS, EQ_TOL);
    EXPECT_NEAR(success_probability(cfg, Branch::Phi), FIG1_N_SQ, EQ_TOL);
}

TEST(post_select, branch_amplitudes) {
    auto cfg = fig1_config(1.1);
    const auto &p = cfg.p();
    const auto &f = cfg.f();
    double n = std::sqrt(p[0] * f[0] + p[1] * f[1]);
    double np = std::sqrt(p[0] * f[1] + p[1] * f[0]);
    Complex phase = std::polar(1.0, 1.1);

    auto minus = post_select(cfg, BellOutcome::PhiMinus).state;
    EXPECT_NEAR(std::abs(minus[0b00] - std::sqrt(p[0] * f[0]) / n), 0, EQ_TOL);
    EXPECT_NEAR(std::abs(minus[0b11] + phase * std::sqrt(p[1] * f[1]) / n), 0, EQ_TOL);

    auto psi_minus = post_select(cfg, BellOutcome::PsiMinus).state;
    EXPECT_NEAR(std::abs(psi_minus[0b01] - std::sqrt(p[0] * f[1]) / np), 0, EQ_TOL);
    EXPECT_NEAR(std::abs(psi_minus[0b10] + phase * std::sqrt(p[1] * f[0]) / np), 0, EQ_TOL);
    EXPECT_EQ(psi_minus[0b00], Complex(0));
}

TEST(post_select, states_are_unit_norm_and_complete) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; trial++) {
        auto cfg = random_config(rng);
        double total = 0;
        for (auto o : ALL_BELL_OUTCOMES) {
            auto r = post_select(cfg, o);
            EXPECT_NEAR(r.state.squared_norm(), 1, EQ_TOL);
            EXPECT_GT(r.probability, 0);
            EXPECT_LT(r.probability, 1);
            total += r.probability;
        }
        EXPECT_NEAR(total, 1, EQ_TOL);
    }
}

TEST(post_select_oracle, agrees_with_closed_form) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; trial++) {
        auto cfg = random_config(rng);
        for (auto o : ALL_BELL_OUTCOMES) {
            auto a = post_select(cfg, o);
            auto b = post_select_oracle(cfg, o);
            EXPECT_EQ(a.outcome, b.outcome);
            EXPECT_NEAR(a.probability, b.probability, EQ_TOL);
            EXPECT_GE(fidelity_pure(a.state, b.state), 1 - EQ_TOL);
        }
    }
}

TEST(post_select_oracle, infinite_temperature_is_uniform) {
    for (auto o : ALL_BELL_OUTCOMES) {
        EXPECT_NEAR(post_select_oracle(flat_config(), o).probability, 0.25, EQ_TOL);
    }
}

TEST(post_select_oracle, projected_state_factorizes) {
    // The surviving A'B' factor is exactly the Bell state, so the reduced AB
    // state after projection is pure and equals |chi><chi|.
    auto cfg = fig1_config(0.3);
    for (auto o : ALL_BELL_OUTCOMES) {
        auto projected = apply(Operator::projector(bell_state(o)), joint_state(cfg), {ANCILLA_A, ANCILLA_B})
                             .normalized();
        auto rho_ab = partial_trace(projected, {SYSTEM_A, SYSTEM_B});
        EXPECT_NEAR(rho_ab.purity(), 1, EQ_TOL);
        auto chi = post_select_oracle(cfg, o).state;
        auto expected = DensityMatrix::from_pure(chi);
        for (size_t k = 0; k < 16; k++) {
            EXPECT_NEAR(std::abs(rho_ab.entries()[k] - expected.entries()[k]), 0, EQ_TOL);
        }
    }
}

TEST(post_select, local_unitary_maps_phi_minus_to_phi_plus) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; trial++) {
        auto cfg = random_config(rng);
        auto minus = post_select(cfg, BellOutcome::PhiMinus).state;
        auto plus = post_select(cfg, BellOutcome::PhiPlus).state;
        EXPECT_NEAR(fidelity_pure(apply(Operator::pauli_z(), minus, {1}), plus), 1, EQ_TOL);
    }
}

TEST(post_select, two_temperature_amplitude_ratio) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; trial++) {
        auto cfg = random_regime_config(rng);
        auto s = post_select(cfg, BellOutcome::PhiPlus).state;
        double e0 = cfg.spec_a().hamiltonian().energies()[0];
        double e1p = cfg.spec_b().hamiltonian().energies()[1];
        double ba = cfg.spec_a().beta();
        double bb = cfg.spec_b().beta();
        Complex expected = std::exp(-(ba * e0 - bb * e1p) / 2) * std::polar(1.0, -cfg.phi());
        Complex ratio = s[0b00] / s[0b11];
        EXPECT_NEAR(std::abs(ratio - expected), 0, 1e-12 * std::abs(expected));
    }
}

TEST(success_probability, examples) {
    EXPECT_NEAR(success_probability(flat_config(), Branch::Phi), 0.5, EQ_TOL);
    EXPECT_NEAR(success_probability(flat_config(), Branch::Psi), 0.5, EQ_TOL);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; trial++) {
        auto cfg = random_config(rng);
        double phi = success_probability(cfg, Branch::Phi);
        EXPECT_NEAR(phi + success_probability(cfg, Branch::Psi), 1, EQ_TOL);
        EXPECT_NEAR(phi, 2 * post_select(cfg, BellOutcome::PhiPlus).probability, EQ_TOL);
        EXPECT_NEAR(phi, cfg.p()[0] * cfg.f()[0] + cfg.p()[1] * cfg.f()[1], EQ_TOL);
    }
}

TEST(sample_outcomes, uniform_at_infinite_temperature) {
    const uint64_t n = 100000;
    auto counts = sample_outcomes(flat_config(), n, 99);
    EXPECT_EQ(counts.total(), n);
    double sigma = std::sqrt(n * 0.25 * 0.75);
    for (auto o : ALL_BELL_OUTCOMES) {
        EXPECT_LT(std::abs(static_cast<double>(counts[o]) - 25000.0), 5 * sigma);
    }
}

TEST(sample_outcomes, figure_configuration_frequency) {
    const uint64_t n = 100000;
    auto counts = sample_outcomes(fig1_config(), n, 1234);
    double sigma = std::sqrt(n * FIG1_P_PHI_PLUS * (1 - FIG1_P_PHI_PLUS));
    EXPECT_LT(std::abs(static_cast<double>(counts[BellOutcome::PhiPlus]) - n * FIG1_P_PHI_PLUS), 5 * sigma);
}

TEST(sample_outcomes, deterministic_per_seed) {
    auto cfg = fig1_config();
    EXPECT_EQ(sample_outcomes(cfg, 5000, 7), sample_outcomes(cfg, 5000, 7));
    EXPECT_NE(sample_outcomes(cfg, 5000, 7), sample_outcomes(cfg, 5000, 8));
    EXPECT_THROW(sample_outcomes(cfg, 0, 7), ConfigError);
}
