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

#include "thermosim/tempop.h"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "thermosim/errors.h"
#include "thermosim/tolerances.h"

using namespace thermosim;

AmplitudeFamily AmplitudeFamily::exp_linear(double coeff, double offset) {
    if (!std::isfinite(coeff) || !std::isfinite(offset)) {
        throw ConfigError("Amplitude family parameters must be finite.");
    }
    return AmplitudeFamily(false, coeff, offset, 0);
}

AmplitudeFamily AmplitudeFamily::constant(Complex value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw ConfigError("Amplitude family parameters must be finite.");
    }
    return AmplitudeFamily(true, 0, 0, value);
}

Complex AmplitudeFamily::evaluate(double energy) const {
    if (constant_) {
        return value_;
    }
    return std::exp(coeff_ * energy + offset_);
}

Complex AmplitudeFamily::derivative(double energy) const {
    if (constant_) {
        return 0;
    }
    return coeff_ * evaluate(energy);
}

Complex AmplitudeFamily::central_difference(double energy, double h) const {
    return (evaluate(energy + h) - evaluate(energy - h)) / (2 * h);
}

FactoredBipartiteState::FactoredBipartiteState(
    size_t left_dim,
    size_t right_dim,
    std::vector<double> left_energies,
    std::vector<double> right_energies,
    std::vector<FactoredTerm> terms,
    std::optional<double> frozen_z)
    : left_dim_(left_dim),
      right_dim_(right_dim),
      left_energies_(std::move(left_energies)),
      right_energies_(std::move(right_energies)),
      terms_(std::move(terms)),
      frozen_z_(frozen_z) {
    if (frozen_z_ && !(*frozen_z_ > 0 && std::isfinite(*frozen_z_))) {
        throw ConfigError("Frozen normalization must be positive and finite.");
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto &t : terms_) {
        if (t.left_basis >= left_dim_ || t.right_basis >= right_dim_) {
            throw ConfigError("Factored term basis index out of range.");
        }
        if (t.left_level >= left_energies_.size() || t.right_level >= right_energies_.size()) {
            throw ConfigError("Factored term energy level out of range.");
        }
        if (!seen.insert({t.left_basis, t.right_basis}).second) {
            throw ConfigError("Factored terms must occupy distinct basis states.");
        }
    }
    double n = evaluate().squared_norm();
    if (std::abs(n - 1) > EQ_TOL) {
        throw ConfigError("Factored state has squared norm " + std::to_string(n) + ", expected 1.");
    }
}

FactoredBipartiteState FactoredBipartiteState::with_normalizing_z(
    size_t left_dim,
    size_t right_dim,
    std::vector<double> left_energies,
    std::vector<double> right_energies,
    std::vector<FactoredTerm> terms) {
    double z = 0;
    for (const auto &t : terms) {
        z += std::norm(
            t.weight * t.left.evaluate(left_energies.at(t.left_level)) *
            t.right.evaluate(right_energies.at(t.right_level)));
    }
    return FactoredBipartiteState(
        left_dim, right_dim, std::move(left_energies), std::move(right_energies), std::move(terms), z);
}

StateVector FactoredBipartiteState::evaluate() const {
    double scale = frozen_z_ ? 1 / std::sqrt(*frozen_z_) : 1.0;
    std::vector<Complex> amps(left_dim_ * right_dim_);
    for (const auto &t : terms_) {
        amps[t.left_basis * right_dim_ + t.right_basis] = t.weight * scale *
                                                           t.left.evaluate(left_energies_[t.left_level]) *
                                                           t.right.evaluate(right_energies_[t.right_level]);
    }
    return StateVector(SubsystemShape({left_dim_, right_dim_}), std::move(amps));
}

DerivativeMode DerivativeMode::finite_difference(double h) {
    if (!(h > 0) || !std::isfinite(h)) {
        throw ConfigError("Finite-difference step must be positive.");
    }
    return {Kind::FiniteDifference, h};
}

StateVector thermosim::apply_K(const FactoredBipartiteState &state, DerivativeMode mode) {
    if (mode.kind == DerivativeMode::Kind::FiniteDifference && !(mode.step > 0)) {
        throw ConfigError("Finite-difference step must be positive.");
    }
    auto diff = [&](const AmplitudeFamily &a, double e) {
        return mode.kind == DerivativeMode::Kind::Analytic ? a.derivative(e) : a.central_difference(e, mode.step);
    };
    const Complex i(0, 1);
    double scale = state.frozen_z() ? 1 / std::sqrt(*state.frozen_z()) : 1.0;
    size_t rd = state.right_dim();
    std::vector<Complex> out(state.left_dim() * rd);
    for (const auto &t : state.terms()) {
        // d/dE_n on the left and d/dE'_n on the right only meet when both
        // factors depend on the same level index.
        if (t.left_level != t.right_level) {
            continue;
        }
        Complex left = i * diff(t.left, state.left_energies()[t.left_level]);
        Complex right = -i * diff(t.right, state.right_energies()[t.right_level]);
        out[t.left_basis * rd + t.right_basis] = t.weight * scale * left * right;
    }
    return StateVector(SubsystemShape({state.left_dim(), rd}), std::move(out));
}

EigenReport thermosim::eigen_report(
    const FactoredBipartiteState &state, DerivativeMode mode, std::optional<double> expected) {
    StateVector psi = state.evaluate();
    StateVector k_psi = apply_K(state, mode);
    double rayleigh = inner_product(psi, k_psi).real();

    auto distance_to = [&](double lambda) {
        double t = 0;
        for (size_t k = 0; k < psi.size(); k++) {
            t += std::norm(k_psi[k] - lambda * psi[k]);
        }
        return std::sqrt(t);
    };

    EigenReport report{
        .rayleigh = rayleigh,
        .residual = distance_to(rayleigh),
        .expected = expected,
        .expected_deviation = std::nullopt,
    };
    if (expected) {
        report.expected_deviation = distance_to(*expected);
    }
    return report;
}

FactoredBipartiteState thermosim::purified_factored(const ThermalSpec &spec) {
    double beta = spec.beta();
    const auto &energies = spec.hamiltonian().energies();
    double e_min = spec.hamiltonian().min_energy();
    size_t d = spec.dim();

    // Split e^{-beta E_n/2} evenly between the two factors. The offsets
    // shift every exponent by the ground energy and do not change the
    // derivatives; Z is shifted to match.
    auto quarter = AmplitudeFamily::exp_linear(-beta / 4, beta * e_min / 4);
    double shifted_z = 0;
    std::vector<FactoredTerm> terms;
    terms.reserve(d);
    for (size_t n = 0; n < d; n++) {
        terms.push_back(FactoredTerm{n, n, n, n, quarter, quarter});
        shifted_z += std::exp(-beta * (energies[n] - e_min));
    }
    return FactoredBipartiteState(d, d, energies, energies, std::move(terms), shifted_z);
}

EigenReport thermosim::eigencheck_purified(const ThermalSpec &spec, DerivativeMode mode) {
    double beta = spec.beta();
    return eigen_report(purified_factored(spec), mode, beta * beta / 16);
}

FactoredBipartiteState thermosim::superposition_factored(
    const ProtocolConfig &cfg, BellOutcome outcome, LevelConvention convention) {
    if (outcome != BellOutcome::PhiPlus && outcome != BellOutcome::PsiPlus) {
        throw ConfigError(
            "Superposition residuals are defined for PhiPlus and PsiPlus, got " + std::string(outcome_name(outcome)) +
            ".");
    }
    const auto &ha = cfg.spec_a().hamiltonian();
    const auto &hb = cfg.spec_b().hamiltonian();
    double beta_a = cfg.spec_a().beta();
    double beta_b = cfg.spec_b().beta();
    auto a_family = AmplitudeFamily::exp_linear(-beta_a / 2, beta_a * ha.min_energy() / 2);
    auto b_family = AmplitudeFamily::exp_linear(-beta_b / 2, beta_b * hb.min_energy() / 2);

    // Levels the protocol pins to zero: E_1 on A and E_0' on B.
    auto family_for = [&](const AmplitudeFamily &f, double energy, bool pinned) {
        if (convention == LevelConvention::ChosenZeroLevels && pinned) {
            return AmplitudeFamily::constant(f.evaluate(energy));
        }
        return f;
    };

    Complex phase = std::polar(1.0, cfg.phi());
    std::vector<FactoredTerm> terms;
    for (size_t a = 0; a < 2; a++) {
        size_t b = outcome == BellOutcome::PhiPlus ? a : 1 - a;
        terms.push_back(FactoredTerm{
            .left_basis = a,
            .right_basis = b,
            .left_level = a,
            .right_level = b,
            .left = family_for(a_family, ha.energies()[a], a == 1),
            .right = family_for(b_family, hb.energies()[b], b == 0),
            .weight = a == 1 ? phase : Complex(1),
        });
    }
    return FactoredBipartiteState::with_normalizing_z(2, 2, ha.energies(), hb.energies(), std::move(terms));
}

EigenReport thermosim::residual_superposition(
    const ProtocolConfig &cfg, BellOutcome outcome, LevelConvention convention, DerivativeMode mode) {
    return eigen_report(superposition_factored(cfg, outcome, convention), mode);
}
