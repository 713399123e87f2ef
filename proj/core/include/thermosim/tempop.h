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

#ifndef THERMOSIM_TEMPOP_H
#define THERMOSIM_TEMPOP_H

#include <optional>
#include <vector>

#include "thermosim/protocol.h"
#include "thermosim/qcore.h"
#include "thermosim/thermal.h"

namespace thermosim {

/// A single-variable amplitude a(E): either exp(coeff * E + offset) or a
/// constant with no dependence on E.
class AmplitudeFamily {
   public:
    static AmplitudeFamily exp_linear(double coeff, double offset = 0);
    static AmplitudeFamily constant(Complex value);

    bool is_constant() const {
        return constant_;
    }
    double coeff() const {
        return coeff_;
    }
    double offset() const {
        return offset_;
    }

    Complex evaluate(double energy) const;
    /// d/dE a(E), exact.
    Complex derivative(double energy) const;
    /// (a(E + h) - a(E - h)) / 2h.
    Complex central_difference(double energy, double h) const;

   private:
    AmplitudeFamily(bool constant, double coeff, double offset, Complex value)
        : constant_(constant), coeff_(coeff), offset_(offset), value_(value) {
    }

    bool constant_;
    double coeff_;
    double offset_;
    Complex value_;
};

/// One product term weight * left(E_l) * right(E'_r) |left_basis>|right_basis>.
///
/// `left_level` and `right_level` name the energy each factor is a function
/// of. The operator's sum over n pairs d/dE_n on the left with d/dE'_n on the
/// right, so only terms with left_level == right_level respond to it.
struct FactoredTerm {
    size_t left_basis;
    size_t right_basis;
    size_t left_level;
    size_t right_level;
    AmplitudeFamily left;
    AmplitudeFamily right;
    /// Constant prefactor (signs, phases); never differentiated.
    Complex weight = 1;
};

/// Bipartite state whose amplitudes are differentiable functions of the
/// energy levels, evaluated at a fixed point.
///
/// The evaluated vector is sum_t term_t / sqrt(Z) with Z held fixed under
/// differentiation (the frozen normalization), and must have unit norm.
class FactoredBipartiteState {
   public:
    FactoredBipartiteState(
        size_t left_dim,
        size_t right_dim,
        std::vector<double> left_energies,
        std::vector<double> right_energies,
        std::vector<FactoredTerm> terms,
        std::optional<double> frozen_z);

    /// Same, with Z chosen so the evaluated vector has unit norm.
    static FactoredBipartiteState with_normalizing_z(
        size_t left_dim,
        size_t right_dim,
        std::vector<double> left_energies,
        std::vector<double> right_energies,
        std::vector<FactoredTerm> terms);

    size_t left_dim() const {
        return left_dim_;
    }
    size_t right_dim() const {
        return right_dim_;
    }
    const std::vector<double> &left_energies() const {
        return left_energies_;
    }
    const std::vector<double> &right_energies() const {
        return right_energies_;
    }
    const std::vector<FactoredTerm> &terms() const {
        return terms_;
    }
    std::optional<double> frozen_z() const {
        return frozen_z_;
    }

    /// Amplitudes on shape (left_dim, right_dim).
    StateVector evaluate() const;

   private:
    size_t left_dim_;
    size_t right_dim_;
    std::vector<double> left_energies_;
    std::vector<double> right_energies_;
    std::vector<FactoredTerm> terms_;
    std::optional<double> frozen_z_;
};

struct DerivativeMode {
    enum class Kind { Analytic, FiniteDifference };
    Kind kind;
    double step;

    static DerivativeMode analytic() {
        return {Kind::Analytic, 0};
    }
    /// Central differences with step h; h <= 0 throws ConfigError.
    static DerivativeMode finite_difference(double h);
};

/// K|psi> with K = sum_n (i d/dE_n) (x) (-i d/dE'_n). The result is not
/// normalized.
StateVector apply_K(const FactoredBipartiteState &state, DerivativeMode mode = DerivativeMode::analytic());

struct EigenReport {
    /// <psi|K|psi>.
    double rayleigh;
    /// ||K|psi> - rayleigh |psi>||.
    double residual;
    std::optional<double> expected;
    /// ||K|psi> - expected |psi>||, when `expected` is set. Unlike the
    /// residual this also sees a uniform bias in the eigenvalue.
    std::optional<double> expected_deviation;
};

EigenReport eigen_report(
    const FactoredBipartiteState &state, DerivativeMode mode, std::optional<double> expected = std::nullopt);

/// sum_n e^{-beta E_n/4} |n> (x) e^{-beta E_n/4} |n> / sqrt(Z), with both
/// factors sharing the energies E_n.
FactoredBipartiteState purified_factored(const ThermalSpec &spec);

/// Checks the purified thermal state against the eigenvalue beta^2 / 16.
EigenReport eigencheck_purified(const ThermalSpec &spec, DerivativeMode mode = DerivativeMode::analytic());

/// How the post-selected AB state depends on the energy levels.
enum class LevelConvention : uint8_t {
    /// Every level E_0, E_1, E_0', E_1' is a formal variable.
    FullDependence,
    /// E_1 and E_0' are pinned to zero by the protocol and carry no
    /// dependence; their factors are constants.
    ChosenZeroLevels,
};

/// The PhiPlus or PsiPlus post-selected state with A factors
/// e^{-beta_A E_n/2} on the left and B factors e^{-beta_B E'_m/2} on the
/// right. Other outcomes throw ConfigError.
FactoredBipartiteState superposition_factored(
    const ProtocolConfig &cfg, BellOutcome outcome, LevelConvention convention);

EigenReport residual_superposition(
    const ProtocolConfig &cfg,
    BellOutcome outcome,
    LevelConvention convention,
    DerivativeMode mode = DerivativeMode::analytic());

}  // namespace thermosim

#endif
