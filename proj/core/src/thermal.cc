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

#include "thermosim/thermal.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermosim/errors.h"

using namespace thermosim;

QuditHamiltonian::QuditHamiltonian(std::vector<double> energies) : energies_(std::move(energies)) {
    if (energies_.size() < 2) {
        throw ConfigError("A Hamiltonian needs at least two energy levels.");
    }
    for (double e : energies_) {
        if (!std::isfinite(e)) {
            throw ConfigError("Energy levels must be finite.");
        }
    }
}

double QuditHamiltonian::min_energy() const {
    return *std::min_element(energies_.begin(), energies_.end());
}

ThermalSpec::ThermalSpec(double beta, QuditHamiltonian hamiltonian) : beta_(beta), hamiltonian_(std::move(hamiltonian)) {
    if (!std::isfinite(beta_) || beta_ < 0) {
        throw ConfigError("Inverse temperature must be finite and nonnegative, got " + std::to_string(beta_) + ".");
    }
}

GibbsWeights thermosim::gibbs_weights(const ThermalSpec &spec) {
    const auto &energies = spec.hamiltonian().energies();
    double beta = spec.beta();
    double e_min = spec.hamiltonian().min_energy();

    GibbsWeights result;
    result.weights.reserve(energies.size());
    double shifted_z = 0;
    for (double e : energies) {
        double w = std::exp(-beta * (e - e_min));
        result.weights.push_back(w);
        shifted_z += w;
    }
    for (double &w : result.weights) {
        w /= shifted_z;
    }
    result.log_partition = std::log(shifted_z) - beta * e_min;
    result.partition = std::exp(result.log_partition);
    return result;
}

DensityMatrix thermosim::thermal_density(const ThermalSpec &spec) {
    auto g = gibbs_weights(spec);
    return DensityMatrix::diagonal(SubsystemShape({spec.dim()}), g.weights);
}

StateVector thermosim::purify(const ThermalSpec &spec, double phi) {
    size_t d = spec.dim();
    if (!std::isfinite(phi)) {
        throw ConfigError("Purification phase must be finite.");
    }
    if (phi != 0 && d > 2) {
        throw ConfigError("A purification phase is only defined for qubits (d = 2), got d = " + std::to_string(d) + ".");
    }
    auto g = gibbs_weights(spec);
    std::vector<Complex> amps(d * d);
    for (size_t n = 0; n < d; n++) {
        Complex a = std::sqrt(g.weights[n]);
        if (n == 1) {
            a *= std::polar(1.0, phi);
        }
        amps[n * d + n] = a;
    }
    return StateVector(SubsystemShape({d, d}), std::move(amps));
}
