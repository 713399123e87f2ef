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

#ifndef THERMOSIM_THERMAL_H
#define THERMOSIM_THERMAL_H

#include <vector>

#include "thermosim/qcore.h"

namespace thermosim {

/// Diagonal Hamiltonian given by its ordered energy levels E_0..E_{d-1}.
/// Energies are dimensionless with the Boltzmann constant set to 1.
class QuditHamiltonian {
   public:
    explicit QuditHamiltonian(std::vector<double> energies);

    const std::vector<double> &energies() const {
        return energies_;
    }
    size_t dim() const {
        return energies_.size();
    }
    double min_energy() const;

    bool operator==(const QuditHamiltonian &) const = default;

   private:
    std::vector<double> energies_;
};

/// Inverse temperature plus Hamiltonian. beta must be finite and >= 0.
class ThermalSpec {
   public:
    ThermalSpec(double beta, QuditHamiltonian hamiltonian);

    double beta() const {
        return beta_;
    }
    const QuditHamiltonian &hamiltonian() const {
        return hamiltonian_;
    }
    size_t dim() const {
        return hamiltonian_.dim();
    }

   private:
    double beta_;
    QuditHamiltonian hamiltonian_;
};

struct GibbsWeights {
    /// p_n = exp(-beta E_n) / Z.
    std::vector<double> weights;
    /// Z = sum_n exp(-beta E_n). May over- or underflow for extreme beta*E;
    /// log_partition stays accurate.
    double partition;
    double log_partition;
};

/// Gibbs weights computed with the exponents shifted by the ground energy,
/// so that large beta*E neither overflows nor underflows the normalization.
GibbsWeights gibbs_weights(const ThermalSpec &spec);

/// exp(-beta H)/Z as a d x d matrix in the energy eigenbasis.
DensityMatrix thermal_density(const ThermalSpec &spec);

/// sum_n sqrt(p_n) e^{i phi [n == 1]} |n>_ancilla |n>_system on shape (d, d).
///
/// The ancilla is the first subsystem. A nonzero phase is only defined for
/// qubits; phi != 0 with d > 2 throws ConfigError.
StateVector purify(const ThermalSpec &spec, double phi = 0);

}  // namespace thermosim

#endif
