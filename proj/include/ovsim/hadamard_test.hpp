// Copyright 2026 The ovsim authors
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

#ifndef OVSIM_HADAMARD_TEST_HPP
#define OVSIM_HADAMARD_TEST_HPP

#include <vector>

#include "ovsim/statevec.hpp"

namespace ovsim {

/// One pure component of a mixed two-qubit state.
struct EnsembleMember {
    double weight;
    StateVector state;
};

/// Two-qubit density matrix represented as a weighted pure-state mixture.
/// Weights are non-negative and sum to 1; all members share one ordered
/// two-mode list.
class Ensemble {
  public:
    explicit Ensemble(std::vector<EnsembleMember> members);
    static Ensemble pure(StateVector state);

    const std::vector<EnsembleMember>& members() const { return members_; }
    const std::vector<Mode>& system_modes() const;

  private:
    std::vector<EnsembleMember> members_;
};

/// Phase-gate angle, radians. diag(1, e^{i radians}) on the ancilla,
/// applied after the controlled operation.
struct PhaseAngle {
    double radians = 0.0;
};

struct AncillaProbs {
    double p0;
    double p1;
};

/// Ancilla statistics of the circuit  H — controlled-U — phase — H —
/// computational measurement, simulated gate by gate on ancilla ⊗ system.
/// Equals p0 = (1 + Re(e^{i phase} Tr(U rho))) / 2, but that closed form is
/// only the test oracle; this function runs the circuit.
AncillaProbs hadamard_test_probs(const Operator& u, const Ensemble& rho,
                                 PhaseAngle phase);

/// Tr(U rho) reconstructed from two circuit runs, at phase 0 (real part)
/// and -pi/2 (imaginary part).
cnum estimate_trace(const Operator& u, const Ensemble& rho);

}  // namespace ovsim

#endif
