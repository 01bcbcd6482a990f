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

#ifndef OVSIM_STATES_HPP
#define OVSIM_STATES_HPP

#include "ovsim/statevec.hpp"

namespace ovsim {

/// The four two-photon Bell states. PsiPlus/PsiMinus are the pair a
/// linear-optics analyzer can label.
enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// Sign of the diagonal single-photon basis (|H> ± |V>)/sqrt(2).
enum class PmSign { Plus, Minus };

const char* to_string(BellKind kind);
const char* to_string(PmSign sign);

/// Normalized single-photon polarization qubit a|H> + b|V>.
///
/// The primary constructor implements the input fix-up policy: amplitudes
/// whose norm deviates from 1 by at most 1e-6 are silently renormalized,
/// larger deviations raise NotNormalizableError (they signal a caller typo
/// rather than rounding noise). `normalized` skips the guard and rescales
/// any nonzero pair, for programmatically generated amplitudes.
class PolarizationState {
  public:
    PolarizationState(cnum alpha_h, cnum alpha_v);
    static PolarizationState normalized(cnum alpha_h, cnum alpha_v);

    cnum alpha_h() const { return h_; }
    cnum alpha_v() const { return v_; }

    /// One-mode StateVector carrying this qubit on the given mode.
    StateVector on(const Mode& mode) const;

    /// Squared overlap |<this|other>|^2.
    double overlap_with(const PolarizationState& other) const;

  private:
    PolarizationState() = default;
    cnum h_, v_;
};

/// a|H> + b|V> on one mode, under the PolarizationState fix-up policy.
StateVector polarization(cnum a, cnum b, const Mode& mode);

/// Bell state on the ordered mode pair (mu, nu):
///   PsiPlus/PsiMinus = (|H>mu|V>nu ± |V>mu|H>nu)/sqrt(2)
///   PhiPlus/PhiMinus = (|H>mu|H>nu ± |V>mu|V>nu)/sqrt(2)
StateVector bell(BellKind kind, const Mode& mu, const Mode& nu);

/// (|H> ± |V>)/sqrt(2) on one mode.
StateVector pm_state(PmSign sign, const Mode& mode);

/// The five-photon teleportation resource on modes (3, 3', 4, 4', C):
///
///   (|Psi+>_{3,3'} |Psi+>_{4,4'} |H>_C + |Psi+>_{4,3'} |Psi+>_{3,4'} |V>_C) / sqrt(2)
///
/// The control polarization selects which output mode each input photon is
/// teleported to, and the two inputs always land in different outputs.
StateVector build_resource();

/// Joint 7-photon state |phi>_1 |psi>_2 ⊗ resource, over the canonical mode
/// order (1, 2, 3, 3', 4, 4', C); dimension 128.
StateVector build_full_state(const PolarizationState& phi, const PolarizationState& psi);

}  // namespace ovsim

#endif
