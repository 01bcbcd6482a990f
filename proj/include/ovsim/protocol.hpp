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

#ifndef OVSIM_PROTOCOL_HPP
#define OVSIM_PROTOCOL_HPP

#include <array>
#include <optional>

#include "ovsim/bellmeas.hpp"
#include "ovsim/rng.hpp"
#include "ovsim/states.hpp"
#include "ovsim/statevec.hpp"

namespace ovsim {

/// Which three-photon conditional state the double Bell measurement left
/// behind, indexed by the signs of the two detected Psi states. PlusPlus and
/// MinusMinus are the accepted branches; the mixed branches cannot be
/// mapped onto the PlusPlus state by local one-photon unitaries and are
/// discarded.
enum class ChiBranch { PlusPlus, MinusMinus, PlusMinus, MinusPlus };

/// Branch for a conclusive pair of Bell outcomes; nullopt when either
/// outcome is a Phi state (not a Psi pair at all).
std::optional<ChiBranch> chi_branch(BellKind first, BellKind second);
bool branch_accepted(ChiBranch branch);

/// Exact outcome distribution of one protocol configuration.
struct ProtocolDistribution {
    double p_accept;              // postselection success probability (1/8)
    double p_plus_given_accept;   // control-photon + probability, conditioned
    double p_minus_given_accept;  // control-photon - probability, conditioned
    double overlap_true;          // |<phi|psi>|^2 computed directly, for reference
};

/// Record of a single sampled protocol run.
struct ProtocolOutcome {
    BellOutcome bell1;                  // analyzer on pair (1, 3')
    BellOutcome bell2;                  // analyzer on pair (2, 4')
    bool accepted;                      // both conclusive and equal-signed
    std::optional<PmSign> control;      // present iff accepted
};

/// Control-photon probabilities in the diagonal basis.
struct ControlProbs {
    double p_plus;
    double p_minus;
};

/// Runs the protocol by exact projection on the 128-dimensional joint
/// state: two Bell measurements on pairs (1, 3') and (2, 4'), postselection
/// on equal-signed Psi outcomes, optional Z⊗Z correction of the
/// MinusMinus branch, and the diagonal-basis control measurement.
///
/// The returned distribution satisfies
///   p_plus_given_accept - p_minus_given_accept = |<phi|psi>|^2
/// with or without the correction, and p_accept = 1/8 for every input pair.
ProtocolDistribution run_exact(const PolarizationState& phi,
                               const PolarizationState& psi, bool apply_correction);

/// Collapses the joint state onto an accepted branch and returns the
/// three-photon conditional state on modes (3, 4, C), corrected if asked.
StateVector collapse_accepted(const PolarizationState& phi,
                              const PolarizationState& psi, ChiBranch branch,
                              bool apply_correction);

/// Z on mode 3 and Z on mode 4. Maps the MinusMinus conditional state to
/// the PlusPlus one exactly. Requires a state over modes (3, 4, C).
StateVector z_correction(const StateVector& chi);

/// Born probabilities of finding the control photon in (|H> ± |V>)/sqrt(2).
/// Requires a normalized 3-mode state containing mode C.
ControlProbs measure_control(const StateVector& chi);

/// Inverts the linear law: overlap = P+ - P- = 2 P+ - 1.
double overlap_from_distribution(const ProtocolDistribution& d);

/// Per-input-pair sampling tables: the exact Bell-outcome distribution of
/// one shot, computed once so that repeated draws cost three uniforms.
/// `draw` consumes one uniform for each analyzer (walking kBellDrawOrder
/// cumulatively with strict less-than) and, on acceptance, one more for the
/// control photon (+ before -). Both analyzers always fire; an unlabeled
/// Phi collapse still conditions the second draw.
class ShotSampler {
  public:
    ShotSampler(const PolarizationState& phi, const PolarizationState& psi);
    ProtocolOutcome draw(RandomStream& rng) const;

  private:
    std::array<double, 4> bell1_probs_;
    std::array<std::array<double, 4>, 4> bell2_given_1_;
    double p_plus_plusplus_;
    double p_plus_minusminus_;
};

/// One physical run of the optical circuit, sampled under the linear-optics
/// analyzer model. Deterministic given the stream state.
ProtocolOutcome run_shot(const PolarizationState& phi, const PolarizationState& psi,
                         RandomStream& rng);

}  // namespace ovsim

#endif
