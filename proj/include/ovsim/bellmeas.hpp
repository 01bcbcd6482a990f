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

#ifndef OVSIM_BELLMEAS_HPP
#define OVSIM_BELLMEAS_HPP

#include <array>
#include <optional>
#include <vector>

#include "ovsim/rng.hpp"
#include "ovsim/states.hpp"
#include "ovsim/statevec.hpp"

namespace ovsim {

/// Distinguishability model of the Bell analyzer. A linear-optics analyzer
/// can label only PsiPlus/PsiMinus; a drawn PhiPlus/PhiMinus is reported as
/// Inconclusive.
enum class MeasurementModel { Ideal, LinearOptics };

/// Reported analyzer outcome: one of the four Bell states, or Inconclusive
/// when a Phi state arrived and the analyzer cannot label it.
enum class BellOutcome { PsiPlus, PsiMinus, PhiPlus, PhiMinus, Inconclusive };

const char* to_string(BellOutcome outcome);
BellOutcome to_outcome(BellKind kind);
/// Underlying Bell state of a conclusive outcome; nullopt for Inconclusive.
std::optional<BellKind> to_kind(BellOutcome outcome);

/// Fixed sampling order of the four Bell outcomes. Cumulative-probability
/// draws walk this order with strict less-than, so shot streams are
/// reproducible bit-for-bit.
inline constexpr std::array<BellKind, 4> kBellDrawOrder = {
    BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus};

/// One sampled Bell measurement: the reported outcome, its Born probability
/// (for Inconclusive, the summed probability of both Phi states), and the
/// collapsed residual when the outcome is conclusive.
class BellMeasurementResult {
  public:
    BellMeasurementResult(BellOutcome outcome, double prob,
                          std::optional<StateVector> residual)
        : outcome_(outcome), prob_(prob), residual_(std::move(residual)) {}

    BellOutcome outcome() const { return outcome_; }
    double prob() const { return prob_; }
    bool has_residual() const { return residual_.has_value(); }
    const StateVector& residual() const;

  private:
    BellOutcome outcome_;
    double prob_;
    std::optional<StateVector> residual_;
};

/// Projects the (a, b) pair of `s` onto the given Bell state; returns the
/// Born probability and renormalized residual on the remaining modes.
ProjectionResult bell_project(const StateVector& s, const Mode& a, const Mode& b,
                              BellKind kind);

/// One of the 16 components of the double Bell-basis expansion: the Bell
/// states found on pairs (1, 3') and (2, 4'), the joint probability, and the
/// normalized three-photon residual on modes (3, 4, C). The residual is
/// absent when the weight is below the zero cutoff.
struct BellPairComponent {
    BellKind kind1;
    BellKind kind2;
    double weight;
    std::optional<StateVector> chi;
};

/// Expands a 7-mode state (canonical mode order required) over the Bell
/// bases of pairs (1, 3') and (2, 4'). The 16 weights are non-negative and
/// sum to 1; components are listed in kBellDrawOrder-major order.
std::vector<BellPairComponent> expand_bell_pairs(const StateVector& s);

/// Draws one Bell outcome on the (a, b) pair with its Born probability,
/// deterministically given the stream state. Under LinearOptics a drawn Phi
/// state is reported Inconclusive with no residual.
BellMeasurementResult bell_measure_sample(const StateVector& s, const Mode& a,
                                          const Mode& b, MeasurementModel model,
                                          RandomStream& rng);

}  // namespace ovsim

#endif
