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

#include "ovsim/bellmeas.hpp"

#include <array>

namespace ovsim {

const char* to_string(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus: return "psi+";
        case BellOutcome::PsiMinus: return "psi-";
        case BellOutcome::PhiPlus: return "phi+";
        case BellOutcome::PhiMinus: return "phi-";
        case BellOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

BellOutcome to_outcome(BellKind kind) {
    switch (kind) {
        case BellKind::PsiPlus: return BellOutcome::PsiPlus;
        case BellKind::PsiMinus: return BellOutcome::PsiMinus;
        case BellKind::PhiPlus: return BellOutcome::PhiPlus;
        case BellKind::PhiMinus: return BellOutcome::PhiMinus;
    }
    return BellOutcome::Inconclusive;
}

std::optional<BellKind> to_kind(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus: return BellKind::PsiPlus;
        case BellOutcome::PsiMinus: return BellKind::PsiMinus;
        case BellOutcome::PhiPlus: return BellKind::PhiPlus;
        case BellOutcome::PhiMinus: return BellKind::PhiMinus;
        case BellOutcome::Inconclusive: return std::nullopt;
    }
    return std::nullopt;
}

const StateVector& BellMeasurementResult::residual() const {
    if (!residual_.has_value()) {
        throw ZeroProbabilityCollapseError("no residual for this Bell outcome");
    }
    return *residual_;
}

ProjectionResult bell_project(const StateVector& s, const Mode& a, const Mode& b,
                              BellKind kind) {
    const std::array<Mode, 2> pair = {a, b};
    return project(s, pair, bell(kind, a, b));
}

std::vector<BellPairComponent> expand_bell_pairs(const StateVector& s) {
    if (s.modes() != canonical_mode_order()) {
        throw ModeMismatchError("expansion requires the canonical 7-mode layout");
    }
    std::vector<BellPairComponent> out;
    out.reserve(16);
    for (BellKind k1 : kBellDrawOrder) {
        const ProjectionResult first = bell_project(s, kMode1, kMode3p, k1);
        for (BellKind k2 : kBellDrawOrder) {
            if (!first.has_residual()) {
                out.push_back({k1, k2, 0.0, std::nullopt});
                continue;
            }
            const ProjectionResult second =
                bell_project(first.residual(), kMode2, kMode4p, k2);
            const double weight = first.prob() * second.prob();
            if (!second.has_residual()) {
                out.push_back({k1, k2, weight, std::nullopt});
            } else {
                out.push_back({k1, k2, weight, second.residual()});
            }
        }
    }
    return out;
}

BellMeasurementResult bell_measure_sample(const StateVector& s, const Mode& a,
                                          const Mode& b, MeasurementModel model,
                                          RandomStream& rng) {
    std::array<ProjectionResult, 4> results = {
        bell_project(s, a, b, kBellDrawOrder[0]),
        bell_project(s, a, b, kBellDrawOrder[1]),
        bell_project(s, a, b, kBellDrawOrder[2]),
        bell_project(s, a, b, kBellDrawOrder[3]),
    };
    const double u = rng.next_unit();
    std::size_t drawn = 3;
    double cum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        cum += results[i].prob();
        if (u < cum) {
            drawn = i;
            break;
        }
    }
    const BellKind kind = kBellDrawOrder[drawn];
    if (model == MeasurementModel::LinearOptics &&
        (kind == BellKind::PhiPlus || kind == BellKind::PhiMinus)) {
        const double p_inconclusive = results[2].prob() + results[3].prob();
        return BellMeasurementResult(BellOutcome::Inconclusive, p_inconclusive,
                                     std::nullopt);
    }
    std::optional<StateVector> residual;
    if (results[drawn].has_residual()) {
        residual = results[drawn].residual();
    }
    return BellMeasurementResult(to_outcome(kind), results[drawn].prob(),
                                 std::move(residual));
}

}  // namespace ovsim
