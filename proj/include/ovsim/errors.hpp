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

#ifndef OVSIM_ERRORS_HPP
#define OVSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ovsim {

/// Base class for every error raised by the simulator core.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two mode labels that must be distinct (or two label sets that must be
/// disjoint) collide.
struct DuplicateModeError : SimError {
    using SimError::SimError;
};

/// Two states that must share an ordered mode list do not, or a state does
/// not have the mode layout an operation requires.
struct ModeMismatchError : SimError {
    using SimError::SimError;
};

/// A target mode is not present in the state being acted on.
struct UnknownModeError : SimError {
    using SimError::SimError;
};

/// An operator's arity does not match the number of target modes.
struct ArityMismatchError : SimError {
    using SimError::SimError;
};

/// A post-measurement state was requested for an outcome whose probability
/// is below the zero cutoff; the collapsed state is undefined.
struct ZeroProbabilityCollapseError : SimError {
    using SimError::SimError;
};

/// All amplitudes of a would-be state are zero.
struct ZeroStateError : SimError {
    using SimError::SimError;
};

/// Amplitudes deviate from unit norm by more than the fix-up policy allows.
struct NotNormalizableError : SimError {
    using SimError::SimError;
};

/// An operator that must be unitary is not, within tolerance.
struct NonUnitaryError : SimError {
    using SimError::SimError;
};

/// A Monte Carlo estimate was requested from a tally with no accepted shots.
struct NoAcceptedShotsError : SimError {
    using SimError::SimError;
};

}  // namespace ovsim

#endif
