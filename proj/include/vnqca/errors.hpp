// Copyright 2026 The vnqca Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace vnqca {

/// Lattice geometry that cannot support the requested construction
/// (odd extents for Margolus blocks, a causal cone that wraps onto itself).
struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or out-of-domain parameters.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request exceeding the dense simulation ceiling.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical procedure that failed to converge or met a degenerate case.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vnqca
