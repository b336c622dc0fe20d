// Copyright 2026 The curvecensus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Error taxonomy for the library.  Three situations are distinguished:
//
//  * InvalidArgument  -- the caller violated a documented precondition
//                        (bad field size, malformed input file, ...).
//  * CapacityError    -- the request is well-formed but outside the
//                        supported desk-scale range (e.g. a census over a
//                        field too large for exhaustive enumeration).
//  * InternalCheck    -- an internal cross-check failed; this always
//                        indicates a bug and is never the caller's fault.
//
// The CLI maps these to distinct exit codes (2, 3 and 1 respectively).

#include <stdexcept>
#include <string>

namespace curvecensus {

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalCheck : std::logic_error {
    explicit InternalCheck(const std::string& msg) : std::logic_error(msg) {}
};

// Require a precondition on caller-supplied data.
inline void require_arg(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

// Require that a request stays within supported desk-scale capacity.
inline void require_capacity(bool cond, const std::string& msg) {
    if (!cond) throw CapacityError(msg);
}

// Assert an internal invariant; failure means the library itself is wrong.
inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalCheck(msg);
}

}  // namespace curvecensus
