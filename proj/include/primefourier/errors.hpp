/*
   Copyright 2026 The primefourier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PRIMEFOURIER_ERRORS_HPP
#define PRIMEFOURIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace primefourier {

/// Input violates an operation's precondition (non-prime modulus, size
/// mismatch, empty support, ...).
class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An outcome that the underlying theorems rule out. Reaching this means a
/// bug in the arithmetic, never bad input.
class theorem_violation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A configured work limit (prime bound for sweeps, retry count) ran out.
class budget_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace primefourier

#endif  // PRIMEFOURIER_ERRORS_HPP
