/*
   Copyright 2026 The polysep authors

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

#ifndef POLYSEP_ERRORS_HPP
#define POLYSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polysep {

// The asymptotic sign pattern is not yet visible at the given parameter
// (typically: a below the per-degree threshold). Recoverable; scans record
// it as a row status, the CLI maps it to exit code 3.
class ThresholdError : public std::runtime_error {
  public:
    explicit ThresholdError(const std::string& what) : std::runtime_error(what) {}
};

// Root finding exhausted its precision-escalation budget. CLI exit code 4.
class NonConvergenceError : public std::runtime_error {
  public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polysep

#endif
