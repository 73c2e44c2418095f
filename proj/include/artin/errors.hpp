// Copyright 2026 The artin3free Authors
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

#ifndef ARTIN_ERRORS_HPP_
#define ARTIN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation or word text. line() is 1-based, 0 when the
  // input has no line structure (words).
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line = 0)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A well-formed request that violates an operation's precondition.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // An internal invariant failed: a found object does not satisfy its
  // definition, or a replayed trace does not reproduce its target.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

}  // namespace artin

#endif  // ARTIN_ERRORS_HPP_
