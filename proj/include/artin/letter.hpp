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

#ifndef ARTIN_LETTER_HPP_
#define ARTIN_LETTER_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace artin {

  // Index of a generator in its Presentation.
  using Generator = std::uint16_t;

  // A generator or its inverse. Stored as +-(index + 1) so that comparison,
  // inversion and hashing are single integer operations.
  class Letter {
   public:
    constexpr Letter() noexcept = default;

    constexpr Letter(Generator name, bool inverted) noexcept
        : _code(inverted ? -static_cast<std::int32_t>(name) - 1
                         : static_cast<std::int32_t>(name) + 1) {}

    static constexpr Letter positive(Generator name) noexcept {
      return Letter(name, false);
    }

    static constexpr Letter negative(Generator name) noexcept {
      return Letter(name, true);
    }

    // The name of a letter is its positive form.
    constexpr Generator name() const noexcept {
      return static_cast<Generator>((_code > 0 ? _code : -_code) - 1);
    }

    constexpr bool is_positive() const noexcept {
      return _code > 0;
    }

    constexpr bool is_negative() const noexcept {
      return _code < 0;
    }

    constexpr int sign() const noexcept {
      return _code > 0 ? 1 : -1;
    }

    constexpr Letter inverse() const noexcept {
      Letter result;
      result._code = -_code;
      return result;
    }

    // Same name, sign given by s (+1 or -1).
    constexpr Letter with_sign(int s) const noexcept {
      return Letter(name(), s < 0);
    }

    constexpr std::int32_t code() const noexcept {
      return _code;
    }

    friend constexpr bool operator==(Letter, Letter) noexcept = default;
    friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

   private:
    std::int32_t _code = 1;
  };

  constexpr bool essentially_different(Letter x, Letter y) noexcept {
    return x.name() != y.name();
  }

  constexpr bool same_name(Letter x, Letter y) noexcept {
    return x.name() == y.name();
  }

}  // namespace artin

template <>
struct std::hash<artin::Letter> {
  std::size_t operator()(artin::Letter x) const noexcept {
    return std::hash<std::int32_t>{}(x.code());
  }
};

#endif  // ARTIN_LETTER_HPP_
