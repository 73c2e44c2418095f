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

// Words over the letters of a presentation, and their text form.
//
// Grammar: whitespace separated tokens `name` or `name^k`, k a nonzero
// integer; `a^-2` is a^-1 a^-1. Printing uses the same grammar and
// collapses runs of one letter (`d^5`, `b^-2`). The empty word prints as
// the empty string.

#ifndef ARTIN_WORD_HPP_
#define ARTIN_WORD_HPP_

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "letter.hpp"
#include "presentation.hpp"

namespace artin {

  using Word = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Letter x : w) {
        h ^= static_cast<std::size_t>(x.code() + 0x9e37);
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  };

  inline Word parse_word(Presentation const& p, std::string_view text) {
    Word w;
    for (std::string_view token : detail::split_ws(text)) {
      std::string_view name     = token;
      long long        exponent = 1;
      if (auto caret = token.find('^'); caret != std::string_view::npos) {
        name                 = token.substr(0, caret);
        std::string_view num = token.substr(caret + 1);
        if (!num.empty() && num.front() == '+') {
          num.remove_prefix(1);
        }
        auto [ptr, err] = std::from_chars(num.data(), num.data() + num.size(),
                                          exponent);
        if (num.empty() || err != std::errc()
            || ptr != num.data() + num.size()) {
          throw ParseError("malformed token '" + std::string(token) + "'");
        }
        if (exponent == 0) {
          throw ParseError("zero power in token '" + std::string(token)
                           + "'");
        }
        if (exponent > 100'000 || exponent < -100'000) {
          throw ParseError("power too large in token '" + std::string(token)
                           + "'");
        }
      }
      if (!detail::is_identifier(name)) {
        throw ParseError("malformed token '" + std::string(token) + "'");
      }
      auto g = p.find(name);
      if (!g) {
        throw ParseError("unknown generator '" + std::string(name) + "'");
      }
      Letter x(*g, exponent < 0);
      for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        w.push_back(x);
      }
    }
    return w;
  }

  inline std::string format_word(Presentation const& p,
                                 std::span<Letter const> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long long power = static_cast<long long>(j - i) * w[i].sign();
      if (!out.empty()) {
        out += ' ';
      }
      out += p.name(w[i].name());
      if (power != 1) {
        out += '^';
        out += std::to_string(power);
      }
      i = j;
    }
    return out;
  }

  inline std::string format_letter(Presentation const& p, Letter x) {
    return format_word(p, std::span<Letter const>(&x, 1));
  }

  inline bool is_freely_reduced(std::span<Letter const> w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  inline Word free_reduce(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      if (!out.empty() && out.back() == x.inverse()) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  inline Word invert(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  inline Word concat(std::span<Letter const> u, std::span<Letter const> v) {
    Word out(u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  inline Word subword(std::span<Letter const> w,
                      std::size_t             first,
                      std::size_t             last) {
    return Word(w.begin() + first, w.begin() + last);
  }

  // f[w]
  inline Letter first(std::span<Letter const> w) {
    if (w.empty()) {
      throw UsageError("first letter of the empty word");
    }
    return w.front();
  }

  // l[w]
  inline Letter last(std::span<Letter const> w) {
    if (w.empty()) {
      throw UsageError("last letter of the empty word");
    }
    return w.back();
  }

  // pref[w]: w without its last letter.
  inline Word prefix_without_last(std::span<Letter const> w) {
    if (w.empty()) {
      throw UsageError("pref of the empty word");
    }
    return Word(w.begin(), w.end() - 1);
  }

  // suf[w]: w without its first letter.
  inline Word suffix_without_first(std::span<Letter const> w) {
    if (w.empty()) {
      throw UsageError("suf of the empty word");
    }
    return Word(w.begin() + 1, w.end());
  }

  inline bool is_positive(std::span<Letter const> w) noexcept {
    for (Letter x : w) {
      if (x.is_negative()) {
        return false;
      }
    }
    return true;
  }

  inline bool is_negative(std::span<Letter const> w) noexcept {
    for (Letter x : w) {
      if (x.is_positive()) {
        return false;
      }
    }
    return true;
  }

  // True when the name g or its inverse occurs in w.
  inline bool appears_in(Generator g, std::span<Letter const> w) noexcept {
    for (Letter x : w) {
      if (x.name() == g) {
        return true;
      }
    }
    return false;
  }

}  // namespace artin

#endif  // ARTIN_WORD_HPP_
