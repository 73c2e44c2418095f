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


// Fixtures and hand-rolled random generators shared by the test binaries.

#ifndef ARTIN_TESTS_SUPPORT_HPP_
#define ARTIN_TESTS_SUPPORT_HPP_

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <artin/artin.hpp>

namespace artin::testing {

  inline std::string data_path(std::string const& name) {
    return std::string(ARTIN_DATA_DIR) + "/" + name;
  }

  inline std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline Presentation const& p1() {
    static Presentation const p = parse_presentation(slurp(data_path("p1.pres")));
    return p;
  }

  inline Presentation const& p2() {
    static Presentation const p = parse_presentation(slurp(data_path("p2.pres")));
    return p;
  }

  inline Presentation const& raag() {
    static Presentation const p = parse_presentation(slurp(data_path("raag.pres")));
    return p;
  }

  inline constexpr char const* kW18
      = "a c b a b^2 c d a b^-1 c^-1 b^-1 d^5 c^-1";
  inline constexpr char const* kW18Reduced
      = "c d b a^2 b a c^-1 b^-1 c^-1 b d^5";

  inline Word w(Presentation const& p, std::string const& s) {
    return parse_word(p, s);
  }

  inline std::string str(Presentation const& p, std::span<Letter const> v) {
    return format_word(p, v);
  }

  // Random 3-free presentation on 2..max_gens generators a, b, c, ...
  // Exponents are drawn from {2, 4, 5, 6, inf}.
  inline Presentation random_presentation(std::mt19937& rng,
                                          std::size_t   max_gens = 4) {
    std::uniform_int_distribution<std::size_t> size(2, max_gens);
    std::size_t const                          n = size(rng);
    std::vector<std::string>                   names;
    for (std::size_t i = 0; i < n; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
    }
    static constexpr std::array<unsigned, 5>   choices{2, 4, 5, 6, 0};
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    std::vector<Relation>                      relations;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned m = choices[pick(rng)];
        if (m != 0) {
          relations.push_back({names[i], names[j], Exponent(m)});
        }
      }
    }
    return Presentation(std::move(names), std::move(relations));
  }

  inline Letter random_letter(std::mt19937& rng, std::size_t gens) {
    std::uniform_int_distribution<int> g(0, static_cast<int>(gens) - 1);
    std::bernoulli_distribution        inv(0.5);
    return Letter(static_cast<Generator>(g(rng)), inv(rng));
  }

  // Uniform length in [0, max_len]; freely reduced when asked.
  inline Word random_word(std::mt19937& rng, std::size_t gens,
                          std::size_t max_len, bool reduced = false) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::size_t const                          L = len(rng);
    Word                                       out;
    while (out.size() < L) {
      Letter x = random_letter(rng, gens);
      if (reduced && !out.empty() && out.back() == x.inverse()) {
        continue;
      }
      out.push_back(x);
    }
    return out;
  }

  // A geodesic of length at most max_len: the reduction of a random word.
  inline Word random_geodesic(Presentation const& p, std::mt19937& rng,
                              std::size_t max_len) {
    while (true) {
      Word g = reduce(p, random_word(rng, p.size(), max_len + 4, true)).word;
      if (g.size() <= max_len) {
        return g;
      }
    }
  }

  // All words of length exactly len over the letters of the given
  // generators; freely reduced only when asked.
  template <typename Visit>
  void for_each_word(std::vector<Generator> const& gens, std::size_t len,
                     bool reduced, Visit&& visit) {
    std::vector<Letter> alphabet;
    for (Generator g : gens) {
      alphabet.push_back(Letter::positive(g));
      alphabet.push_back(Letter::negative(g));
    }
    Word cur;
    auto rec = [&](auto&& self) -> void {
      if (cur.size() == len) {
        visit(static_cast<Word const&>(cur));
        return;
      }
      for (Letter x : alphabet) {
        if (reduced && !cur.empty() && cur.back() == x.inverse()) {
          continue;
        }
        cur.push_back(x);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
  }

}  // namespace artin::testing

#endif  // ARTIN_TESTS_SUPPORT_HPP_
