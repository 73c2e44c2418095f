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

// Presentations of 3-free Artin groups: a list of generator names and a
// symmetric Coxeter matrix with entries in {2, 4, 5, 6, ...} or infinity.
//
// File format:
//
//   # comment
//   generators a b c d
//   m a b 4
//   m b c inf
//
// Pairs without an m-line have exponent infinity.

#ifndef ARTIN_PRESENTATION_HPP_
#define ARTIN_PRESENTATION_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "letter.hpp"

namespace artin {

  // Length of the Artin relation between two generators, or infinity when
  // the pair generates a free subgroup.
  class Exponent {
   public:
    constexpr explicit Exponent(unsigned value) noexcept : _value(value) {}

    static constexpr Exponent infinity() noexcept {
      return Exponent(kInfinity);
    }

    constexpr bool is_finite() const noexcept {
      return _value != kInfinity;
    }

    constexpr bool is_infinite() const noexcept {
      return _value == kInfinity;
    }

    unsigned value() const {
      if (is_infinite()) {
        throw UsageError("exponent is infinite");
      }
      return _value;
    }

    std::string to_string() const {
      return is_finite() ? std::to_string(_value) : std::string("inf");
    }

    friend constexpr bool operator==(Exponent, Exponent) noexcept = default;

   private:
    static constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();
    unsigned _value;
  };

  struct Relation {
    std::string first;
    std::string second;
    Exponent exponent;
  };

  namespace detail {
    inline bool is_identifier(std::string_view s) {
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
        return false;
      }
      return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    inline std::vector<std::string_view> split_ws(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size()
               && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size()
               && !std::isspace(static_cast<unsigned char>(line[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(line.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace detail

  class Presentation {
   public:
    Presentation() = default;

    // Throws UsageError when the data violates any presentation invariant:
    // duplicate or malformed names, unknown names in a relation, repeated
    // pairs, exponent 3 ("not 3-free") or exponent < 2.
    Presentation(std::vector<std::string>    generators,
                 std::vector<Relation> const& relations = {})
        : _names(std::move(generators)) {
      if (_names.size() > std::numeric_limits<Generator>::max() / 2) {
        throw UsageError("too many generators");
      }
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (!detail::is_identifier(_names[i])) {
          throw UsageError("invalid generator name '" + _names[i] + "'");
        }
        if (!_index.emplace(_names[i], static_cast<Generator>(i)).second) {
          throw UsageError("duplicate generator '" + _names[i] + "'");
        }
      }
      _matrix.assign(_names.size() * _names.size(), Exponent::infinity());
      std::vector<bool> seen(_matrix.size(), false);
      for (auto const& r : relations) {
        Generator g = generator(r.first);
        Generator h = generator(r.second);
        if (g == h) {
          throw UsageError("relation pairs a generator with itself: '"
                           + r.first + "'");
        }
        check_exponent(r.exponent, r.first, r.second);
        if (seen[g * size() + h]) {
          throw UsageError("duplicate pair entry for " + r.first + " "
                           + r.second);
        }
        seen[g * size() + h] = seen[h * size() + g] = true;
        _matrix[g * size() + h] = _matrix[h * size() + g] = r.exponent;
      }
    }

    static void check_exponent(Exponent            e,
                               std::string const& g,
                               std::string const& h) {
      if (e.is_infinite()) {
        return;
      }
      if (e.value() == 3) {
        throw UsageError("not 3-free: m(" + g + ", " + h
                         + ") = 3 is a braid relation; geodesic reduction by "
                           "rightward reducing sequences does not apply to "
                           "groups with relations of length 3");
      }
      if (e.value() < 2) {
        throw UsageError("exponent < 2 for pair " + g + " " + h);
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::vector<std::string> const& generators() const noexcept {
      return _names;
    }

    std::string const& name(Generator g) const {
      check(g);
      return _names[g];
    }

    std::optional<Generator> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Generator generator(std::string_view name) const {
      auto g = find(name);
      if (!g) {
        throw UsageError("undeclared generator '" + std::string(name) + "'");
      }
      return *g;
    }

    Exponent exponent(Generator g, Generator h) const {
      check(g);
      check(h);
      if (g == h) {
        throw UsageError("exponent of a generator with itself is undefined");
      }
      return _matrix[g * size() + h];
    }

    Exponent exponent(std::string_view g, std::string_view h) const {
      return exponent(generator(g), generator(h));
    }

    // Same-name generators commute by convention.
    bool commutes(Generator g, Generator h) const {
      check(g);
      check(h);
      return g == h || _matrix[g * size() + h] == Exponent(2);
    }

    bool commutes(std::string_view g, std::string_view h) const {
      return commutes(generator(g), generator(h));
    }

    bool commutes(Letter x, Letter y) const {
      return commutes(x.name(), y.name());
    }

    // All finite exponents equal 2.
    bool is_right_angled() const noexcept {
      return std::all_of(_matrix.begin(), _matrix.end(), [](Exponent e) {
        return e.is_infinite() || e == Exponent(2);
      });
    }

    friend bool operator==(Presentation const& lhs, Presentation const& rhs) {
      return lhs._names == rhs._names && lhs._matrix == rhs._matrix;
    }

   private:
    void check(Generator g) const {
      if (g >= _names.size()) {
        throw UsageError("generator index " + std::to_string(g)
                         + " out of range");
      }
    }

    std::vector<std::string>                     _names;
    std::unordered_map<std::string, Generator>   _index;
    std::vector<Exponent>                        _matrix;
  };

  inline Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> generators;
    std::vector<Relation>    relations;
    bool                     have_generators = false;
    std::unordered_map<std::string, std::size_t> pair_line;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tokens = detail::split_ws(line);
      if (tokens.empty()) {
        continue;
      }
      if (!have_generators) {
        if (tokens[0] != "generators") {
          throw ParseError("expected 'generators <name>+'", line_no);
        }
        if (tokens.size() < 2) {
          throw ParseError("no generators declared", line_no);
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string name(tokens[i]);
          if (!detail::is_identifier(name)) {
            throw ParseError("invalid generator name '" + name + "'", line_no);
          }
          if (std::find(generators.begin(), generators.end(), name)
              != generators.end()) {
            throw ParseError("duplicate generator '" + name + "'", line_no);
          }
          generators.push_back(std::move(name));
        }
        have_generators = true;
        continue;
      }
      if (tokens[0] != "m" || tokens.size() != 4) {
        throw ParseError("expected 'm <g> <h> <k|inf>'", line_no);
      }
      std::string g(tokens[1]);
      std::string h(tokens[2]);
      for (auto const& name : {g, h}) {
        if (std::find(generators.begin(), generators.end(), name)
            == generators.end()) {
          throw ParseError("undeclared generator '" + name + "'", line_no);
        }
      }
      if (g == h) {
        throw ParseError("relation pairs a generator with itself: '" + g + "'",
                         line_no);
      }
      std::string key = g < h ? g + " " + h : h + " " + g;
      if (auto [it, fresh] = pair_line.emplace(key, line_no); !fresh) {
        throw ParseError("duplicate pair entry for " + key
                             + " (first given on line "
                             + std::to_string(it->second) + ")",
                         line_no);
      }
      std::string_view value = tokens[3];
      Exponent         e     = Exponent::infinity();
      if (value != "inf") {
        long long k     = 0;
        auto [ptr, err] = std::from_chars(value.data(),
                                          value.data() + value.size(), k);
        if (err != std::errc() || ptr != value.data() + value.size()) {
          throw ParseError("invalid exponent '" + std::string(value) + "'",
                           line_no);
        }
        if (k < 2) {
          throw ParseError("exponent < 2 for pair " + key, line_no);
        }
        if (k > 1'000'000) {
          throw ParseError("exponent too large for pair " + key, line_no);
        }
        e = Exponent(static_cast<unsigned>(k));
      }
      try {
        Presentation::check_exponent(e, g, h);
      } catch (UsageError const& err) {
        throw ParseError(err.what(), line_no);
      }
      relations.push_back({g, h, e});
    }
    if (!have_generators) {
      throw ParseError("missing 'generators' line", line_no);
    }
    return Presentation(std::move(generators), relations);
  }

  // Canonical text form; only finite exponents are listed.
  inline std::string format_presentation(Presentation const& p) {
    std::ostringstream out;
    out << "generators";
    for (auto const& name : p.generators()) {
      out << ' ' << name;
    }
    out << '\n';
    for (Generator g = 0; g < p.size(); ++g) {
      for (Generator h = g + 1; h < p.size(); ++h) {
        Exponent e = p.exponent(g, h);
        if (e.is_finite()) {
          out << "m " << p.name(g) << ' ' << p.name(h) << ' ' << e.to_string()
              << '\n';
        }
      }
    }
    return out.str();
  }

}  // namespace artin

#endif  // ARTIN_PRESENTATION_HPP_
