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

// Brute-force verifiers. Nothing here uses the dihedral, p2g, rrs or
// reducer code paths, so they can be used to check them.

#ifndef ARTIN_ORACLE_HPP_
#define ARTIN_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace artin::oracle {

  // flips: replace a same-sign alternating factor of length m(a,b) by the
  // other one. relators: replace any factor u of a cyclic conjugate u x of
  // a relator or its inverse by x^-1; this contains every flip.
  enum class Moves { flips, relators };

  struct BallSearchConfig {
    std::size_t slack    = 2;        // words longer than |w| + slack are cut
    std::size_t node_cap = 200'000;  // distinct words visited
    Moves       moves    = Moves::relators;
  };

  struct BallSearchResult {
    std::size_t min_len   = 0;
    Word        witness;
    bool        exhausted = false;  // the bounded graph was fully explored
    std::size_t nodes     = 0;
  };

  namespace detail {
    // One byte per letter: +-(generator + 1).
    using Packed = std::string;

    inline Packed pack(std::span<Letter const> w) {
      Packed s;
      s.reserve(w.size());
      for (Letter x : w) {
        s.push_back(static_cast<char>(x.code()));
      }
      return s;
    }

    inline Word unpack(Packed const& s) {
      Word w;
      w.reserve(s.size());
      for (char c : s) {
        int code = static_cast<signed char>(c);
        w.emplace_back(static_cast<Generator>((code > 0 ? code : -code) - 1),
                       code < 0);
      }
      return w;
    }

    inline int name_of(char c) {
      int code = static_cast<signed char>(c);
      return code > 0 ? code : -code;
    }

    inline int sign_of(char c) {
      return static_cast<signed char>(c) > 0 ? 1 : -1;
    }

    // Words one elementary move away that are no longer than s: delete an
    // inverse pair, or replace a same-sign alternating factor of length
    // m(a,b) by the other one.
    template <typename Visit>
    void shorter_or_equal(Presentation const& p,
                          std::vector<int> const& exponents, Packed const& s,
                          Visit&& visit) {
      std::size_t const L = s.size();
      std::size_t const N = p.size();
      for (std::size_t i = 0; i + 1 < L; ++i) {
        if (static_cast<signed char>(s[i]) == -static_cast<signed char>(s[i + 1])) {
          Packed t = s;
          t.erase(i, 2);
          visit(std::move(t));
        }
      }
      for (std::size_t i = 0; i + 1 < L; ++i) {
        int a = name_of(s[i]);
        int b = name_of(s[i + 1]);
        if (a == b || sign_of(s[i]) != sign_of(s[i + 1])) {
          continue;
        }
        int m = exponents[(a - 1) * N + (b - 1)];
        if (m <= 0 || i + static_cast<std::size_t>(m) > L) {
          continue;
        }
        bool alternating = true;
        for (int k = 0; k < m && alternating; ++k) {
          char c      = s[i + k];
          alternating = sign_of(c) == sign_of(s[i])
                        && name_of(c) == (k % 2 == 0 ? a : b);
        }
        if (!alternating) {
          continue;
        }
        Packed t = s;
        for (int k = 0; k < m; ++k) {
          t[i + k] = static_cast<char>(sign_of(s[i]) * (k % 2 == 0 ? b : a));
        }
        visit(std::move(t));
      }
    }

    // Words obtained by inserting an inverse pair anywhere in s.
    template <typename Visit>
    void insertions(Presentation const& p, Packed const& s, Visit&& visit) {
      for (std::size_t i = 0; i <= s.size(); ++i) {
        for (std::size_t g = 1; g <= p.size(); ++g) {
          for (int sg : {1, -1}) {
            Packed t = s;
            char   x = static_cast<char>(sg * static_cast<int>(g));
            char   y = static_cast<char>(-sg * static_cast<int>(g));
            t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), {x, y});
            visit(std::move(t));
          }
        }
      }
    }

    struct Rewrite {
      Packed from;
      Packed to;
    };

    inline Packed inverse(Packed const& s) {
      Packed t;
      for (std::size_t k = s.size(); k-- > 0;) {
        t.push_back(static_cast<char>(-static_cast<signed char>(s[k])));
      }
      return t;
    }

    // Every u -> x^-1 with u x a cyclic conjugate of a relator
    // _m(a,b) (_m(b,a))^-1 or of its inverse, u nonempty.
    inline std::vector<Rewrite> relator_rewrites(Presentation const& p) {
      std::vector<Rewrite> out;
      for (Generator g = 0; g < p.size(); ++g) {
        for (Generator h = g + 1; h < p.size(); ++h) {
          Exponent e = p.exponent(g, h);
          if (e.is_infinite()) {
            continue;
          }
          std::size_t const m = e.value();
          Packed            left, right;
          for (std::size_t k = 0; k < m; ++k) {
            left.push_back(static_cast<char>((k % 2 == 0 ? g : h) + 1));
            right.push_back(static_cast<char>((k % 2 == 0 ? h : g) + 1));
          }
          Packed const r = left + inverse(right);
          for (Packed const& rel : {r, inverse(r)}) {
            for (std::size_t rot = 0; rot < rel.size(); ++rot) {
              Packed c = rel.substr(rot) + rel.substr(0, rot);
              for (std::size_t len = 1; len <= c.size(); ++len) {
                out.push_back({c.substr(0, len), inverse(c.substr(len))});
              }
            }
          }
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return std::tie(x.from, x.to) < std::tie(y.from, y.to);
      });
      out.erase(std::unique(out.begin(), out.end(),
                            [](auto const& x, auto const& y) {
                              return x.from == y.from && x.to == y.to;
                            }),
                out.end());
      return out;
    }

    // Rewrites grouped by the first letter of the replaced factor.
    using RewriteIndex = std::unordered_map<char, std::vector<Rewrite>>;

    inline RewriteIndex index_rewrites(std::vector<Rewrite> rules) {
      RewriteIndex index;
      for (auto& r : rules) {
        char key = r.from[0];
        index[key].push_back(std::move(r));
      }
      return index;
    }

    template <typename Visit>
    void rewrites(RewriteIndex const& index, Packed const& s,
                  std::size_t bound, Visit&& visit) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto it = index.find(s[i]);
        if (it == index.end()) {
          continue;
        }
        for (auto const& r : it->second) {
          if (i + r.from.size() > s.size()
              || s.size() - r.from.size() + r.to.size() > bound
              || s.compare(i, r.from.size(), r.from) != 0) {
            continue;
          }
          Packed t = s;
          t.replace(i, r.from.size(), r.to);
          visit(std::move(t));
        }
      }
    }

    inline std::vector<int> exponent_table(Presentation const& p) {
      std::size_t const N = p.size();
      std::vector<int>  table(N * N, 0);
      for (Generator g = 0; g < N; ++g) {
        for (Generator h = 0; h < N; ++h) {
          if (g != h && p.exponent(g, h).is_finite()) {
            table[g * N + h] = static_cast<int>(p.exponent(g, h).value());
          }
        }
      }
      return table;
    }
  }  // namespace detail

  // Explores every word reachable from w by elementary moves without
  // exceeding |w| + slack letters, shortest words first. When stop_at is
  // given the search ends as soon as a word of that length is seen.
  inline BallSearchResult
  bfs_min_length(Presentation const& p, std::span<Letter const> w,
                 BallSearchConfig                cfg     = {},
                 std::optional<std::size_t>      stop_at = std::nullopt) {
    if (p.size() > 100) {
      throw UsageError("ball search supports at most 100 generators");
    }
    std::size_t const bound     = w.size() + cfg.slack;
    auto const        exponents = detail::exponent_table(p);
    auto const        table     = cfg.moves == Moves::relators
                                      ? detail::index_rewrites(
                                          detail::relator_rewrites(p))
                                      : detail::RewriteIndex{};

    // A task at priority L either applies the moves that keep a word of
    // length L within length L, or inserts inverse pairs into a word of
    // length L - 2. Insertions therefore wait until every shorter word has
    // been handled.
    struct Task {
      detail::Packed word;
      bool           insert;
    };
    std::vector<std::deque<Task>>      buckets(bound + 1);
    std::unordered_set<detail::Packed> seen;
    BallSearchResult                   result;
    detail::Packed                     start = detail::pack(w);
    result.min_len                           = start.size();
    result.witness.assign(w.begin(), w.end());
    seen.insert(start);
    buckets[start.size()].push_back({std::move(start), false});

    bool capped = false;
    auto visit  = [&](detail::Packed&& t) {
      if (seen.contains(t)) {
        return;
      }
      if (seen.size() >= cfg.node_cap) {
        capped = true;
        return;
      }
      if (t.size() < result.min_len) {
        result.min_len = t.size();
        result.witness = detail::unpack(t);
      }
      seen.insert(t);
      buckets[t.size()].push_back({std::move(t), false});
    };

    while (true) {
      if (stop_at && result.min_len <= *stop_at) {
        break;
      }
      auto it = std::find_if(buckets.begin(), buckets.end(),
                             [](auto const& q) { return !q.empty(); });
      if (it == buckets.end()) {
        result.exhausted = !capped;
        break;
      }
      Task task = std::move(it->front());
      it->pop_front();
      if (task.insert) {
        detail::insertions(p, task.word, visit);
        continue;
      }
      detail::shorter_or_equal(p, exponents, task.word, visit);
      if (cfg.moves == Moves::relators) {
        detail::rewrites(table, task.word, bound, visit);
      }
      if (task.word.size() + 2 <= bound) {
        buckets[task.word.size() + 2].push_back({std::move(task.word), true});
      }
    }
    result.nodes = seen.size();
    return result;
  }

  struct Equivalence {
    bool equivalent = false;  // u v^-1 was reduced to the empty word
    bool exhausted  = false;  // ... or the whole bounded ball was explored
  };

  // Searches the ball around u v^-1 for the empty word.
  inline Equivalence bfs_equivalent(Presentation const&     p,
                                    std::span<Letter const> u,
                                    std::span<Letter const> v,
                                    BallSearchConfig        cfg = {}) {
    auto r = bfs_min_length(p, concat(u, invert(v)), cfg, std::size_t{0});
    return {r.min_len == 0, r.exhausted};
  }

  // Geodesic test for words in two generators with a finite exponent:
  // freely reduced and (longest positive alternating factor, capped at m)
  // + (longest negative alternating factor, capped at m) <= m.
  inline bool dihedral_oracle(Presentation const& p, std::span<Letter const> w) {
    std::vector<Generator> names;
    for (Letter x : w) {
      if (std::find(names.begin(), names.end(), x.name()) == names.end()) {
        names.push_back(x.name());
      }
    }
    if (names.size() > 2) {
      throw UsageError("dihedral oracle needs a 2-generated word");
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    if (names.size() < 2) {
      return true;
    }
    Exponent e = p.exponent(names[0], names[1]);
    if (e.is_infinite()) {
      throw UsageError("dihedral oracle needs a finite exponent");
    }
    std::size_t const m      = e.value();
    std::size_t       longest[2] = {0, 0};  // positive, negative
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t j = i + 1;
      while (j < w.size() && w[j].sign() == w[i].sign()
             && w[j].name() != w[j - 1].name()) {
        ++j;
      }
      auto& slot = longest[w[i].is_positive() ? 0 : 1];
      slot       = std::max(slot, j - i);
    }
    return std::min(longest[0], m) + std::min(longest[1], m) <= m;
  }

  // Shortest representative in a presentation whose finite exponents are
  // all 2: repeatedly cancel x ... x^-1 when every letter in between
  // commutes with x.
  inline Word commutation_oracle(Presentation const& p,
                                 std::span<Letter const> w) {
    if (!p.is_right_angled()) {
      throw UsageError("commutation oracle needs every finite exponent to "
                       "be 2");
    }
    Word cur(w.begin(), w.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (cur[j] == cur[i].inverse()) {
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
          if (cur[j].name() != cur[i].name()
              && !p.commutes(cur[i].name(), cur[j].name())) {
            break;
          }
        }
      }
    }
    return cur;
  }

}  // namespace artin::oracle

#endif  // ARTIN_ORACLE_HPP_
