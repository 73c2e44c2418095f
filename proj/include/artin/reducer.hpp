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

// Geodesics and the word problem.
//
// The geodesic words are exactly the freely reduced words admitting no RRS.
// reduce() folds a word letter by letter, keeping the prefix read so far
// geodesic: a letter either cancels the last one, extends the geodesic, or
// creates a word whose optimal RRS followed by one free reduction is again
// geodesic.

#ifndef ARTIN_REDUCER_HPP_
#define ARTIN_REDUCER_HPP_

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "rrs.hpp"
#include "word.hpp"

namespace artin {

  inline bool is_geodesic(Presentation const& p, std::span<Letter const> w) {
    return is_freely_reduced(w) && !find_any_rrs(p, w);
  }

  struct ReduceOptions {
    // Require a unique optimal RRS at every step and re-check that every
    // intermediate word is geodesic; violations throw ContractError.
    bool verify = false;
    // Called with the word and the RRS before each RRS is applied.
    std::function<void(Word const&, Rrs const&)> on_rrs;
  };

  struct Reduction {
    Word           word;
    ReductionTrace trace;
  };

  inline Reduction reduce(Presentation const&     p,
                          std::span<Letter const> w,
                          ReduceOptions const&    opts = {}) {
    Reduction out;
    Word&     u = out.word;
    for (Letter g : w) {
      if (g.name() >= p.size()) {
        throw UsageError("letter outside the presentation");
      }
      if (!u.empty() && u.back() == g.inverse()) {
        out.trace.events.push_back(
            {TraceEvent::Kind::cancel, u.size() - 1, {}, {}});
        u.pop_back();
        continue;
      }
      u.push_back(g);
      auto r = find_optimal_rrs(p, u, {.verify = opts.verify});
      if (!r) {
        continue;
      }
      if (r->tail_start + 1 != u.size()) {
        throw ContractError("RRS of u.g does not cancel g");
      }
      if (opts.on_rrs) {
        opts.on_rrs(u, *r);
      }
      auto [next, trace] = apply_rrs(p, u, *r);
      out.trace.append(trace);
      u = std::move(next);
      if (opts.verify && !is_geodesic(p, u)) {
        throw ContractError("RRS followed by a free reduction left a "
                            "non-geodesic word");
      }
    }
    return out;
  }

  inline bool equal(Presentation const&     p,
                    std::span<Letter const> w,
                    std::span<Letter const> v) {
    return reduce(p, concat(w, invert(v))).word.empty();
  }

  // Words reachable from a geodesic by length-preserving moves.
  struct GeodesicClass {
    Word              representative;
    std::vector<Word> members;  // breadth-first order, representative first
    // Edges between member indices, filled when requested.
    std::vector<std::pair<std::size_t, std::size_t>> move_edges;

    bool contains(std::span<Letter const> w) const {
      for (auto const& m : members) {
        if (std::equal(m.begin(), m.end(), w.begin(), w.end())) {
          return true;
        }
      }
      return false;
    }
  };

  struct ClosureResult {
    GeodesicClass geodesics;
    bool          overflow = false;  // cap reached before completion
  };

  // Words obtained from w by swapping one adjacent commuting pair of
  // distinct generators, or by applying tau to one contiguous 2-generated
  // critical factor.
  inline std::vector<Word> length_preserving_moves(Presentation const&     p,
                                                   std::span<Letter const> w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].name() != w[i + 1].name() && p.commutes(w[i], w[i + 1])) {
        Word v(w.begin(), w.end());
        std::swap(v[i], v[i + 1]);
        out.push_back(std::move(v));
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      Generator const          a = w[i].name();
      std::optional<Generator> b;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        Generator g = w[j].name();
        if (g != a) {
          if (!b) {
            Exponent e = p.exponent(a, g);
            if (e.is_infinite() || e.value() <= 2) {
              break;
            }
            b = g;
          } else if (g != *b) {
            break;
          }
        }
        if (!b) {
          continue;
        }
        DihedralContext ctx(a, *b, p.exponent(a, *b).value());
        auto            factor = w.subspan(i, j + 1 - i);
        if (auto d = critical_decompose(ctx, factor)) {
          Word v(w.begin(), w.end());
          Word image = tau(ctx, *d);
          std::copy(image.begin(), image.end(), v.begin() + i);
          out.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  inline ClosureResult geodesic_closure(Presentation const&     p,
                                        std::span<Letter const> w,
                                        std::size_t cap          = 100'000,
                                        bool        record_edges = false) {
    if (!is_geodesic(p, w)) {
      throw UsageError("closure requires a geodesic word");
    }
    ClosureResult result;
    auto&         cls = result.geodesics;
    cls.representative.assign(w.begin(), w.end());
    std::unordered_map<Word, std::size_t, WordHash> index;
    cls.members.push_back(cls.representative);
    index.emplace(cls.representative, 0);
    for (std::size_t next = 0; next < cls.members.size(); ++next) {
      Word current = cls.members[next];
      for (auto& v : length_preserving_moves(p, current)) {
        auto it = index.find(v);
        if (it == index.end()) {
          if (cls.members.size() >= cap) {
            result.overflow = true;
            return result;
          }
          it = index.emplace(v, cls.members.size()).first;
          cls.members.push_back(std::move(v));
        }
        if (record_edges) {
          cls.move_edges.emplace_back(next, it->second);
        }
      }
    }
    return result;
  }

  // Image in the abelianization: generators joined by a chain of odd
  // finite exponents map to the same free generator.
  struct AbelianImage {
    std::vector<std::size_t> class_of;  // generator -> class index
    std::vector<long long>   sums;      // class index -> exponent sum

    friend bool operator==(AbelianImage const&, AbelianImage const&) = default;
  };

  inline AbelianImage abelianized_image(Presentation const&     p,
                                        std::span<Letter const> w) {
    std::vector<std::size_t> parent(p.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t g) {
      return parent[g] == g ? g : parent[g] = root(parent[g]);
    };
    for (Generator g = 0; g < p.size(); ++g) {
      for (Generator h = g + 1; h < p.size(); ++h) {
        Exponent e = p.exponent(g, h);
        if (e.is_finite() && e.value() % 2 == 1) {
          parent[root(h)] = root(g);
        }
      }
    }
    AbelianImage                       image;
    std::map<std::size_t, std::size_t> numbering;
    image.class_of.resize(p.size());
    for (Generator g = 0; g < p.size(); ++g) {
      auto [it, fresh] = numbering.emplace(root(g), numbering.size());
      image.class_of[g] = it->second;
    }
    image.sums.assign(numbering.size(), 0);
    for (Letter x : w) {
      image.sums[image.class_of.at(x.name())] += x.sign();
    }
    return image;
  }

}  // namespace artin

#endif  // ARTIN_REDUCER_HPP_
