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

// Pseudo 2-generator (P2G) words.
//
// Fix generators a, b with 2 < m(a,b) < inf and let P = {a, b, a^-1, b^-1}.
// A word w with f[w], l[w] in P factors as w = w_p w_q w_s where
//   w_p  is the prefix before the first P-letter with a name other than f[w],
//   w_s  is the longest suffix without a P-letter named other than l[w].
// w is P2G when every letter of w_p commutes with f[w], every non-P letter
// of w_q commutes with a and b, and every letter of w_s commutes with l[w].
// Such a word equals alpha rho hat beta, where hat keeps the P-letters and
// alpha, rho, beta collect the other ("internal") letters.

#ifndef ARTIN_P2G_HPP_
#define ARTIN_P2G_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace artin {

  enum class Block { alpha, rho1, rho2, hat, beta };

  struct P2GDecomposition {
    Generator   a;
    Generator   b;
    std::size_t wp_end;  // w_p = w[0, wp_end)
    std::size_t wq_end;  // w_q = w[wp_end, wq_end), w_s = w[wq_end, |w|)
    Word        alpha;
    Word        rho1;
    Word        rho2;
    Word        hat;
    Word        beta;
    // For each letter of w: its block, and its index in assembled().
    std::vector<Block>       block;
    std::vector<std::size_t> destination;

    Word rho() const {
      return concat(rho1, rho2);
    }

    // alpha rho hat beta
    Word assembled() const {
      return concat(concat(concat(alpha, rho1), concat(rho2, hat)), beta);
    }
  };

  // The name of f[w] and the name of the first later letter not commuting
  // with it, when their exponent is finite and greater than 2.
  inline std::optional<std::pair<Generator, Generator>>
  pseudo_generators(Presentation const& p, std::span<Letter const> w) {
    if (w.empty()) {
      return std::nullopt;
    }
    Generator a = w.front().name();
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!p.commutes(a, w[i].name())) {
        Generator b = w[i].name();
        Exponent  e = p.exponent(a, b);
        if (e.is_finite() && e.value() > 2) {
          return std::make_pair(a, b);
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  inline std::optional<P2GDecomposition>
  recognize(Presentation const& p, std::span<Letter const> w, Generator a,
            Generator b) {
    if (w.empty() || a == b) {
      return std::nullopt;
    }
    Exponent e = p.exponent(a, b);
    if (e.is_infinite() || e.value() <= 2) {
      return std::nullopt;
    }
    auto in_p = [a, b](Letter x) { return x.name() == a || x.name() == b; };
    Letter const f = w.front();
    Letter const l = w.back();
    if (!in_p(f) || !in_p(l)) {
      return std::nullopt;
    }
    std::size_t const size = w.size();

    std::size_t wp_end = size;
    for (std::size_t i = 0; i < size; ++i) {
      if (in_p(w[i]) && w[i].name() != f.name()) {
        wp_end = i;
        break;
      }
    }
    if (wp_end == size) {
      // Only one pseudo-generator occurs; no factorization exists.
      return std::nullopt;
    }
    std::size_t ws_begin = 0;
    for (std::size_t i = size; i-- > 0;) {
      if (in_p(w[i]) && w[i].name() != l.name()) {
        ws_begin = i + 1;
        break;
      }
    }
    // When every P-letter named f[w] precedes every P-letter named l[w] the
    // two maximal blocks overlap; w_q is then empty.
    ws_begin = std::max(ws_begin, wp_end);

    for (std::size_t i = 0; i < wp_end; ++i) {
      if (!p.commutes(w[i].name(), f.name())) {
        return std::nullopt;
      }
    }
    for (std::size_t i = wp_end; i < ws_begin; ++i) {
      if (!in_p(w[i])
          && !(p.commutes(w[i].name(), a) && p.commutes(w[i].name(), b))) {
        return std::nullopt;
      }
    }
    for (std::size_t i = ws_begin; i < size; ++i) {
      if (!p.commutes(w[i].name(), l.name())) {
        return std::nullopt;
      }
    }

    P2GDecomposition d{a, b, wp_end, ws_begin, {}, {}, {}, {}, {}, {}, {}};
    d.block.resize(size);
    std::vector<std::size_t> slot(size);  // index within the block
    for (std::size_t i = 0; i < size; ++i) {
      if (in_p(w[i])) {
        d.block[i] = Block::hat;
        slot[i]    = d.hat.size();
        d.hat.push_back(w[i]);
      } else if (i < wp_end) {
        d.block[i] = Block::alpha;
        slot[i]    = d.alpha.size();
        d.alpha.push_back(w[i]);
      } else if (i < ws_begin) {
        d.block[i] = Block::rho1;
        slot[i]    = d.rho1.size();
        d.rho1.push_back(w[i]);
      } else {
        // theta, split left to right: a letter joins rho2 when it commutes
        // with a, b and every earlier theta letter left in beta.
        bool joins = p.commutes(w[i].name(), a) && p.commutes(w[i].name(), b);
        for (std::size_t k = 0; joins && k < d.beta.size(); ++k) {
          joins = p.commutes(w[i], d.beta[k]);
        }
        if (joins) {
          d.block[i] = Block::rho2;
          slot[i]    = d.rho2.size();
          d.rho2.push_back(w[i]);
        } else {
          d.block[i] = Block::beta;
          slot[i]    = d.beta.size();
          d.beta.push_back(w[i]);
        }
      }
    }
    d.destination.resize(size);
    std::size_t const offset[] = {
        0,
        d.alpha.size(),
        d.alpha.size() + d.rho1.size(),
        d.alpha.size() + d.rho1.size() + d.rho2.size(),
        d.alpha.size() + d.rho1.size() + d.rho2.size() + d.hat.size()};
    for (std::size_t i = 0; i < size; ++i) {
      d.destination[i] = offset[static_cast<std::size_t>(d.block[i])] + slot[i];
    }
    return d;
  }

  struct P2GCritical {
    P2GDecomposition      decomposition;
    DihedralContext       context;
    CriticalDecomposition critical;
  };

  inline std::optional<P2GCritical> is_p2g_critical(Presentation const& p,
                                                    std::span<Letter const> w) {
    if (w.empty() || !is_freely_reduced(w)) {
      return std::nullopt;
    }
    auto gens = pseudo_generators(p, w);
    if (!gens) {
      return std::nullopt;
    }
    auto d = recognize(p, w, gens->first, gens->second);
    if (!d) {
      return std::nullopt;
    }
    auto ctx = DihedralContext::from(p, d->a, d->b);
    auto c   = critical_decompose(ctx, d->hat);
    if (!c) {
      return std::nullopt;
    }
    return P2GCritical{std::move(*d), ctx, std::move(*c)};
  }

  struct TauMove {
    Word   result;    // alpha rho tau(hat) beta
    Word   tau_hat;   // tau(hat)
    Letter produced;  // l[tau(hat)]
  };

  inline TauMove p2g_tau(P2GCritical const& c) {
    TauMove move;
    move.tau_hat  = tau(c.context, c.critical);
    move.produced = move.tau_hat.back();
    auto const& d = c.decomposition;
    move.result   = concat(concat(concat(d.alpha, d.rho1), d.rho2),
                         concat(move.tau_hat, d.beta));
    return move;
  }

  inline TauMove p2g_tau(Presentation const& p, std::span<Letter const> w) {
    auto c = is_p2g_critical(p, w);
    if (!c) {
      throw UsageError("not P2G critical");
    }
    return p2g_tau(*c);
  }

}  // namespace artin

#endif  // ARTIN_P2G_HPP_
