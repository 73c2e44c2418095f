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

// Words in a dihedral Artin group A(m) = <x, y | _m(x,y) = _m(y,x)>.
//
// Notation used throughout:
//   _k(x,y)  alternating word of length k starting with x   (left_alt)
//   (x,y)_k  alternating word of length k ending with y     (right_alt)
//   p(w)     min(m, longest positive alternating factor)
//   n(w)     min(m, longest negative alternating factor)
//
// A freely reduced word is geodesic iff p + n <= m, and the unique geodesic
// of its element iff p + n < m. Critical words are the words with p + n = m
// of the shape
//
//   _p(x,y) eta (z^-1,t^-1)_n     or     _n(x^-1,y^-1) eta (z,t)_p
//
// (positive or negative words must contain exactly one alternating factor
// of length m, at the start or at the end). tau maps each critical word to
// another critical word of the same length and the same group element.

#ifndef ARTIN_DIHEDRAL_HPP_
#define ARTIN_DIHEDRAL_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace artin {

  class DihedralContext {
   public:
    DihedralContext(Generator x, Generator y, unsigned m)
        : _x(x), _y(y), _m(m) {
      if (x == y) {
        throw UsageError("dihedral context needs two distinct generators");
      }
      if (m < 2) {
        throw UsageError("dihedral exponent must be at least 2");
      }
      if (m == 3) {
        throw UsageError("not 3-free: dihedral exponent 3 is unsupported");
      }
    }

    static DihedralContext from(Presentation const& p, Generator x,
                                Generator y) {
      Exponent e = p.exponent(x, y);
      if (e.is_infinite()) {
        throw UsageError("dihedral context needs a finite exponent");
      }
      return DihedralContext(x, y, e.value());
    }

    Generator x() const noexcept {
      return _x;
    }

    Generator y() const noexcept {
      return _y;
    }

    unsigned m() const noexcept {
      return _m;
    }

    bool contains(Generator g) const noexcept {
      return g == _x || g == _y;
    }

    Generator other(Generator g) const {
      if (g == _x) {
        return _y;
      }
      if (g == _y) {
        return _x;
      }
      throw UsageError("generator is not in the dihedral context");
    }

    bool contains(std::span<Letter const> w) const noexcept {
      return std::all_of(w.begin(), w.end(),
                         [this](Letter l) { return contains(l.name()); });
    }

   private:
    Generator _x;
    Generator _y;
    unsigned  _m;
  };

  // _k(x,y)
  inline Word left_alt(Letter x, Letter y, std::size_t k) {
    Word w;
    w.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      w.push_back(i % 2 == 0 ? x : y);
    }
    return w;
  }

  // (x,y)_k
  inline Word right_alt(Letter x, Letter y, std::size_t k) {
    return k % 2 == 0 ? left_alt(x, y, k) : left_alt(y, x, k);
  }

  namespace detail {
    inline void require_two_generated(DihedralContext const& ctx,
                                      std::span<Letter const> w) {
      if (!ctx.contains(w)) {
        throw UsageError("word contains a generator outside the dihedral "
                         "context");
      }
    }

    // Longest contiguous factor whose letters all have sign s and whose
    // consecutive letters have different names.
    inline std::size_t longest_alternating(std::span<Letter const> w, int s) {
      std::size_t best = 0;
      std::size_t run  = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].sign() != s) {
          run = 0;
        } else if (run > 0 && w[i - 1].name() != w[i].name()) {
          ++run;
        } else {
          run = 1;
        }
        best = std::max(best, run);
      }
      return best;
    }

    // Length of the alternating sign-s prefix of w.
    inline std::size_t alternating_prefix(std::span<Letter const> w, int s) {
      std::size_t i = 0;
      while (i < w.size() && w[i].sign() == s
             && (i == 0 || w[i - 1].name() != w[i].name())) {
        ++i;
      }
      return i;
    }

    inline std::size_t alternating_suffix(std::span<Letter const> w, int s) {
      std::size_t i = 0;
      while (i < w.size() && w[w.size() - 1 - i].sign() == s
             && (i == 0
                 || w[w.size() - i].name() != w[w.size() - 1 - i].name())) {
        ++i;
      }
      return i;
    }

    // Start positions of the sign-s alternating factors of length k.
    inline std::vector<std::size_t>
    alternating_factors(std::span<Letter const> w, int s, std::size_t k) {
      std::vector<std::size_t> starts;
      std::size_t              run = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].sign() != s) {
          run = 0;
        } else if (run > 0 && w[i - 1].name() != w[i].name()) {
          ++run;
        } else {
          run = 1;
        }
        if (k > 0 && run >= k) {
          starts.push_back(i + 1 - k);
        }
      }
      return starts;
    }
  }  // namespace detail

  struct PNValues {
    std::size_t r1 = 0;  // longest positive alternating factor
    std::size_t r2 = 0;  // longest negative alternating factor
    std::size_t p  = 0;
    std::size_t n  = 0;

    friend bool operator==(PNValues const&, PNValues const&) = default;
  };

  inline PNValues pn(DihedralContext const& ctx, std::span<Letter const> w) {
    detail::require_two_generated(ctx, w);
    PNValues v;
    v.r1 = detail::longest_alternating(w, +1);
    v.r2 = detail::longest_alternating(w, -1);
    v.p  = std::min<std::size_t>(v.r1, ctx.m());
    v.n  = std::min<std::size_t>(v.r2, ctx.m());
    return v;
  }

  enum class Geodesity { unique_geodesic, geodesic, not_geodesic };

  // Precondition: w freely reduced.
  inline Geodesity is_geodesic_dihedral(DihedralContext const&  ctx,
                                        std::span<Letter const> w) {
    auto v = pn(ctx, w);
    if (v.p + v.n < ctx.m()) {
      return Geodesity::unique_geodesic;
    }
    return v.p + v.n == ctx.m() ? Geodesity::geodesic
                                : Geodesity::not_geodesic;
  }

  enum class CriticalForm {
    positive_prefix,  // _m(x,y) eta+
    positive_suffix,  // eta+ (z,t)_m
    negative_prefix,  // _m(x^-1,y^-1) eta-
    negative_suffix,  // eta- (z^-1,t^-1)_m
    unsigned_pn,      // _p(x,y) eta (z^-1,t^-1)_n
    unsigned_np       // _n(x^-1,y^-1) eta (z,t)_p
  };

  // Generator roles of a critical word. For the signed forms the roles that
  // the word itself does not fix are chosen so that tau applies: z differs
  // from the name of l[eta] for prefix forms, y differs from the name of
  // f[eta] for suffix forms. With eta empty, tau(_m(x,y)) = _m(y,x).
  struct CriticalDecomposition {
    CriticalForm form;
    std::size_t  p;
    std::size_t  n;
    Generator    x;
    Generator    y;
    Generator    z;
    Generator    t;
    Word         eta;
  };

  inline std::optional<CriticalDecomposition>
  critical_decompose(DihedralContext const& ctx, std::span<Letter const> w) {
    if (w.empty() || !ctx.contains(w) || !is_freely_reduced(w)) {
      return std::nullopt;
    }
    auto const        v = pn(ctx, w);
    std::size_t const m = ctx.m();
    if (v.p + v.n != m) {
      return std::nullopt;
    }
    CriticalDecomposition d;
    d.p = v.p;
    d.n = v.n;
    if (v.n == 0 || v.p == 0) {
      int  s      = v.n == 0 ? +1 : -1;
      auto starts = detail::alternating_factors(w, s, m);
      if (starts.size() != 1) {
        return std::nullopt;
      }
      if (starts[0] == 0) {
        d.form = s > 0 ? CriticalForm::positive_prefix
                       : CriticalForm::negative_prefix;
        d.x    = w.front().name();
        d.y    = ctx.other(d.x);
        d.eta  = subword(w, m, w.size());
        if (d.eta.empty()) {
          // (t,z)_m must read _m(y,x).
          d.t = m % 2 == 0 ? d.y : d.x;
          d.z = ctx.other(d.t);
        } else {
          d.t = d.eta.back().name();
          d.z = ctx.other(d.t);
        }
      } else if (starts[0] + m == w.size()) {
        d.form = s > 0 ? CriticalForm::positive_suffix
                       : CriticalForm::negative_suffix;
        d.t    = w.back().name();
        d.z    = ctx.other(d.t);
        d.eta  = subword(w, 0, starts[0]);
        d.x    = d.eta.front().name();
        d.y    = ctx.other(d.x);
      } else {
        return std::nullopt;
      }
      return d;
    }
    int         s     = w.front().sign();
    std::size_t front = s > 0 ? v.p : v.n;
    std::size_t back  = m - front;
    if (detail::alternating_prefix(w, s) < front
        || detail::alternating_suffix(w, -s) < back) {
      return std::nullopt;
    }
    d.form = s > 0 ? CriticalForm::unsigned_pn : CriticalForm::unsigned_np;
    d.x    = w.front().name();
    d.y    = ctx.other(d.x);
    d.t    = w.back().name();
    d.z    = ctx.other(d.t);
    d.eta  = subword(w, front, w.size() - back);
    return d;
  }

  // Rebuilds the critical word described by d.
  inline Word reassemble(DihedralContext const&       ctx,
                         CriticalDecomposition const& d) {
    auto const pos = [](Generator g) { return Letter::positive(g); };
    auto const neg = [](Generator g) { return Letter::negative(g); };
    std::size_t const m = ctx.m();
    switch (d.form) {
      case CriticalForm::positive_prefix:
        return concat(left_alt(pos(d.x), pos(d.y), m), d.eta);
      case CriticalForm::positive_suffix:
        return concat(d.eta, right_alt(pos(d.z), pos(d.t), m));
      case CriticalForm::negative_prefix:
        return concat(left_alt(neg(d.x), neg(d.y), m), d.eta);
      case CriticalForm::negative_suffix:
        return concat(d.eta, right_alt(neg(d.z), neg(d.t), m));
      case CriticalForm::unsigned_pn:
        return concat(concat(left_alt(pos(d.x), pos(d.y), d.p), d.eta),
                      right_alt(neg(d.z), neg(d.t), d.n));
      case CriticalForm::unsigned_np:
        return concat(concat(left_alt(neg(d.x), neg(d.y), d.n), d.eta),
                      right_alt(pos(d.z), pos(d.t), d.p));
    }
    return {};
  }

  // Identity for even m; swaps the two names for odd m. Signs are kept.
  inline Word delta(DihedralContext const& ctx, std::span<Letter const> w) {
    detail::require_two_generated(ctx, w);
    Word out(w.begin(), w.end());
    if (ctx.m() % 2 == 1) {
      for (auto& l : out) {
        l = Letter(ctx.other(l.name()), l.is_negative());
      }
    }
    return out;
  }

  inline Word tau(DihedralContext const& ctx, CriticalDecomposition const& d) {
    auto const pos = [](Generator g) { return Letter::positive(g); };
    auto const neg = [](Generator g) { return Letter::negative(g); };
    std::size_t const m   = ctx.m();
    Word const        eta = delta(ctx, d.eta);
    switch (d.form) {
      case CriticalForm::positive_prefix:
        return concat(eta, right_alt(pos(d.t), pos(d.z), m));
      case CriticalForm::positive_suffix:
        return concat(left_alt(pos(d.y), pos(d.x), m), eta);
      case CriticalForm::negative_prefix:
        return concat(eta, right_alt(neg(d.t), neg(d.z), m));
      case CriticalForm::negative_suffix:
        return concat(left_alt(neg(d.y), neg(d.x), m), eta);
      case CriticalForm::unsigned_pn:
        return concat(concat(left_alt(neg(d.y), neg(d.x), d.n), eta),
                      right_alt(pos(d.t), pos(d.z), d.p));
      case CriticalForm::unsigned_np:
        return concat(concat(left_alt(pos(d.y), pos(d.x), d.p), eta),
                      right_alt(neg(d.t), neg(d.z), d.n));
    }
    return {};
  }

  inline Word tau(DihedralContext const& ctx, std::span<Letter const> w) {
    auto d = critical_decompose(ctx, w);
    if (!d) {
      throw UsageError("not critical");
    }
    return tau(ctx, *d);
  }

  struct CriticalSuffix {
    std::size_t           start;
    CriticalDecomposition decomposition;
  };

  // For geodesic w with w.x not geodesic: the shortest critical suffix sigma
  // of w with l[tau(sigma)] = x^-1. Empty when w.x is geodesic.
  inline std::optional<CriticalSuffix>
  critical_suffix(DihedralContext const& ctx, std::span<Letter const> w,
                  Letter x) {
    Word wx = concat(w, std::span<Letter const>(&x, 1));
    detail::require_two_generated(ctx, wx);
    if (!is_freely_reduced(wx)
        || is_geodesic_dihedral(ctx, wx) != Geodesity::not_geodesic) {
      return std::nullopt;
    }
    for (std::size_t start = w.size(); start-- > 0;) {
      auto sigma = w.subspan(start);
      if (auto d = critical_decompose(ctx, sigma)) {
        if (tau(ctx, *d).back() == x.inverse()) {
          return CriticalSuffix{start, std::move(*d)};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace artin

#endif  // ARTIN_DIHEDRAL_HPP_
