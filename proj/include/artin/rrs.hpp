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

// Rightward reducing sequences.
//
// A freely reduced word w admits the RRS u_1, ..., u_k, u_{k+1} when
//
//   w = mu w_1 ... w_k w_{k+1} gamma,    w_i != e for i <= k,
//   u_1 = w_1,   u_i = l[tau(hat u_{i-1})] beta_{i-1} w_i   (1 < i <= k+1),
//
// u_1 .. u_k are P2G critical, u_{k+1} = a v with a commuting with every
// letter of v, and a = f[gamma]^-1. Applying the k tau-moves from left to
// right and then moving a through v produces a free reduction, so the word
// shrinks by two letters without ever growing.
//
// The search enumerates start positions of w_1 from right to left. At a
// fixed start the chain is extended depth first: each link u_i is anchored
// by the letters carried over from the previous tau-move, so only the end of
// w_i is chosen. Every RRS handed out is re-checked against the definition.

#ifndef ARTIN_RRS_HPP_
#define ARTIN_RRS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "errors.hpp"
#include "p2g.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace artin {

  struct Span {
    std::size_t start  = 0;
    std::size_t length = 0;

    std::size_t end() const noexcept {
      return start + length;
    }

    friend bool operator==(Span, Span) = default;
  };

  // One tau-move of an RRS. Positions are stable across the sequence since
  // tau-moves preserve length.
  struct RrsStep {
    std::size_t at;  // position of f[u_i]
    Word        u;
    P2GCritical critical;
    TauMove     move;

    Word const& alpha() const noexcept {
      return critical.decomposition.alpha;
    }

    Word const& beta() const noexcept {
      return critical.decomposition.beta;
    }

    Generator z() const noexcept {
      return critical.decomposition.a;
    }

    Generator t() const noexcept {
      return critical.decomposition.b;
    }

    // l[tau(hat u_i)] beta_i, the prefix of u_{i+1}.
    Word carried() const {
      Word out{move.produced};
      out.insert(out.end(), beta().begin(), beta().end());
      return out;
    }
  };

  struct Rrs {
    std::size_t          head_len = 0;  // |mu|
    std::vector<Span>    chunks;        // w_1, ..., w_{k+1}
    std::size_t          tail_start = 0;  // position of f[gamma]
    std::vector<RrsStep> steps;           // u_1, ..., u_k
    Word                 final_link;      // u_{k+1} = a v
    std::size_t          final_at = 0;    // position of a

    std::size_t k() const noexcept {
      return steps.size();
    }

    Letter cancelled() const {
      return final_link.front();
    }
  };

  struct TraceEvent {
    enum class Kind { tau, swap, cancel };
    Kind        kind;
    std::size_t at;
    Word        before;  // tau only
    Word        after;   // tau only

    friend bool operator==(TraceEvent const&, TraceEvent const&) = default;
  };

  struct ReductionTrace {
    std::vector<TraceEvent> events;

    void append(ReductionTrace const& other) {
      events.insert(events.end(), other.events.begin(), other.events.end());
    }

    friend bool operator==(ReductionTrace const&, ReductionTrace const&)
        = default;
  };

  // Replays trace on source and returns the final word. Every event is
  // validated: tau events must rewrite a P2G critical factor to its tau
  // image, swaps must exchange commuting letters, cancellations must remove
  // an inverse pair.
  inline Word replay(Presentation const&     p,
                     std::span<Letter const> source,
                     ReductionTrace const&   trace) {
    Word w(source.begin(), source.end());
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
      auto const& ev   = trace.events[i];
      auto        fail = [&](std::string const& what) {
        throw ContractError("trace event " + std::to_string(i) + ": " + what);
      };
      switch (ev.kind) {
        case TraceEvent::Kind::tau: {
          if (ev.at + ev.before.size() > w.size()
              || !std::equal(ev.before.begin(), ev.before.end(),
                             w.begin() + ev.at)) {
            fail("tau source does not match the word");
          }
          if (ev.before.size() != ev.after.size()) {
            fail("tau changes length");
          }
          auto c = is_p2g_critical(p, ev.before);
          if (!c || p2g_tau(*c).result != ev.after) {
            fail("tau target is not the tau image of its source");
          }
          std::copy(ev.after.begin(), ev.after.end(), w.begin() + ev.at);
          break;
        }
        case TraceEvent::Kind::swap:
          if (ev.at + 1 >= w.size() || !p.commutes(w[ev.at], w[ev.at + 1])) {
            fail("swap of non-commuting letters");
          }
          std::swap(w[ev.at], w[ev.at + 1]);
          break;
        case TraceEvent::Kind::cancel:
          if (ev.at + 1 >= w.size() || w[ev.at + 1] != w[ev.at].inverse()) {
            fail("cancel of a non-inverse pair");
          }
          w.erase(w.begin() + ev.at, w.begin() + ev.at + 2);
          break;
      }
    }
    return w;
  }

  // Throws ContractError unless r is an RRS of w.
  inline void verify_rrs(Presentation const&     p,
                         std::span<Letter const> w,
                         Rrs const&              r) {
    auto fail = [](std::string const& what) {
      throw ContractError("invalid RRS: " + what);
    };
    if (r.chunks.size() != r.k() + 1) {
      fail("chunk count is not k + 1");
    }
    std::size_t pos = r.head_len;
    for (auto const& c : r.chunks) {
      if (c.start != pos) {
        fail("chunks are not contiguous");
      }
      pos = c.end();
    }
    if (pos != r.tail_start || r.tail_start >= w.size()) {
      fail("tail is empty or misplaced");
    }
    Word carried;
    for (std::size_t i = 0; i < r.k(); ++i) {
      auto const& step  = r.steps[i];
      auto const& chunk = r.chunks[i];
      if (chunk.length == 0) {
        fail("empty chunk before the final link");
      }
      Word u = concat(carried, w.subspan(chunk.start, chunk.length));
      if (u != step.u || step.at + carried.size() != chunk.start) {
        fail("link " + std::to_string(i + 1) + " is not l[tau] beta w_i");
      }
      auto c = is_p2g_critical(p, u);
      if (!c) {
        fail("link " + std::to_string(i + 1) + " is not P2G critical");
      }
      if (p2g_tau(*c).result != step.move.result) {
        fail("recorded tau-move differs");
      }
      carried = step.carried();
    }
    auto const& last_chunk = r.chunks.back();
    Word        link       = r.k() == 0
                                 ? Word(w.begin() + last_chunk.start,
                                        w.begin() + last_chunk.end())
                                 : concat(carried, w.subspan(last_chunk.start,
                                                             last_chunk.length));
    if (link.empty() || link != r.final_link) {
      fail("final link mismatch");
    }
    if (r.final_at + carried.size() != last_chunk.start
        && !(r.k() == 0 && r.final_at == last_chunk.start)) {
      fail("final letter misplaced");
    }
    Letter a = link.front();
    for (std::size_t i = 1; i < link.size(); ++i) {
      if (!p.commutes(a, link[i])) {
        fail("final letter does not commute with the rest of its link");
      }
    }
    if (w[r.tail_start] != a.inverse()) {
      fail("f[gamma] is not the inverse of the final letter");
    }
  }

  namespace detail {
    inline std::string state_key(std::size_t j, std::span<Letter const> c) {
      std::string key = std::to_string(j);
      for (Letter x : c) {
        key += ',';
        key += std::to_string(x.code());
      }
      return key;
    }

    class RrsSearch {
     public:
      RrsSearch(Presentation const& p, std::span<Letter const> w,
                std::size_t limit)
          : _p(p), _w(w), _limit(limit) {}

      // RRSs whose w_1 starts at s. With all == false the search stops at
      // the first one.
      std::vector<Rrs> from(std::size_t s, bool all) {
        _all  = all;
        _head = s;
        _out.clear();
        _chain.clear();
        extend(s, {});
        return std::move(_out);
      }

     private:
      bool done() const {
        return !_out.empty() && (!_all || _out.size() >= _limit);
      }

      void emit(std::size_t j, std::size_t tail, Word link,
                std::size_t final_at) {
        Rrs r;
        r.head_len = _head;
        r.steps    = _chain;
        r.chunks   = _chunks;
        r.chunks.push_back(Span{j, tail - j});
        r.tail_start = tail;
        r.final_link = std::move(link);
        r.final_at   = final_at;
        _out.push_back(std::move(r));
      }

      // j: position in w where the next chunk starts; carried: the letters
      // l[tau(hat u)] beta handed over by the previous link (empty before
      // the first link). Returns true when an RRS was found below.
      bool extend(std::size_t j, Word const& carried) {
        std::string key = state_key(j, carried);
        if (_dead.contains(key)) {
          return false;
        }
        std::size_t const before = _out.size();
        std::size_t const n      = _w.size();

        // Close the sequence: u_{k+1} = a v, then f[gamma] = a^-1.
        {
          Word        link(carried);
          std::size_t scan     = j;
          std::size_t final_at = j - carried.size();
          if (carried.empty()) {
            link.push_back(_w[j]);
            scan = j + 1;
          }
          Letter a  = link.front();
          bool   ok = true;
          for (std::size_t i = 1; ok && i < link.size(); ++i) {
            ok = _p.commutes(a, link[i]);
          }
          for (std::size_t e = scan; ok && e < n; ++e) {
            if (_w[e] == a.inverse()) {
              emit(j, e, link, final_at);
              break;
            }
            if (!_p.commutes(a, _w[e])) {
              break;
            }
            link.push_back(_w[e]);
          }
        }
        if (done()) {
          return true;
        }

        // Another tau-move: u = carried w[j, e).
        Word u(carried);
        std::optional<std::pair<Generator, Generator>> gens;
        for (std::size_t e = j + 1; e < n; ++e) {
          Letter x = _w[e - 1];
          u.push_back(x);
          if (u.size() == 1) {
            continue;
          }
          if (!gens) {
            gens = pseudo_generators(_p, u);
            if (!gens && !_p.commutes(u.front(), x)) {
              break;  // the first non-commuting letter fixes the pair
            }
            if (!gens) {
              continue;
            }
          }
          Generator a = gens->first;
          Generator b = gens->second;
          if (x.name() != a && x.name() != b && !_p.commutes(x.name(), a)
              && !_p.commutes(x.name(), b)) {
            break;  // x is trapped in every extension
          }
          if (x.name() != a && x.name() != b) {
            continue;  // u must end in a pseudo-generator
          }
          auto c = is_p2g_critical(_p, u);
          if (!c) {
            continue;
          }
          TauMove move = p2g_tau(*c);
          RrsStep step{j - carried.size(), u, std::move(*c), std::move(move)};
          Word next = step.carried();
          _chain.push_back(std::move(step));
          _chunks.push_back(Span{j, e - j});
          extend(e, next);
          _chain.pop_back();
          _chunks.pop_back();
          if (done()) {
            return true;
          }
        }
        if (_out.size() == before) {
          _dead.insert(std::move(key));
        }
        return _out.size() > before;
      }

      Presentation const&             _p;
      std::span<Letter const>         _w;
      std::size_t                     _limit;
      bool                            _all  = false;
      std::size_t                     _head = 0;
      std::vector<Rrs>                _out;
      std::vector<RrsStep>            _chain;
      std::vector<Span>               _chunks;
      std::unordered_set<std::string> _dead;
    };

    inline void require_freely_reduced(std::span<Letter const> w) {
      if (!is_freely_reduced(w)) {
        throw UsageError("word is not freely reduced");
      }
    }
  }  // namespace detail

  // Some RRS of w, preferring the rightmost start of w_1.
  inline std::optional<Rrs> find_any_rrs(Presentation const&     p,
                                         std::span<Letter const> w) {
    detail::require_freely_reduced(w);
    detail::RrsSearch search(p, w, 1);
    for (std::size_t s = w.size(); s-- > 0;) {
      auto found = search.from(s, false);
      if (!found.empty()) {
        verify_rrs(p, w, found.front());
        return std::move(found.front());
      }
    }
    return std::nullopt;
  }

  // Every RRS of w whose w_1 starts at s (at most limit of them).
  inline std::vector<Rrs> find_rrs_at(Presentation const&     p,
                                      std::span<Letter const> w,
                                      std::size_t             s,
                                      std::size_t             limit = 4096) {
    detail::require_freely_reduced(w);
    if (s >= w.size()) {
      return {};
    }
    detail::RrsSearch search(p, w, limit);
    auto              all = search.from(s, true);
    for (auto const& r : all) {
      verify_rrs(p, w, r);
    }
    return all;
  }

  // Letters following a in u_{k+1}.
  inline std::span<Letter const> final_tail(Rrs const& r) {
    return std::span<Letter const>(r.final_link).subspan(1);
  }

  // No tau-move leaves a free reduction behind it, and the name of f[gamma]
  // does not occur after a in the final link.
  inline bool introduces_no_free_reduction(std::span<Letter const> w,
                                           Rrs const&              r) {
    for (std::size_t i = 0; i < r.k(); ++i) {
      Span const& next = r.chunks[i + 1];
      if (next.length > 0
          && w[next.start] == r.steps[i].move.result.back().inverse()) {
        return false;
      }
    }
    return !appears_in(w[r.tail_start].name(), final_tail(r));
  }

  // Consecutive links whose alpha letters all commute with both
  // pseudo-generators share exactly one pseudo-generator.
  inline bool has_minimal_length(Presentation const& p, Rrs const& r) {
    for (std::size_t l = 1; l < r.k(); ++l) {
      auto const& prev = r.steps[l - 1];
      auto const& cur  = r.steps[l];
      bool        free = std::all_of(
          cur.alpha().begin(), cur.alpha().end(), [&](Letter x) {
            return p.commutes(x.name(), cur.z()) && p.commutes(x.name(), cur.t());
          });
      if (!free) {
        continue;
      }
      int shared = (prev.z() == cur.z() || prev.t() == cur.z())
                   + (prev.z() == cur.t() || prev.t() == cur.t());
      if (shared != 1) {
        return false;
      }
    }
    return true;
  }

  struct BetaStructureReport {
    bool beta_k_empty            = true;
    bool alpha_after_beta_empty  = true;
    bool beta_single_name_power  = true;

    bool ok() const noexcept {
      return beta_k_empty && alpha_after_beta_empty && beta_single_name_power;
    }
  };

  // beta_k = e; for i < k with beta_i != e: alpha_{i+1} = e and beta_i is a
  // power of one pseudo-generator of u_{i+1}.
  inline BetaStructureReport check_beta_structure(Rrs const& r) {
    BetaStructureReport report;
    if (r.k() == 0) {
      return report;
    }
    report.beta_k_empty = r.steps.back().beta().empty();
    for (std::size_t i = 0; i + 1 < r.k(); ++i) {
      auto const& beta = r.steps[i].beta();
      if (beta.empty()) {
        continue;
      }
      if (!r.steps[i + 1].alpha().empty()) {
        report.alpha_after_beta_empty = false;
      }
      Generator g   = beta.front().name();
      bool      one = std::all_of(beta.begin(), beta.end(),
                             [g](Letter x) { return x.name() == g; });
      bool pseudo   = g == r.steps[i + 1].z() || g == r.steps[i + 1].t();
      if (!one || !pseudo) {
        report.beta_single_name_power = false;
      }
    }
    return report;
  }

  struct OptimalSearchOptions {
    // Throw ContractError unless exactly one RRS at the rightmost start
    // satisfies every optimality condition.
    bool        verify = false;
    std::size_t limit  = 4096;
  };

  // The optimal RRS: rightmost start of w_1, no introduced free reduction,
  // and no pair of mergeable consecutive links. Among the RRSs at the
  // rightmost start the first satisfying all conditions is returned; if none
  // does (outside verification mode) the one with the fewest links wins.
  inline std::optional<Rrs> find_optimal_rrs(Presentation const&     p,
                                             std::span<Letter const> w,
                                             OptimalSearchOptions    opts = {}) {
    detail::require_freely_reduced(w);
    detail::RrsSearch search(p, w, opts.limit);
    for (std::size_t s = w.size(); s-- > 0;) {
      auto all = search.from(s, true);
      if (all.empty()) {
        continue;
      }
      std::vector<std::size_t> optimal;
      for (std::size_t i = 0; i < all.size(); ++i) {
        verify_rrs(p, w, all[i]);
        if (introduces_no_free_reduction(w, all[i])
            && has_minimal_length(p, all[i])) {
          optimal.push_back(i);
        }
      }
      if (opts.verify && optimal.size() != 1) {
        throw ContractError("expected a unique optimal RRS at start "
                            + std::to_string(s) + ", found "
                            + std::to_string(optimal.size()) + " among "
                            + std::to_string(all.size()));
      }
      if (!optimal.empty()) {
        return std::move(all[optimal.front()]);
      }
      auto best = std::min_element(
          all.begin(), all.end(),
          [](Rrs const& x, Rrs const& y) { return x.k() < y.k(); });
      return std::move(*best);
    }
    return std::nullopt;
  }

  // Performs the tau-moves of r in order, moves the final letter right
  // through v and cancels it against f[gamma]. The result is two letters
  // shorter than w.
  inline std::pair<Word, ReductionTrace>
  apply_rrs(Presentation const& p, std::span<Letter const> w, Rrs const& r) {
    Word           cur(w.begin(), w.end());
    ReductionTrace trace;
    for (std::size_t i = 0; i < r.k(); ++i) {
      auto const& step = r.steps[i];
      if (step.at + step.u.size() > cur.size()
          || !std::equal(step.u.begin(), step.u.end(), cur.begin() + step.at)) {
        throw ContractError("RRS link " + std::to_string(i + 1)
                            + " not found at its position during replay");
      }
      std::copy(step.move.result.begin(), step.move.result.end(),
                cur.begin() + step.at);
      trace.events.push_back(
          {TraceEvent::Kind::tau, step.at, step.u, step.move.result});
    }
    std::size_t pos = r.final_at;
    if (cur[pos] != r.cancelled()) {
      throw ContractError("final RRS letter not found at its position");
    }
    for (; pos + 1 < r.tail_start; ++pos) {
      if (!p.commutes(cur[pos], cur[pos + 1])) {
        throw ContractError("final RRS letter blocked by a non-commuting "
                            "letter");
      }
      std::swap(cur[pos], cur[pos + 1]);
      trace.events.push_back({TraceEvent::Kind::swap, pos, {}, {}});
    }
    if (cur[pos + 1] != cur[pos].inverse()) {
      throw ContractError("RRS does not end in a free reduction");
    }
    cur.erase(cur.begin() + pos, cur.begin() + pos + 2);
    trace.events.push_back({TraceEvent::Kind::cancel, pos, {}, {}});
    return {std::move(cur), std::move(trace)};
  }

}  // namespace artin

#endif  // ARTIN_RRS_HPP_
