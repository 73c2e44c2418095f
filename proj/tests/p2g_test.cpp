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


#include <gtest/gtest.h>

#include <algorithm>

#include <artin/oracle.hpp>
#include <artin/p2g.hpp>

#include "support.hpp"

namespace artin {
  namespace {
    using testing::str;
    using testing::w;

    TEST(P2G, PseudoGenerators) {
      auto const& p = testing::p1();
      auto        g = pseudo_generators(p, w(p, "a c b a b^2 c d a"));
      ASSERT_TRUE(g);
      EXPECT_EQ(*g, std::make_pair(Generator{0}, Generator{1}));
      EXPECT_FALSE(pseudo_generators(p, w(p, "a d a")));
      auto h = pseudo_generators(p, w(p, "b c b^-1"));
      ASSERT_TRUE(h);
      EXPECT_EQ(*h, std::make_pair(Generator{1}, Generator{2}));
      EXPECT_FALSE(pseudo_generators(p, Word{}));
      // Infinite exponent between the first letter and the blocker.
      auto const& q = testing::p2();
      EXPECT_FALSE(pseudo_generators(q, w(q, "x y")));
    }

    TEST(P2G, FactorizationExample) {
      auto const& p = testing::p2();
      auto        d = recognize(p, w(p, "a x z a x b z a b y b^-1"), 0, 1);
      ASSERT_TRUE(d);
      EXPECT_EQ(d->wp_end, 5u);
      EXPECT_EQ(d->wq_end, 8u);
    }

    TEST(P2G, DecompositionExample) {
      auto const& p = testing::p2();
      Word const  v = w(p, "a x z a x b z a b y z b");
      auto        d = recognize(p, v, 0, 1);
      ASSERT_TRUE(d);
      EXPECT_EQ(str(p, d->alpha), "x z x");
      EXPECT_EQ(str(p, d->rho()), "z^2");
      EXPECT_EQ(str(p, d->rho1), "z");
      EXPECT_EQ(str(p, d->rho2), "z");
      EXPECT_EQ(str(p, d->hat), "a^2 b a b^2");
      EXPECT_EQ(str(p, d->beta), "y");
    }

    TEST(P2G, WalkthroughFirstLink) {
      auto const& p = testing::p1();
      auto        d = recognize(p, w(p, "a c b a b^2 c d a"), 0, 1);
      ASSERT_TRUE(d);
      EXPECT_EQ(str(p, d->alpha), "c");
      EXPECT_EQ(str(p, d->rho()), "d");
      EXPECT_EQ(str(p, d->hat), "a b a b^2 a");
      EXPECT_EQ(str(p, d->beta), "c");
    }

    TEST(P2G, RecognizeRejects) {
      auto const& p = testing::p1();
      // c separates the two pseudo-generators without commuting with b.
      EXPECT_FALSE(recognize(p, w(p, "a b c b a"), 0, 1));
      EXPECT_FALSE(recognize(p, w(p, "a c"), 0, 1));
      EXPECT_FALSE(recognize(p, w(p, "a d a"), 0, 1));
      EXPECT_FALSE(recognize(p, w(p, "a b"), 0, 2));
      EXPECT_FALSE(recognize(p, w(p, "a b"), 0, 3));
    }

    TEST(P2G, Critical) {
      auto const& p = testing::p1();
      auto        c = is_p2g_critical(p, w(p, "a c b a b^2 c d a"));
      ASSERT_TRUE(c);
      EXPECT_EQ(str(p, c->decomposition.hat), "a b a b^2 a");
      EXPECT_EQ(c->critical.p, 4u);
      EXPECT_EQ(c->critical.n, 0u);
      EXPECT_FALSE(is_p2g_critical(p, w(p, "a d a^-1")));

      auto const& q = testing::p2();
      Word const  v = w(q, "a x a b z a b a x a");
      auto        d = recognize(q, v, 0, 1);
      ASSERT_TRUE(d);
      EXPECT_EQ(str(q, d->hat), "a^2 b a b a^2");
      EXPECT_FALSE(is_p2g_critical(q, v));
    }

    TEST(P2G, TauMove) {
      auto const& p = testing::p1();
      auto        m = p2g_tau(p, w(p, "a c b a b^2 c d a"));
      EXPECT_EQ(str(p, m.result), "c d b a^2 b a b c");
      EXPECT_EQ(m.produced, Letter::positive(1));

      auto n = p2g_tau(p, w(p, "a b a b^2 a"));
      EXPECT_EQ(str(p, n.result), "b a^2 b a b");
      EXPECT_EQ(n.produced, Letter::positive(1));

      // The hat a^2 b a b^2 holds its only alternating factor of length 4
      // strictly inside, so it is not critical.
      auto const& q = testing::p2();
      EXPECT_FALSE(critical_decompose(DihedralContext(0, 1, 4), w(q, "a^2 b a b^2")));
      EXPECT_THROW(p2g_tau(q, w(q, "a x z a x b z a b y z b")), UsageError);

      auto o = p2g_tau(q, w(q, "a x b a z b^2 a"));
      EXPECT_EQ(str(q, o.result), "x z b a^2 b a b");
      EXPECT_EQ(o.produced, Letter::positive(1));
      EXPECT_THROW(p2g_tau(p, w(p, "a b")), UsageError);
    }

    void check_decomposition(Presentation const& p, Word const& v,
                             P2GDecomposition const& d) {
      Word const assembled = d.assembled();
      ASSERT_EQ(assembled.size(), v.size());
      std::vector<bool> hit(v.size(), false);
      for (std::size_t i = 0; i < v.size(); ++i) {
        ASSERT_LT(d.destination[i], v.size());
        ASSERT_FALSE(hit[d.destination[i]]);
        hit[d.destination[i]] = true;
        ASSERT_EQ(assembled[d.destination[i]], v[i]);
      }
      Word hat;
      std::copy_if(v.begin(), v.end(), std::back_inserter(hat), [&](Letter x) {
        return x.name() == d.a || x.name() == d.b;
      });
      ASSERT_EQ(hat, d.hat);
      for (std::size_t i = 0; i < d.wp_end; ++i) {
        ASSERT_TRUE(p.commutes(v[i], v.front()));
      }
      for (std::size_t i = d.wq_end; i < v.size(); ++i) {
        ASSERT_TRUE(p.commutes(v[i], v.back()));
      }
    }

    // Enumerates freely reduced words over P1 up to length 6.
    TEST(P2G, EnumeratedInvariants) {
      auto const& p        = testing::p1();
      std::size_t critical = 0;
      for (std::size_t len = 2; len <= 6; ++len) {
        testing::for_each_word({0, 1, 2, 3}, len, true, [&](Word const& v) {
          auto g = pseudo_generators(p, v);
          if (!g) {
            return;
          }
          auto d = recognize(p, v, g->first, g->second);
          if (!d) {
            return;
          }
          check_decomposition(p, v, *d);
          auto c = is_p2g_critical(p, v);
          if (!c) {
            return;
          }
          ++critical;
          auto m = p2g_tau(*c);
          ASSERT_EQ(m.result.size(), v.size());
          ASSERT_NE(m.produced.name(), c->decomposition.hat.back().name());
          ASSERT_NE(m.tau_hat.front().name(), c->decomposition.hat.front().name());
        });
      }
      EXPECT_GT(critical, 100u);
    }

    TEST(P2G, AssembledIsEquivalent) {
      auto const&  p = testing::p2();
      std::mt19937 rng(11);
      int          checked = 0;
      for (int i = 0; i < 4000 && checked < 60; ++i) {
        Word v = testing::random_word(rng, p.size(), 9, true);
        auto g = pseudo_generators(p, v);
        if (!g) {
          continue;
        }
        auto d = recognize(p, v, g->first, g->second);
        if (!d || d->assembled() == v) {
          continue;
        }
        ++checked;
        auto e = oracle::bfs_equivalent(p, v, d->assembled(), {.slack = 0});
        ASSERT_TRUE(e.equivalent) << str(p, v);
        if (auto c = is_p2g_critical(p, v)) {
          auto f = oracle::bfs_equivalent(p, v, p2g_tau(*c).result,
                                          {.slack = 2});
          ASSERT_TRUE(f.equivalent) << str(p, v);
        }
      }
      EXPECT_GT(checked, 10);
    }

    // Prefix and suffix coherence of tau on P2G critical words.
    TEST(P2G, PrefixSuffixCoherence) {
      for (Presentation const* p : {&testing::p1(), &testing::p2()}) {
        std::mt19937 rng(5);
        std::size_t  prefixes = 0;
        std::size_t  suffixes = 0;
        for (int i = 0; i < 200000; ++i) {
          Word v = testing::random_word(rng, p->size(), 10, true);
          auto c = is_p2g_critical(*p, v);
          if (!c) {
            continue;
          }
          auto const  m = p2g_tau(*c);
          auto const& d = c->decomposition;
          for (std::size_t len = 2; len < v.size(); ++len) {
            Word pre(v.begin(), v.begin() + len);
            auto cp = is_p2g_critical(*p, pre);
            if (cp && cp->decomposition.a == d.a && cp->decomposition.b == d.b) {
              ++prefixes;
              ASSERT_EQ(p2g_tau(*cp).tau_hat.front(), m.tau_hat.front())
                  << str(*p, v) << " / " << str(*p, pre);
            }
            Word suf(v.end() - len, v.end());
            auto d2 = recognize(*p, suf, d.a, d.b);
            auto cs = d2 ? is_p2g_critical(*p, suf) : std::nullopt;
            if (cs && cs->decomposition.a == d.a && cs->decomposition.b == d.b) {
              ++suffixes;
              ASSERT_EQ(cs->decomposition.beta, d.beta) << str(*p, v);
              ASSERT_EQ(p2g_tau(*cs).produced, m.produced) << str(*p, v);
            }
          }
        }
        EXPECT_GT(prefixes, 0u);
        EXPECT_GT(suffixes, 0u);
      }
    }

  }  // namespace
}  // namespace artin
