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
#include <artin/reducer.hpp>

#include "support.hpp"

namespace artin {
  namespace {
    using testing::str;
    using testing::w;

    Presentation const& p() {
      return testing::p1();
    }

    TEST(Reducer, IsGeodesic) {
      EXPECT_TRUE(is_geodesic(p(), w(p(), "a b a b^2 a")));
      EXPECT_FALSE(is_geodesic(p(), w(p(), testing::kW18)));
      EXPECT_TRUE(is_geodesic(p(), Word{}));
      EXPECT_FALSE(is_geodesic(p(), w(p(), "a a^-1")));
      EXPECT_TRUE(is_geodesic(p(), w(p(), testing::kW18Reduced)));
    }

    TEST(Reducer, Reduce) {
      auto r = reduce(p(), w(p(), testing::kW18), {.verify = true});
      EXPECT_EQ(str(p(), r.word), testing::kW18Reduced);
      EXPECT_EQ(r.word.size(), 16u);
      EXPECT_EQ(replay(p(), w(p(), testing::kW18), r.trace), r.word);
      EXPECT_TRUE(reduce(p(), w(p(), "a a^-1")).word.empty());
      EXPECT_EQ(str(p(), reduce(p(), w(p(), "a b a b a^-1")).word), "b a b");
      EXPECT_EQ(str(p(), reduce(p(), w(p(), "a d a^-1")).word), "d");
    }

    TEST(Reducer, Callback) {
      std::size_t calls = 0;
      reduce(p(), w(p(), testing::kW18), {.on_rrs = [&](Word const& u, Rrs const& r) {
               ++calls;
               EXPECT_EQ(r.tail_start + 1, u.size());
             }});
      EXPECT_EQ(calls, 1u);
    }

    TEST(Reducer, Equal) {
      EXPECT_TRUE(equal(p(), w(p(), testing::kW18), w(p(), testing::kW18Reduced)));
      EXPECT_TRUE(equal(p(), w(p(), "a c"), w(p(), "c a")));
      EXPECT_FALSE(equal(p(), w(p(), "a b"), w(p(), "b a")));
      EXPECT_TRUE(equal(p(), w(p(), "b c b c b"), w(p(), "c b c b c")));
      EXPECT_FALSE(equal(p(), w(p(), "b c b c"), w(p(), "c b c b")));
    }

    TEST(Reducer, Closure) {
      auto c = geodesic_closure(p(), w(p(), "a b a b"));
      EXPECT_FALSE(c.overflow);
      ASSERT_EQ(c.geodesics.members.size(), 2u);
      EXPECT_TRUE(c.geodesics.contains(w(p(), "b a b a")));

      EXPECT_EQ(geodesic_closure(p(), w(p(), "a b")).geodesics.members.size(), 1u);
      auto e = geodesic_closure(p(), Word{});
      ASSERT_EQ(e.geodesics.members.size(), 1u);
      EXPECT_TRUE(e.geodesics.members[0].empty());

      auto o = geodesic_closure(p(), w(p(), "a c d b"), 2);
      EXPECT_TRUE(o.overflow);
      EXPECT_THROW(geodesic_closure(p(), w(p(), "a a^-1")), UsageError);

      auto edges = geodesic_closure(p(), w(p(), "a c"), 100, true);
      EXPECT_EQ(edges.geodesics.members.size(), 2u);
      EXPECT_FALSE(edges.geodesics.move_edges.empty());
    }

    TEST(Reducer, ClosureMembersAreEqualGeodesics) {
      Word const v = w(p(), testing::kW18Reduced);
      auto       c = geodesic_closure(p(), v);
      ASSERT_FALSE(c.overflow);
      EXPECT_GT(c.geodesics.members.size(), 1u);
      for (auto const& m : c.geodesics.members) {
        ASSERT_EQ(m.size(), v.size());
        ASSERT_TRUE(is_geodesic(p(), m)) << str(p(), m);
      }
      std::mt19937 rng(2);
      for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, c.geodesics.members.size() - 1);
        ASSERT_TRUE(equal(p(), v, c.geodesics.members[pick(rng)]));
      }
    }

    TEST(Reducer, Abelianized) {
      auto img = abelianized_image(p(), w(p(), "a b"));
      EXPECT_EQ(img.class_of[1], img.class_of[2]);
      EXPECT_NE(img.class_of[0], img.class_of[1]);
      EXPECT_EQ(img.sums[img.class_of[0]], 1);
      EXPECT_EQ(img.sums[img.class_of[1]], 1);
      EXPECT_EQ(img.sums[img.class_of[3]], 0);

      Letter a = Letter::positive(0);
      Letter b = Letter::positive(1);
      Word   r = concat(left_alt(a, b, 4), invert(left_alt(b, a, 4)));
      auto   z = abelianized_image(p(), r);
      EXPECT_TRUE(std::all_of(z.sums.begin(), z.sums.end(), [](long long s) { return s == 0; }));

      Word v = w(p(), testing::kW18);
      EXPECT_EQ(abelianized_image(p(), v), abelianized_image(p(), reduce(p(), v).word));
    }

    TEST(Reducer, NeverLengthens) {
      std::mt19937 rng(23);
      for (int i = 0; i < 300; ++i) {
        auto pres = testing::random_presentation(rng);
        Word v    = testing::random_word(rng, pres.size(), 12);
        auto r    = reduce(pres, v);
        ASSERT_EQ(replay(pres, v, r.trace), r.word);
        Word cur = v;
        // Every trace event keeps the word within its starting length.
        std::size_t longest = 0;
        ReductionTrace prefix;
        for (auto const& e : r.trace.events) {
          prefix.events.push_back(e);
          longest = std::max(longest, replay(pres, v, prefix).size());
        }
        ASSERT_LE(longest, v.size());
        ASSERT_EQ(abelianized_image(pres, v), abelianized_image(pres, r.word));
        ASSERT_TRUE(is_geodesic(pres, r.word)) << str(pres, v);
      }
    }

    TEST(Reducer, MatchesCommutationOracle) {
      std::mt19937 rng(29);
      auto const&  q = testing::raag();
      for (int i = 0; i < 500; ++i) {
        Word v = testing::random_word(rng, q.size(), 14);
        ASSERT_EQ(reduce(q, v).word.size(), oracle::commutation_oracle(q, v).size())
            << str(q, v);
      }
    }

    // Exhaustive agreement with the dihedral criterion on 2-generated words.
    TEST(Reducer, DihedralAgreement) {
      for (unsigned m : {4u, 5u, 6u}) {
        auto pres = parse_presentation("generators a b\nm a b " + std::to_string(m)
                                       + "\n");
        for (std::size_t len = 0; len <= 8; ++len) {
          testing::for_each_word({0, 1}, len, false, [&](Word const& v) {
            ASSERT_EQ(is_geodesic(pres, v), oracle::dihedral_oracle(pres, v))
                << str(pres, v);
          });
        }
      }
    }

  }  // namespace
}  // namespace artin
