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

#include <artin/presentation.hpp>

#include "support.hpp"

namespace artin {
  namespace {

    TEST(Presentation, ParsesFixture) {
      auto const& p = testing::p1();
      ASSERT_EQ(p.size(), 4u);
      EXPECT_EQ(p.exponent(p.generator("a"), p.generator("b")), Exponent(4));
      EXPECT_EQ(p.exponent(p.generator("c"), p.generator("b")), Exponent(5));
      EXPECT_TRUE(p.commutes("a", "c"));
      EXPECT_FALSE(p.commutes("a", "b"));
      EXPECT_TRUE(p.commutes("b", "b"));
    }

    TEST(Presentation, MissingPairsAreInfinite) {
      auto p = parse_presentation("generators x y z\nm x y 4\n");
      EXPECT_TRUE(p.exponent(p.generator("x"), p.generator("z")).is_infinite());
      EXPECT_EQ(p.exponent(p.generator("y"), p.generator("z")).to_string(), "inf");
      EXPECT_FALSE(p.commutes("x", "z"));
    }

    TEST(Presentation, ExplicitInfinity) {
      auto p = parse_presentation("generators x y\nm x y inf\n");
      EXPECT_TRUE(p.exponent(0, 1).is_infinite());
    }

    TEST(Presentation, CommentsAndBlankLines) {
      auto p = parse_presentation("# header\n\ngenerators a b # two\n\nm a b 6 \n");
      EXPECT_EQ(p.exponent(0, 1), Exponent(6));
    }

    TEST(Presentation, RejectsBraidRelation) {
      try {
        parse_presentation(testing::slurp(testing::data_path("braid.pres")));
        FAIL() << "braid presentation accepted";
      } catch (ParseError const& e) {
        EXPECT_NE(std::string(e.what()).find("not 3-free"), std::string::npos);
        EXPECT_EQ(e.line(), 2u);
      }
    }

    TEST(Presentation, Errors) {
      auto line_of = [](std::string const& text) -> std::size_t {
        try {
          parse_presentation(text);
        } catch (ParseError const& e) {
          return e.line();
        }
        return 0;
      };
      EXPECT_EQ(line_of("m a b 4\n"), 1u);
      EXPECT_EQ(line_of("generators a b\nm a c 4\n"), 2u);
      EXPECT_EQ(line_of("generators a b\nm a b 4\nm b a 5\n"), 3u);
      EXPECT_EQ(line_of("generators a b\nm a b 1\n"), 2u);
      EXPECT_EQ(line_of("generators a b\nm a b x\n"), 2u);
      EXPECT_EQ(line_of("generators a a\n"), 1u);
      EXPECT_EQ(line_of("generators a b\nm a a 4\n"), 2u);
      EXPECT_EQ(line_of("generators a b\nm a b\n"), 2u);
      EXPECT_EQ(line_of("generators 1a\n"), 1u);
    }

    TEST(Presentation, FormatRoundTrip) {
      auto const& p = testing::p2();
      EXPECT_EQ(parse_presentation(format_presentation(p)), p);
    }

    TEST(Presentation, RightAngled) {
      EXPECT_TRUE(testing::raag().is_right_angled());
      EXPECT_FALSE(testing::p1().is_right_angled());
    }

    TEST(Presentation, ConstructorValidates) {
      EXPECT_THROW(Presentation({"a", "b"}, {{"a", "b", Exponent(3)}}), UsageError);
      EXPECT_THROW(Presentation({"a", "b"}, {{"a", "a", Exponent(4)}}), UsageError);
      EXPECT_THROW(Presentation({"a", "b"}, {{"a", "c", Exponent(4)}}), UsageError);
      EXPECT_THROW(Presentation({"a", "a"}, {}), UsageError);
      EXPECT_THROW(testing::p1().exponent(0, 0), UsageError);
      EXPECT_THROW(testing::p1().generator("q"), UsageError);
    }

  }  // namespace
}  // namespace artin
