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


#ifndef ARTIN_TRACE_JSON_HPP_
#define ARTIN_TRACE_JSON_HPP_

#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "presentation.hpp"
#include "rrs.hpp"
#include "word.hpp"

namespace artin {

  inline nlohmann::json to_json(Presentation const& p, ReductionTrace const& t) {
    auto events = nlohmann::json::array();
    for (auto const& e : t.events) {
      switch (e.kind) {
        case TraceEvent::Kind::tau:
          events.push_back({{"kind", "tau"},
                            {"at", e.at},
                            {"len", e.before.size()},
                            {"before", format_word(p, e.before)},
                            {"after", format_word(p, e.after)}});
          break;
        case TraceEvent::Kind::swap:
          events.push_back({{"kind", "swap"}, {"at", e.at}});
          break;
        case TraceEvent::Kind::cancel:
          events.push_back({{"kind", "cancel"}, {"at", e.at}});
          break;
      }
    }
    return {{"events", std::move(events)}};
  }

  inline ReductionTrace trace_from_json(Presentation const&   p,
                                        nlohmann::json const& j) {
    ReductionTrace t;
    try {
      for (auto const& e : j.at("events")) {
        auto const  kind = e.at("kind").get<std::string>();
        std::size_t at   = e.at("at").get<std::size_t>();
        if (kind == "tau") {
          Word before = parse_word(p, e.at("before").get<std::string>());
          Word after  = parse_word(p, e.at("after").get<std::string>());
          if (e.contains("len") && e.at("len").get<std::size_t>() != before.size()) {
            throw ParseError("tau event length does not match its word");
          }
          t.events.push_back({TraceEvent::Kind::tau, at, std::move(before),
                              std::move(after)});
        } else if (kind == "swap") {
          t.events.push_back({TraceEvent::Kind::swap, at, {}, {}});
        } else if (kind == "cancel") {
          t.events.push_back({TraceEvent::Kind::cancel, at, {}, {}});
        } else {
          throw ParseError("unknown trace event kind '" + kind + "'");
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed trace: ") + e.what());
    }
    return t;
  }

}  // namespace artin

#endif  // ARTIN_TRACE_JSON_HPP_
