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


// Command-line front end. run() takes the full argument vector and the
// three streams so that tests can drive it without a process.

#ifndef ARTIN_TOOLS_CLI_HPP_
#define ARTIN_TOOLS_CLI_HPP_

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <artin/artin.hpp>
#include <artin/trace_json.hpp>

namespace artin::cli {

  enum Exit : int { ok = 0, no = 1, error = 2 };

  struct Settings {
    std::string              command;
    std::string              presentation_path;
    std::vector<std::string> words;
    bool                     json      = false;
    bool                     verify    = false;
    std::size_t              slack     = 2;
    std::size_t              cap       = 100'000;
    std::size_t              node_cap  = 200'000;
    unsigned                 jobs      = 0;  // 0: one per hardware thread
  };

  // The result of processing one input word.
  struct Outcome {
    std::string out;
    std::string err;
    int         code = Exit::ok;
  };

  namespace detail {
    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    inline std::vector<std::string> read_lines(std::istream& in) {
      std::vector<std::string> lines;
      std::string              line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (line.find_first_not_of(" \t") != std::string::npos) {
          lines.push_back(line);
        }
      }
      return lines;
    }

    // Applies f to every index, possibly on several threads; results keep
    // input order.
    inline std::vector<Outcome>
    parallel_map(std::size_t n, unsigned jobs,
                 std::function<Outcome(std::size_t)> const& f) {
      std::vector<Outcome> results(n);
      auto guarded = [&](std::size_t i) {
        try {
          results[i] = f(i);
        } catch (std::exception const& e) {
          results[i] = {"", e.what(), Exit::error};
        }
      };
      if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
      }
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
      if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          guarded(i);
        }
        return results;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < n; i = next++) {
            guarded(i);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      return results;
    }

    inline std::string trace_text(Presentation const& p, ReductionTrace const& t) {
      std::ostringstream os;
      for (auto const& e : t.events) {
        switch (e.kind) {
          case TraceEvent::Kind::tau:
            os << "tau " << e.at << ": " << format_word(p, e.before) << " -> "
               << format_word(p, e.after) << '\n';
            break;
          case TraceEvent::Kind::swap:
            os << "swap " << e.at << '\n';
            break;
          case TraceEvent::Kind::cancel:
            os << "cancel " << e.at << '\n';
            break;
        }
      }
      return os.str();
    }

    inline Reduction checked_reduce(Presentation const& p, Word const& w,
                                    Settings const& s) {
      auto r = reduce(p, w, {.verify = s.verify});
      if (s.verify && w.size() <= 12) {
        oracle::BallSearchConfig cfg{.slack = 2, .node_cap = 20'000};
        auto ball = oracle::bfs_min_length(p, r.word, cfg,
                                           r.word.empty() ? 0 : r.word.size() - 1);
        if (ball.min_len < r.word.size()) {
          throw ContractError("oracle found a shorter word: "
                              + format_word(p, ball.witness));
        }
      }
      return r;
    }

    inline Outcome run_one(Presentation const& p, Settings const& s,
                           std::string const& text) {
      using nlohmann::json;
      Word    w = parse_word(p, text);
      Outcome o;
      if (s.command == "reduce" || s.command == "trace") {
        auto r = checked_reduce(p, w, s);
        if (s.json) {
          json j{{"input", format_word(p, w)},
                 {"result", format_word(p, r.word)},
                 {"length", r.word.size()},
                 {"trace", to_json(p, r.trace)}};
          o.out = j.dump() + '\n';
        } else if (s.command == "reduce") {
          o.out = format_word(p, r.word) + '\n';
        } else {
          o.out = trace_text(p, r.trace) + "result: " + format_word(p, r.word)
                  + '\n';
        }
      } else if (s.command == "geodesic") {
        bool g = is_geodesic(p, w);
        if (s.verify && !g && is_freely_reduced(w)) {
          find_optimal_rrs(p, w, {.verify = true});
        }
        o.out  = s.json ? json{{"word", format_word(p, w)}, {"geodesic", g}}.dump()
                              + '\n'
                        : std::string(g ? "geodesic\n" : "not geodesic\n");
        o.code = g ? Exit::ok : Exit::no;
      } else if (s.command == "closure") {
        if (!is_geodesic(p, w)) {
          throw UsageError("closure needs a geodesic word");
        }
        auto c = geodesic_closure(p, w, s.cap);
        if (s.json) {
          json members = json::array();
          for (auto const& m : c.geodesics.members) {
            members.push_back(format_word(p, m));
          }
          o.out = json{{"word", format_word(p, w)},
                       {"size", c.geodesics.members.size()},
                       {"overflow", c.overflow},
                       {"members", members}}
                      .dump()
                  + '\n';
        } else {
          for (auto const& m : c.geodesics.members) {
            o.out += format_word(p, m) + '\n';
          }
          if (c.overflow) {
            o.out += "overflow: stopped at " + std::to_string(s.cap) + " words\n";
          }
        }
      } else if (s.command == "oracle-check") {
        auto r    = reduce(p, w, {.verify = s.verify});
        auto ball = oracle::bfs_min_length(
            p, w, {.slack = s.slack, .node_cap = s.node_cap});
        bool sound     = r.word.size() <= ball.min_len;
        bool tight     = !ball.exhausted || r.word.size() == ball.min_len;
        bool witnessed = equal(p, ball.witness, w);
        bool good      = sound && tight && witnessed;
        if (s.json) {
          o.out = json{{"word", format_word(p, w)},
                       {"reduced", format_word(p, r.word)},
                       {"length", r.word.size()},
                       {"ball_min", ball.min_len},
                       {"witness", format_word(p, ball.witness)},
                       {"exhausted", ball.exhausted},
                       {"nodes", ball.nodes},
                       {"ok", good}}
                      .dump()
                  + '\n';
        } else {
          o.out = std::string(good ? "ok " : "violation ")
                  + std::to_string(r.word.size()) + ' '
                  + std::to_string(ball.min_len)
                  + (ball.exhausted ? " exhausted" : " capped") + '\n';
        }
        o.code = good ? Exit::ok : Exit::no;
      }
      return o;
    }

    inline int validate(Settings const& s, std::ostream& out) {
      std::string text = read_file(s.presentation_path);
      try {
        auto p = parse_presentation(text);
        if (s.json) {
          out << nlohmann::json{{"valid", true}, {"generators", p.size()}}.dump()
              << '\n';
        } else {
          out << "valid: " << p.size() << " generators\n";
        }
        return Exit::ok;
      } catch (ParseError const& e) {
        if (s.json) {
          out << nlohmann::json{{"valid", false}, {"error", e.what()}}.dump()
              << '\n';
        } else {
          out << "invalid: " << e.what() << '\n';
        }
        return Exit::no;
      }
    }

    inline int equal_command(Presentation const& p, Settings const& s,
                             std::ostream& out) {
      if (s.words.size() != 2) {
        throw UsageError("equal takes exactly two words");
      }
      Word u = parse_word(p, s.words[0]);
      Word v = parse_word(p, s.words[1]);
      bool e = equal(p, u, v);
      if (s.json) {
        out << nlohmann::json{{"left", format_word(p, u)},
                              {"right", format_word(p, v)},
                              {"equal", e}}
                   .dump()
            << '\n';
      } else {
        out << (e ? "equal\n" : "not equal\n");
      }
      return e ? Exit::ok : Exit::no;
    }
  }  // namespace detail

  inline int run(std::vector<std::string> args, std::istream& in,
                 std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Geodesics and the word problem in 3-free Artin groups",
                 "artin"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    auto add = [&](std::string const& name, std::string const& help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("presentation", s.presentation_path, "presentation file")
          ->required();
      sub->add_flag("--json", s.json, "machine-readable output");
      sub->add_flag("--verify", s.verify, "extra internal consistency checks");
      sub->callback([&s, name] { s.command = name; });
      return sub;
    };
    add("validate", "check a presentation");
    for (auto [name, help] : {
             std::pair{"reduce", "print a geodesic for each word"},
             std::pair{"geodesic", "decide whether each word is geodesic"},
             std::pair{"closure", "list the geodesics equal to a geodesic word"},
             std::pair{"trace", "print the rewriting steps of the reduction"},
             std::pair{"oracle-check", "compare reduction with a ball search"},
         }) {
      auto* sub = add(name, help);
      sub->add_option("words", s.words, "words; read from stdin when absent");
      sub->add_option("-j,--jobs", s.jobs, "worker threads");
      if (std::string(name) == "closure") {
        sub->add_option("--cap", s.cap, "maximum number of words");
      }
      if (std::string(name) == "oracle-check") {
        sub->add_option("--slack", s.slack, "extra length allowed in the ball");
        sub->add_option("--nodes", s.node_cap, "maximum words visited");
      }
    }
    add("equal", "decide whether two words are equal")
        ->add_option("words", s.words, "two words")
        ->expected(2)
        ->required();

    try {
      if (!args.empty()) {
        args.erase(args.begin());
      }
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return Exit::ok;
    } catch (CLI::CallForVersion const&) {
      out << app.version() << '\n';
      return Exit::ok;
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return Exit::ok;
      }
      err << "artin: " << e.what() << '\n';
      return Exit::error;
    }

    try {
      if (s.command == "validate") {
        return detail::validate(s, out);
      }
      Presentation p = parse_presentation(detail::read_file(s.presentation_path));
      if (s.command == "equal") {
        return detail::equal_command(p, s, out);
      }
      std::vector<std::string> words = s.words;
      bool const from_stdin          = words.empty();
      if (from_stdin) {
        words = detail::read_lines(in);
      }
      auto results = detail::parallel_map(words.size(), s.jobs, [&](std::size_t i) {
        return detail::run_one(p, s, words[i]);
      });
      int code = Exit::ok;
      for (std::size_t i = 0; i < results.size(); ++i) {
        out << results[i].out;
        if (!results[i].err.empty()) {
          err << "artin: " << (from_stdin ? "line " : "word ") << i + 1 << ": "
              << results[i].err << '\n';
        }
        code = std::max(code, results[i].code);
      }
      return code;
    } catch (std::exception const& e) {
      err << "artin: " << e.what() << '\n';
      return Exit::error;
    }
  }

}  // namespace artin::cli

#endif  // ARTIN_TOOLS_CLI_HPP_
