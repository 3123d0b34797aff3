#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cxkit/braid.hpp"
#include "cxkit/coxeter.hpp"
#include "cxkit/dl.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/fconj.hpp"
#include "cxkit/reduction.hpp"
#include "cxkit/report.hpp"
#include "cxkit/twist.hpp"
#include "cxkit/word.hpp"

namespace cxkit {

namespace cli_detail {

inline std::string display_word(const Word& w) { return w.empty() ? "e" : format_word(w); }

inline std::string format_orbit(const std::vector<int>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(block[i] + 1);
  }
  return s + "}";
}

inline std::string format_orbit_ids(const FOrbitSet& os, const std::set<int>& ids) {
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += " ";
    s += format_orbit(os.orbits[static_cast<std::size_t>(id)]);
  }
  return s.empty() ? "(none)" : s;
}

// Tuple payload: semicolon-separated words, each mapped to its element.
inline DLTuple parse_tuple(const CoxeterSystem& sys, const std::string& text) {
  DLTuple tuple;
  if (text.find_first_not_of(" \t") == std::string::npos) return tuple;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find(';', start);
    std::string part = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    tuple.push_back(sys.element_from_word(parse_word(part, sys.rank())));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return tuple;
}

// Splits one batch line into argv tokens, honoring double quotes.
inline std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  bool in_quotes = false;
  bool have_token = false;
  for (char c : line) {
    if (c == '"') {
      in_quotes = !in_quotes;
      have_token = true;
      continue;
    }
    if (!in_quotes && (c == ' ' || c == '\t')) {
      if (have_token) {
        tokens.push_back(cur);
        cur.clear();
        have_token = false;
      }
      continue;
    }
    cur += c;
    have_token = true;
  }
  if (in_quotes) throw InputError("unterminated quote in batch line");
  if (have_token) tokens.push_back(cur);
  return tokens;
}

struct MatrixText {
  static std::string render(const std::vector<std::vector<int>>& m) {
    std::string out;
    for (const auto& row : m) {
      out += " ";
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += " " + std::to_string(row[j]);
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace cli_detail

// Runs one CLI invocation. Returns 0 on success, 2 on input errors, 3 on
// guard violations. Output is byte-identical for identical invocations;
// timing appears only under --timing.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  using cli_detail::display_word;
  using cli_detail::format_orbit;
  using cli_detail::format_orbit_ids;

  CLI::App app{"twisted Coxeter group computations with verifiable reduction traces"};
  app.require_subcommand(1);

  struct {
    std::string system;
    std::string sigma;
    std::string word;
    std::string tuple;
    std::string file;
    long long at_q = 0;
    bool json = false;
    bool timing = false;
  } opt;

  auto add_common = [&](CLI::App* sub, bool needs_system) {
    if (needs_system) {
      sub->add_option("--system", opt.system, "type descriptor, e.g. A2, 2A3, 3D4, B2xA1")
          ->required();
      sub->add_option("--sigma", opt.sigma,
                      "explicit twist as a cycle list, e.g. \"(1 3)\" (untwisted descriptors only)");
    }
    sub->add_flag("--json", opt.json, "emit a JSON report");
    sub->add_flag("--timing", opt.timing, "include wall-clock timing in the output");
  };

  CLI::App* sub_system = app.add_subcommand("system", "print roots and matrices of a system");
  add_common(sub_system, true);

  CLI::App* sub_reduce =
      app.add_subcommand("reduce", "reduce a word to a minimal element with a certified trace");
  add_common(sub_reduce, true);
  sub_reduce->add_option("--word", opt.word, "word over the generators, e.g. \"1 2 1\"")->required();

  CLI::App* sub_classes = app.add_subcommand("classes", "list all F-conjugacy classes");
  add_common(sub_classes, true);

  CLI::App* sub_minlen =
      app.add_subcommand("minlen", "descend an element to minimal length in its F-class");
  add_common(sub_minlen, true);
  sub_minlen->add_option("--word", opt.word, "word giving the element")->required();

  CLI::App* sub_components =
      app.add_subcommand("components", "irreducible-component count polynomial");
  add_common(sub_components, true);
  sub_components->add_option("--word", opt.word, "word payload");
  sub_components->add_option("--tuple", opt.tuple, "tuple payload \"w1; w2; ...\"");
  sub_components->add_option("--at-q", opt.at_q, "also evaluate at an integer q");

  CLI::App* sub_support = app.add_subcommand("support", "F-support and irreducibility");
  add_common(sub_support, true);
  sub_support->add_option("--word", opt.word, "word payload");
  sub_support->add_option("--tuple", opt.tuple, "tuple payload \"w1; w2; ...\"");

  CLI::App* sub_smooth = app.add_subcommand("smooth", "smoothness certificate for a tuple");
  add_common(sub_smooth, true);
  sub_smooth->add_option("--word", opt.word, "single-factor payload");
  sub_smooth->add_option("--tuple", opt.tuple, "tuple payload \"w1; w2; ...\"");

  CLI::App* sub_nf = app.add_subcommand("braid-nf", "left-greedy normal form in the braid monoid");
  add_common(sub_nf, true);
  sub_nf->add_option("--word", opt.word, "word over the generators")->required();

  CLI::App* sub_verify = app.add_subcommand("verify", "re-check a serialized reduction trace");
  sub_verify->add_option("--file", opt.file, "JSON report produced by 'reduce' (default: stdin)");
  sub_verify->add_flag("--json", opt.json, "emit a JSON report");
  sub_verify->add_flag("--timing", opt.timing, "include wall-clock timing in the output");

  CLI::App* sub_batch = app.add_subcommand("batch", "run newline-delimited requests from a file");
  sub_batch->add_option("file", opt.file, "request file, one CLI line per request")->required();

  std::vector<const char*> argv;
  argv.push_back("cxkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  json request;
  json result;
  std::string text;

  try {
    if (sub_system->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      request = {{"subcommand", "system"}, {"system", opt.system}, {"sigma", opt.sigma}};
      result["type"] = sys.type();
      result["rank"] = sys.rank();
      result["order"] = sys.group_order();
      result["positive_root_count"] = sys.positive_roots().size();
      result["coxeter_matrix"] = sys.coxeter_matrix();
      result["cartan_matrix"] = sys.cartan_matrix();
      result["positive_roots"] = sys.positive_roots();
      json twj;
      json sigma_img = json::array();
      for (int i = 0; i < sys.rank(); ++i) sigma_img.push_back(tw.sigma(i) + 1);
      twj["sigma"] = std::move(sigma_img);
      twj["order"] = tw.order();
      twj["label"] = tw.label();
      twj["q_note"] = tw.q_note();
      twj["orbits"] = orbits_to_json(tw.orbits());
      result["twist"] = std::move(twj);

      std::ostringstream t;
      t << "system " << sys.type() << "\n";
      t << "rank " << sys.rank() << "\n";
      t << "|W| " << sys.group_order() << "\n";
      t << "positive roots " << sys.positive_roots().size() << "\n";
      t << "coxeter matrix:\n" << cli_detail::MatrixText::render(sys.coxeter_matrix());
      t << "cartan matrix:\n" << cli_detail::MatrixText::render(sys.cartan_matrix());
      t << "positive roots:\n";
      for (const auto& r : sys.positive_roots()) {
        t << " ";
        for (int c : r) t << " " << c;
        t << "\n";
      }
      if (tw.is_identity_twist()) {
        t << "twist: none\n";
      } else {
        t << "twist: " << (tw.label().empty() ? std::string("custom") : tw.label()) << " (order "
          << tw.order() << ")\n";
        t << "orbits:";
        for (const auto& block : tw.orbits().orbits) t << " " << format_orbit(block);
        t << "\n";
        if (!tw.q_note().empty()) t << "q-constraint: " << tw.q_note() << "\n";
      }
      text = t.str();
    } else if (sub_reduce->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      Word word = parse_word(opt.word, tw.system().rank());
      ReductionResult res = reduce_word(tw, word);
      request = {{"subcommand", "reduce"},
                 {"system", opt.system},
                 {"sigma", opt.sigma},
                 {"word", opt.word}};
      result = reduction_result_to_json(tw, res);

      std::ostringstream t;
      t << "input:  " << display_word(res.input) << "\n";
      t << "final:  " << display_word(res.final_word) << "\n";
      t << "x0:     " << display_word(tw.system().canonical_reduced_word(res.x0)) << "\n";
      t << "class:  min_length=" << res.class_summary.min_length
        << " size=" << res.class_summary.size
        << " elliptic=" << (res.class_summary.elliptic ? "yes" : "no")
        << " contains_input=" << (res.class_summary.contains_input ? "yes" : "no") << "\n";
      t << "trace:  " << res.trace.size() << (res.trace.size() == 1 ? " move" : " moves") << "\n";
      for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const ReductionMove& mv = res.trace[i];
        t << "  [" << (i + 1) << "] " << move_kind_name(mv);
        if (const auto* br = std::get_if<BraidRewrite>(&mv)) {
          t << " \"" << format_word(br->before) << "\" -> \"" << format_word(br->after) << "\"";
        } else if (const auto* sq = std::get_if<SquareContraction>(&mv)) {
          t << " word=\"" << format_word(sq->word) << "\" position=" << (sq->position + 1);
        } else if (const auto* sl = std::get_if<CyclicShiftLeft>(&mv)) {
          t << " s=" << (sl->s + 1);
        } else {
          t << " s=" << (std::get<CyclicShiftRight>(mv).s + 1);
        }
        t << "\n";
      }
      text = t.str();
    } else if (sub_classes->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      auto classes = all_f_classes(tw);
      request = {{"subcommand", "classes"}, {"system", opt.system}, {"sigma", opt.sigma}};
      json arr = json::array();
      for (const auto& cls : classes) {
        json c;
        c["representative"] = format_word(sys.canonical_reduced_word(cls.representative));
        c["min_length"] = cls.min_length;
        c["size"] = cls.elements.size();
        c["elliptic"] = cls.elliptic;
        json mins = json::array();
        for (const auto& m : cls.minimal_elements) {
          mins.push_back(format_word(sys.canonical_reduced_word(m)));
        }
        c["minimal_elements"] = std::move(mins);
        arr.push_back(std::move(c));
      }
      result["count"] = classes.size();
      result["classes"] = std::move(arr);

      std::ostringstream t;
      t << classes.size() << " F-conjugacy classes\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        t << "  [" << (i + 1) << "] repr="
          << display_word(sys.canonical_reduced_word(cls.representative))
          << " min_length=" << cls.min_length << " size=" << cls.elements.size()
          << " elliptic=" << (cls.elliptic ? "yes" : "no") << " minimal=[";
        for (std::size_t k = 0; k < cls.minimal_elements.size(); ++k) {
          if (k > 0) t << ", ";
          t << display_word(sys.canonical_reduced_word(cls.minimal_elements[k]));
        }
        t << "]\n";
      }
      text = t.str();
    } else if (sub_minlen->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      Word word = parse_word(opt.word, sys.rank());
      WeylElement x = sys.element_from_word(word);
      auto [x0, path] = reduce_to_min(tw, x);
      request = {{"subcommand", "minlen"},
                 {"system", opt.system},
                 {"sigma", opt.sigma},
                 {"word", opt.word}};
      result["element"] = format_word(sys.canonical_reduced_word(x));
      result["length"] = sys.length(x);
      result["x0"] = format_word(sys.canonical_reduced_word(x0));
      result["min_length"] = sys.length(x0);
      json steps = json::array();
      for (const auto& st : path.steps) {
        steps.push_back({{"s", st.s + 1},
                         {"result", format_word(sys.canonical_reduced_word(st.result))}});
      }
      result["path"] = std::move(steps);

      std::ostringstream t;
      t << "element: " << display_word(sys.canonical_reduced_word(x)) << " (length "
        << sys.length(x) << ")\n";
      t << "x0: " << display_word(sys.canonical_reduced_word(x0)) << " (length " << sys.length(x0)
        << ")\n";
      t << "path: " << path.steps.size() << (path.steps.size() == 1 ? " step" : " steps") << "\n";
      for (std::size_t i = 0; i < path.steps.size(); ++i) {
        t << "  [" << (i + 1) << "] s=" << (path.steps[i].s + 1) << " -> "
          << display_word(sys.canonical_reduced_word(path.steps[i].result)) << "\n";
      }
      text = t.str();
    } else if (sub_components->parsed() || sub_support->parsed()) {
      bool components_mode = sub_components->parsed();
      CLI::App* sub = components_mode ? sub_components : sub_support;
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      bool have_word = sub->count("--word") > 0;
      bool have_tuple = sub->count("--tuple") > 0;
      if (have_word == have_tuple) {
        throw InputError("provide exactly one of --word or --tuple");
      }
      std::set<int> support_ids;
      if (have_word) {
        support_ids = f_support(tw, parse_word(opt.word, sys.rank()));
      } else {
        support_ids = f_support(tw, cli_detail::parse_tuple(sys, opt.tuple));
      }
      FOrbitSet os = tw.orbits();
      request = {{"subcommand", components_mode ? "components" : "support"},
                 {"system", opt.system},
                 {"sigma", opt.sigma}};
      if (have_word) request["word"] = opt.word;
      else request["tuple"] = opt.tuple;

      json supp = json::array();
      for (int id : support_ids) {
        json b = json::array();
        for (int s : os.orbits[static_cast<std::size_t>(id)]) b.push_back(s + 1);
        supp.push_back(std::move(b));
      }

      std::ostringstream t;
      if (components_mode) {
        QPolynomial p = detail::component_count_from_support(tw, support_ids);
        result["support_orbits"] = std::move(supp);
        result["polynomial"] = qpoly_to_json(p);
        result["polynomial_text"] = p.to_string();
        t << "support orbits: " << format_orbit_ids(os, support_ids) << "\n";
        t << "component count: " << p.to_string() << "\n";
        if (sub->count("--at-q") > 0) {
          long long value = p.evaluate(opt.at_q);
          result["value_at_q"] = {{"q", opt.at_q}, {"value", value}};
          t << "value at q=" << opt.at_q << ": " << value << "\n";
        }
      } else {
        bool full = support_ids.size() == os.size();
        result["orbits"] = orbits_to_json(os);
        result["support_orbits"] = std::move(supp);
        result["full_support"] = full;
        result["irreducible"] = full;
        t << "orbits:";
        for (const auto& block : os.orbits) t << " " << format_orbit(block);
        t << "\n";
        t << "support: " << format_orbit_ids(os, support_ids) << "\n";
        t << "full support: " << (full ? "yes" : "no") << "\n";
        t << "irreducible: " << (full ? "yes" : "no") << "\n";
      }
      text = t.str();
    } else if (sub_smooth->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      bool have_word = sub_smooth->count("--word") > 0;
      bool have_tuple = sub_smooth->count("--tuple") > 0;
      if (have_word == have_tuple) {
        throw InputError("provide exactly one of --word or --tuple");
      }
      DLTuple tuple;
      if (have_word) {
        tuple.push_back(sys.element_from_word(parse_word(opt.word, sys.rank())));
      } else {
        tuple = cli_detail::parse_tuple(sys, opt.tuple);
      }
      SmoothnessVerdict v = smoothness_certificate(sys, tuple);
      request = {{"subcommand", "smooth"}, {"system", opt.system}, {"sigma", opt.sigma}};
      if (have_word) request["word"] = opt.word;
      else request["tuple"] = opt.tuple;
      result["verdict"] = to_string(v.kind);
      result["dimension"] = dl_dimension(sys, tuple);
      json facs = json::array();
      for (const auto& f : v.factors) {
        facs.push_back({{"word", format_word(f.word)},
                        {"dihedral_longest", f.dihedral_longest},
                        {"rationally_smooth", f.rationally_smooth},
                        {"note", f.note}});
      }
      result["factors"] = std::move(facs);
      result["caveat"] = v.caveat;

      std::ostringstream t;
      t << "verdict: " << to_string(v.kind) << "\n";
      t << "dimension: " << dl_dimension(sys, tuple) << "\n";
      t << "factors: " << v.factors.size() << "\n";
      for (std::size_t i = 0; i < v.factors.size(); ++i) {
        t << "  [" << (i + 1) << "] " << display_word(v.factors[i].word) << ": "
          << v.factors[i].note << "\n";
      }
      if (!v.caveat.empty()) t << "caveat: " << v.caveat << "\n";
      text = t.str();
    } else if (sub_nf->parsed()) {
      Twist tw = make_context(opt.system, opt.sigma);
      const CoxeterSystem& sys = tw.system();
      Word word = parse_word(opt.word, sys.rank());
      BraidNormalForm nf = greedy_normal_form(sys, word);
      request = {{"subcommand", "braid-nf"},
                 {"system", opt.system},
                 {"sigma", opt.sigma},
                 {"word", opt.word}};
      json facs = json::array();
      std::size_t letters = 0;
      for (const auto& f : nf.factors) {
        Word fw = sys.canonical_reduced_word(f);
        letters += fw.size();
        facs.push_back(format_word(fw));
      }
      result["factors"] = std::move(facs);
      result["letter_count"] = letters;

      std::ostringstream t;
      t << "factors: " << nf.factors.size() << "\n";
      for (std::size_t i = 0; i < nf.factors.size(); ++i) {
        t << "  [" << (i + 1) << "] " << format_word(sys.canonical_reduced_word(nf.factors[i]))
          << "\n";
      }
      t << "letters: " << letters << "\n";
      text = t.str();
    } else if (sub_verify->parsed()) {
      std::string payload;
      if (!opt.file.empty()) {
        std::ifstream f(opt.file);
        if (!f) throw InputError("cannot read file '" + opt.file + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        payload = buf.str();
      } else {
        std::ostringstream buf;
        buf << in.rdbuf();
        payload = buf.str();
      }
      json doc;
      try {
        doc = json::parse(payload);
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
      expect_keys(doc, "report", {"schema_version", "request", "result"},
                  {"line", "timing_ms"});
      if (get_string(doc, "schema_version", "report") != "1") {
        throw InputError("unsupported schema_version '" +
                         get_string(doc, "schema_version", "report") + "'");
      }
      const json& req = doc.at("request");
      expect_keys(req, "request", {"subcommand", "system", "sigma", "word"});
      if (get_string(req, "subcommand", "request") != "reduce") {
        throw InputError("verify expects a report produced by 'reduce'");
      }
      Twist tw = make_context(get_string(req, "system", "request"),
                              get_string(req, "sigma", "request"));
      Word input = parse_word(get_string(req, "word", "request"), tw.system().rank());
      ReductionResult res = reduction_result_from_json(tw, doc.at("result"));
      VerifyReport vr = verify_trace(tw, input, res);

      request = {{"subcommand", "verify"}, {"file", opt.file.empty() ? "-" : opt.file}};
      result["verified"] = vr.ok;
      result["diagnostic"] = vr.diagnostic;
      text = vr.ok ? "verified\n" : "verification failed: " + vr.diagnostic + "\n";
    } else if (sub_batch->parsed()) {
      std::ifstream f(opt.file);
      if (!f) {
        err << "error: cannot read file '" << opt.file << "'\n";
        return 2;
      }
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(f, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        json record;
        try {
          std::vector<std::string> tokens = cli_detail::tokenize_line(line);
          if (!tokens.empty() && tokens.front() == "batch") {
            throw InputError("batch requests cannot nest");
          }
          bool has_json = false;
          for (const auto& tk : tokens) {
            if (tk == "--json") has_json = true;
          }
          if (!has_json) tokens.push_back("--json");
          std::ostringstream sub_out;
          std::ostringstream sub_err;
          std::istringstream sub_in;
          int code = run(tokens, sub_out, sub_err, sub_in);
          if (code == 0) {
            json inner = json::parse(sub_out.str());
            record["schema_version"] = "1";
            record["line"] = lineno;
            for (auto it = inner.begin(); it != inner.end(); ++it) {
              if (it.key() != "schema_version") record[it.key()] = it.value();
            }
          } else {
            std::string msg = sub_err.str();
            if (std::size_t nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
            record = {{"schema_version", "1"}, {"line", lineno}, {"error", msg}};
          }
        } catch (const std::exception& e) {
          record = {{"schema_version", "1"}, {"line", lineno},
                    {"error", std::string("error: ") + e.what()}};
        }
        out << record.dump() << "\n";
      }
      return 0;
    }
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (opt.json) {
    json report = make_report(std::move(request), std::move(result));
    if (opt.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
    }
    out << report.dump(2) << "\n";
  } else {
    out << text;
    if (opt.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      out << "time: "
          << std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0
          << " ms\n";
    }
  }
  return 0;
}

}  // namespace cxkit
