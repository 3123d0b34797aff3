#pragma once

#include <cctype>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cxkit/coxeter.hpp"
#include "cxkit/dl.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/fconj.hpp"
#include "cxkit/qpoly.hpp"
#include "cxkit/reduction.hpp"
#include "cxkit/twist.hpp"
#include "cxkit/word.hpp"

namespace cxkit {

using json = nlohmann::ordered_json;

// Traces are certificates: reject documents with fields we do not know.
inline void expect_keys(const json& obj, const std::string& ctx,
                        std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) throw InputError(ctx + ": expected an object");
  for (const char* k : required) {
    if (!obj.contains(k)) throw InputError(ctx + ": missing field '" + k + "'");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : required) {
      if (it.key() == k) known = true;
    }
    for (const char* k : optional) {
      if (it.key() == k) known = true;
    }
    if (!known) throw InputError(ctx + ": unknown field '" + it.key() + "'");
  }
}

inline std::string get_string(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.at(key).is_string()) throw InputError(ctx + ": field '" + key + "' must be a string");
  return obj.at(key).get<std::string>();
}

// Cycle notation for generator permutations: "(1 3)(2 4)", 1-based labels,
// unmentioned generators fixed.
inline std::vector<int> parse_cycles(const std::string& text, int rank) {
  std::vector<int> sigma(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::vector<bool> used(static_cast<std::size_t>(rank), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle list at '" + text.substr(i) + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("expected generator label in cycle list");
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > rank) {
        throw InputError("generator label " + std::to_string(v) + " out of range in cycle list");
      }
      if (used[static_cast<std::size_t>(v - 1)]) {
        throw InputError("generator " + std::to_string(v) + " repeated in cycle list");
      }
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      sigma[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return sigma;
}

// System plus twist from a CLI-style pair: a (possibly twisted) registry
// descriptor, or an untwisted descriptor with an explicit cycle list.
inline Twist make_context(const std::string& system_desc, const std::string& sigma_cycles) {
  Twist tw = registry_twist(system_desc);
  if (!sigma_cycles.empty()) {
    if (!tw.is_identity_twist()) {
      throw InputError("an explicit permutation cannot be combined with a twisted descriptor");
    }
    return build_twist(tw.system(), parse_cycles(sigma_cycles, tw.system().rank()));
  }
  return tw;
}

inline json orbits_to_json(const FOrbitSet& os) {
  json arr = json::array();
  for (const auto& block : os.orbits) {
    json b = json::array();
    for (int s : block) b.push_back(s + 1);
    arr.push_back(std::move(b));
  }
  return arr;
}

inline json qpoly_to_json(const QPolynomial& p) {
  json obj = json::object();
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) obj[std::to_string(k)] = p.coeff(k);
  }
  return obj;
}

inline json move_to_json(const ReductionMove& mv) {
  json j;
  j["kind"] = move_kind_name(mv);
  if (const auto* br = std::get_if<BraidRewrite>(&mv)) {
    j["before"] = format_word(br->before);
    j["after"] = format_word(br->after);
  } else if (const auto* sq = std::get_if<SquareContraction>(&mv)) {
    j["word"] = format_word(sq->word);
    j["position"] = sq->position + 1;  // 1-based in the serialized form
  } else if (const auto* sl = std::get_if<CyclicShiftLeft>(&mv)) {
    j["s"] = sl->s + 1;
  } else {
    j["s"] = std::get<CyclicShiftRight>(mv).s + 1;
  }
  j["paper_tag"] = move_paper_tag(mv);
  return j;
}

inline ReductionMove move_from_json(const json& j, int rank, const std::string& ctx) {
  std::string kind = get_string(j, "kind", ctx);
  if (kind == "braid-rewrite") {
    expect_keys(j, ctx, {"kind", "before", "after", "paper_tag"});
    return BraidRewrite{parse_word(get_string(j, "before", ctx), rank),
                        parse_word(get_string(j, "after", ctx), rank)};
  }
  if (kind == "square-contraction") {
    expect_keys(j, ctx, {"kind", "word", "position", "paper_tag"});
    if (!j.at("position").is_number_unsigned()) {
      throw InputError(ctx + ": 'position' must be a positive integer");
    }
    std::size_t pos = j.at("position").get<std::size_t>();
    if (pos < 1) throw InputError(ctx + ": 'position' must be a positive integer");
    return SquareContraction{parse_word(get_string(j, "word", ctx), rank), pos - 1};
  }
  if (kind == "cyclic-shift-left" || kind == "cyclic-shift-right") {
    expect_keys(j, ctx, {"kind", "s", "paper_tag"});
    if (!j.at("s").is_number_integer()) throw InputError(ctx + ": 's' must be an integer");
    int s = j.at("s").get<int>();
    if (s < 1 || s > rank) throw InputError(ctx + ": generator out of range");
    if (kind == "cyclic-shift-left") return CyclicShiftLeft{s - 1};
    return CyclicShiftRight{s - 1};
  }
  throw InputError(ctx + ": unknown move kind '" + kind + "'");
}

inline json reduction_result_to_json(const Twist& tw, const ReductionResult& res) {
  json j;
  j["input_word"] = format_word(res.input);
  j["final_word"] = format_word(res.final_word);
  j["x0"] = format_word(tw.system().canonical_reduced_word(res.x0));
  json cls;
  cls["min_length"] = res.class_summary.min_length;
  cls["size"] = res.class_summary.size;
  cls["elliptic"] = res.class_summary.elliptic;
  cls["contains_input"] = res.class_summary.contains_input;
  j["class"] = std::move(cls);
  json trace = json::array();
  for (const auto& mv : res.trace) trace.push_back(move_to_json(mv));
  j["trace"] = std::move(trace);
  return j;
}

inline ReductionResult reduction_result_from_json(const Twist& tw, const json& j) {
  const int rank = tw.system().rank();
  expect_keys(j, "result", {"input_word", "final_word", "x0", "class", "trace"});
  ReductionResult res;
  res.input = parse_word(get_string(j, "input_word", "result"), rank);
  res.final_word = parse_word(get_string(j, "final_word", "result"), rank);
  res.x0 = tw.system().element_from_word(parse_word(get_string(j, "x0", "result"), rank));
  const json& cls = j.at("class");
  expect_keys(cls, "result.class", {"min_length", "size", "elliptic", "contains_input"});
  if (!cls.at("min_length").is_number_integer() || !cls.at("size").is_number_unsigned() ||
      !cls.at("elliptic").is_boolean() || !cls.at("contains_input").is_boolean()) {
    throw InputError("result.class: wrong field types");
  }
  res.class_summary.min_length = cls.at("min_length").get<int>();
  res.class_summary.size = cls.at("size").get<std::size_t>();
  res.class_summary.elliptic = cls.at("elliptic").get<bool>();
  res.class_summary.contains_input = cls.at("contains_input").get<bool>();
  if (!j.at("trace").is_array()) throw InputError("result.trace must be an array");
  std::size_t idx = 0;
  for (const auto& mj : j.at("trace")) {
    ++idx;
    std::string ctx = "trace[" + std::to_string(idx) + "]";
    ReductionMove mv = move_from_json(mj, rank, ctx);
    if (get_string(mj, "paper_tag", ctx) != move_paper_tag(mv)) {
      throw InputError(ctx + ": paper_tag does not match the move kind");
    }
    res.trace.push_back(std::move(mv));
  }
  return res;
}

inline json make_report(json request, json result) {
  json report;
  report["schema_version"] = "1";
  report["request"] = std::move(request);
  report["result"] = std::move(result);
  return report;
}

}  // namespace cxkit
