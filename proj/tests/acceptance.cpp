// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its time limit; everything is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cxkit/braid.hpp"
#include "cxkit/cli.hpp"
#include "cxkit/coxeter.hpp"
#include "cxkit/dl.hpp"
#include "cxkit/fconj.hpp"
#include "cxkit/reduction.hpp"
#include "cxkit/twist.hpp"
#include "oracles.hpp"

using namespace cxkit;

namespace {

struct Check {
  std::string id;
  std::string label;
  double limit_seconds;
  std::function<bool(std::string&)> body;
};

bool ac1_element_arithmetic(std::string& why) {
  for (const char* desc : {"A3", "B3", "G2"}) {
    CoxeterSystem sys = build_system(desc);
    std::size_t expected = desc == std::string("A3") ? 24 : (desc == std::string("B3") ? 48 : 12);
    auto elems = sys.enumerate_elements();
    if (elems.size() != expected) {
      why = std::string(desc) + ": |W| = " + std::to_string(elems.size());
      return false;
    }
    for (const auto& x : elems) {
      Word w = sys.canonical_reduced_word(x);
      if (sys.length(x) != static_cast<int>(w.size())) {
        why = std::string(desc) + ": inversion count disagrees with canonical word length";
        return false;
      }
      if (sys.element_from_word(w) != x) {
        why = std::string(desc) + ": canonical word does not round-trip";
        return false;
      }
    }
  }
  return true;
}

bool ac2_matsumoto(std::string& why) {
  for (const char* desc : {"A3", "B2"}) {
    CoxeterSystem sys = build_system(desc);
    auto elems = sys.enumerate_elements();
    std::vector<std::vector<Word>> words_of;
    for (const auto& x : elems) words_of.push_back(oracles::all_reduced_words(sys, x));

    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& words = words_of[i];
      BraidNormalForm nf0 = greedy_normal_form(sys, words.front());
      for (const auto& w : words) {
        if (!(greedy_normal_form(sys, w) == nf0)) {
          why = std::string(desc) + ": reduced words of one element with different normal forms";
          return false;
        }
      }
      for (const auto& from : words) {
        for (const auto& to : words) {
          auto path = matsumoto_path(sys, from, to);
          if (!path) {
            why = std::string(desc) + ": no braid-move path between reduced words";
            return false;
          }
          Word cur = from;
          for (const auto& mv : *path) cur = apply_braid_move(sys, cur, mv);
          if (cur != to) {
            why = std::string(desc) + ": braid-move path does not replay";
            return false;
          }
        }
      }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        for (const auto& wi : words_of[i]) {
          for (const auto& wj : words_of[j]) {
            if (braid_equal(sys, wi, wj)) {
              why = std::string(desc) + ": words of distinct elements compare braid-equal";
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

const std::vector<const char*> kReductionSystems = {"A2", "2A2", "B2", "2B2",
                                                    "G2", "2G2", "A3", "2A3"};

bool ac3_reduction_soundness(std::string& why) {
  for (const char* desc : kReductionSystems) {
    Twist tw = registry_twist(desc);
    const CoxeterSystem& sys = tw.system();
    for (int len = 0; len <= 6; ++len) {
      for (const auto& w : oracles::all_words(sys.rank(), len)) {
        ReductionResult r = reduce_word(tw, w);
        if (!is_reduced(sys, r.final_word)) {
          why = std::string(desc) + " word " + format_word(w) + ": final word not reduced";
          return false;
        }
        VerifyReport rep = verify_trace(tw, w, r);
        if (!rep.ok) {
          why = std::string(desc) + " word " + format_word(w) + ": " + rep.diagnostic;
          return false;
        }
        FConjClass cls = f_conjugacy_class(tw, r.x0);  // exhaustive closure oracle
        if (sys.length(r.x0) != cls.min_length) {
          why = std::string(desc) + " word " + format_word(w) + ": final element not minimal";
          return false;
        }
      }
    }
  }
  return true;
}

bool ac4_gkp_descent(std::string& why) {
  for (const char* desc : {"A3", "B3", "G2", "2A3"}) {
    Twist tw = registry_twist(desc);
    const CoxeterSystem& sys = tw.system();
    for (const auto& x : sys.enumerate_elements()) {
      auto [x0, path] = reduce_to_min(tw, x);
      if (path.start != x || !shift_path_valid(tw, path)) {
        why = std::string(desc) + ": invalid shift path";
        return false;
      }
      if (!path.steps.empty() && !(path.steps.back().result == x0)) {
        why = std::string(desc) + ": path does not end at the reported element";
        return false;
      }
      FConjClass cls = f_conjugacy_class(tw, x);
      if (sys.length(x0) != cls.min_length) {
        why = std::string(desc) + ": descent missed the class minimum";
        return false;
      }
    }
  }
  return true;
}

bool ac5_elliptic_connectivity(std::string& why) {
  for (const char* desc : kReductionSystems) {
    Twist tw = registry_twist(desc);
    const CoxeterSystem& sys = tw.system();
    for (const auto& cls : all_f_classes(tw)) {
      if (!cls.elliptic) continue;
      std::set<WeylElement> min_set(cls.minimal_elements.begin(), cls.minimal_elements.end());
      // directed reachability from each minimal element over
      // length-preserving conjugations
      for (const auto& start : cls.minimal_elements) {
        std::set<WeylElement> reached{start};
        std::vector<WeylElement> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (int s = 0; s < sys.rank(); ++s) {
            WeylElement v = f_conjugate_by_gen(tw, queue[head], s);
            if (min_set.count(v) && reached.insert(v).second) queue.push_back(v);
          }
        }
        if (reached.size() != min_set.size()) {
          why = std::string(desc) + ": shift graph on minimal elements not strongly connected";
          return false;
        }
      }
    }
  }
  return true;
}

bool ac6_type_a_form(std::string& why) {
  for (const char* desc : {"A2", "A3"}) {
    Twist tw = registry_twist(desc);
    for (int len = 0; len <= 6; ++len) {
      for (const auto& w : oracles::all_words(tw.system().rank(), len)) {
        ReductionResult r = reduce_word(tw, w);
        std::set<int> letters(r.final_word.begin(), r.final_word.end());
        if (letters.size() != r.final_word.size()) {
          why = std::string(desc) + " word " + format_word(w) + ": final word repeats a letter";
          return false;
        }
      }
    }
  }
  return true;
}

bool ac7_point_counts(std::string& why) {
  QPolynomial flags = component_count(registry_twist("A2"), Word{});
  int oracle = oracles::count_complete_flags_f2_dim3();
  if (oracle != 21 || flags.evaluate(2) != oracle) {
    why = "complete flag count over F_2: expected 21, polynomial gives " +
          std::to_string(flags.evaluate(2));
    return false;
  }
  QPolynomial unitary = component_count(registry_twist("2A2"), Word{});
  QPolynomial unitary_expected;
  unitary_expected.add_term(0, 1);
  unitary_expected.add_term(3, 1);
  if (!(unitary == unitary_expected)) {
    why = "2A2 count is " + unitary.to_string() + ", expected 1 + q^3";
    return false;
  }
  QPolynomial suzuki = component_count(registry_twist("2B2"), Word{});
  QPolynomial suzuki_expected;
  suzuki_expected.add_term(0, 1);
  suzuki_expected.add_term(4, 1);
  if (!(suzuki == suzuki_expected)) {
    why = "2B2 count is " + suzuki.to_string() + ", expected 1 + q^4";
    return false;
  }
  return true;
}

bool ac8_rational_smoothness(std::string& why) {
  CoxeterSystem a3 = build_system("A3");
  std::set<oracles::Perm> failing;
  for (const auto& x : a3.enumerate_elements()) {
    bool smooth = is_rationally_smooth(a3, x);
    oracles::Perm p = oracles::perm_from_word(a3.canonical_reduced_word(x), 4);
    bool pattern_free = !oracles::contains_pattern(p, {3, 4, 1, 2}) &&
                        !oracles::contains_pattern(p, {4, 2, 3, 1});
    if (smooth != pattern_free) {
      why = "palindromicity disagrees with the pattern oracle";
      return false;
    }
    if (!smooth) failing.insert(p);
  }
  if (failing != std::set<oracles::Perm>{{3, 4, 1, 2}, {4, 2, 3, 1}}) {
    why = "failing set is not exactly {3412, 4231} (" + std::to_string(failing.size()) +
          " failures)";
    return false;
  }
  return true;
}

bool ac9_determinism_roundtrip(std::string& why) {
  std::vector<std::pair<std::string, std::string>> corpus;
  for (const char* desc : kReductionSystems) {
    int rank = registry_twist(desc).system().rank();
    int taken = 0;
    for (int len = 0; len <= 3 && taken < 13; ++len) {
      for (const auto& w : oracles::all_words(rank, len)) {
        corpus.push_back({desc, format_word(w)});
        if (++taken == 13) break;
      }
    }
  }
  corpus.resize(100);

  for (const auto& [desc, word] : corpus) {
    std::vector<std::string> args = {"reduce", "--system", desc, "--word", word, "--json"};
    std::ostringstream out1, err1, out2, err2;
    std::istringstream in1, in2;
    int c1 = run(args, out1, err1, in1);
    int c2 = run(args, out2, err2, in2);
    if (c1 != 0 || c2 != 0) {
      why = desc + (" reduce failed on word '" + word + "'");
      return false;
    }
    if (out1.str() != out2.str()) {
      why = desc + (" output differs across runs for word '" + word + "'");
      return false;
    }
    std::ostringstream vout, verr;
    std::istringstream vin(out1.str());
    int vc = run({"verify"}, vout, verr, vin);
    if (vc != 0 || vout.str() != "verified\n") {
      why = desc + (" verify rejected reduce output for word '" + word + "': ") + vout.str();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {"AC1", "element arithmetic on W(A3), W(B3), W(G2)", 5.0, ac1_element_arithmetic},
      {"AC2", "Matsumoto/braid-monoid agreement on A3 and B2", 10.0, ac2_matsumoto},
      {"AC3", "reduction soundness for all words of length <= 6", 60.0, ac3_reduction_soundness},
      {"AC4", "descent to minimal length elements", 10.0, ac4_gkp_descent},
      {"AC5", "shift connectivity of elliptic minimal elements", 30.0, ac5_elliptic_connectivity},
      {"AC6", "type A final words have pairwise distinct letters", 60.0, ac6_type_a_form},
      {"AC7", "point counts: flags over F_2, 2A2, 2B2", 5.0, ac7_point_counts},
      {"AC8", "rational smoothness failures in W(A3) are 3412 and 4231", 5.0,
       ac8_rational_smoothness},
      {"AC9", "byte-identical reduce output and verified round-trip, 100 words", 60.0,
       ac9_determinism_roundtrip},
  };

  int failures = 0;
  for (auto& c : checks) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count() /
        1000.0;
    if (seconds > c.limit_seconds) {
      ok = false;
      why = "time limit exceeded";
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%-4s %-58s %s (%.2fs, limit %.0fs)", c.id.c_str(),
                  c.label.c_str(), ok ? "PASS" : "FAIL", seconds, c.limit_seconds);
    std::cout << line;
    if (!ok && !why.empty()) std::cout << "  -- " << why;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
