#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cxkit/coxeter.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/twist.hpp"

namespace cxkit {

inline constexpr std::size_t kDefaultShiftBudget = 100'000;

// x -> s x F(s)
inline WeylElement f_conjugate_by_gen(const Twist& tw, const WeylElement& x, int s) {
  const CoxeterSystem& sys = tw.system();
  return sys.mult_gen_right(sys.mult_gen_left(s, x), tw.sigma(s));
}

// One F-conjugacy class; elements sorted by (length, canonical word).
struct FConjClass {
  std::vector<WeylElement> elements;
  std::vector<WeylElement> minimal_elements;
  int min_length = 0;
  bool elliptic = false;
  WeylElement representative;  // lexicographically smallest canonical word
};

// A witness for ->_F: successive generator conjugations with
// non-increasing length.
struct ShiftStep {
  int s = 0;
  WeylElement result;
};

struct ShiftPath {
  WeylElement start;
  std::vector<ShiftStep> steps;
};

inline bool shift_path_valid(const Twist& tw, const ShiftPath& path) {
  const CoxeterSystem& sys = tw.system();
  WeylElement cur = path.start;
  int len = sys.length(cur);
  for (const auto& step : path.steps) {
    WeylElement next = f_conjugate_by_gen(tw, cur, step.s);
    int nlen = sys.length(next);
    if (next != step.result || nlen > len) return false;
    cur = next;
    len = nlen;
  }
  return true;
}

// No element of the class lies in a proper F-stable standard parabolic;
// equivalently every element has full F-support.
inline bool is_elliptic(const Twist& tw, const FConjClass& cls) {
  const CoxeterSystem& sys = tw.system();
  FOrbitSet orbits = tw.orbits();
  for (const auto& x : cls.elements) {
    std::set<int> covered;
    for (int s : sys.support(x)) covered.insert(orbits.orbit_of[static_cast<std::size_t>(s)]);
    if (covered.size() != orbits.size()) return false;
  }
  return true;
}

// Closure of {x} under all single-generator F-conjugations. These
// generate F-conjugacy, so the result is the full class.
inline FConjClass f_conjugacy_class(const Twist& tw, const WeylElement& x) {
  const CoxeterSystem& sys = tw.system();
  const std::uint64_t guard = guard_limit();
  std::set<WeylElement> seen{x};
  std::vector<WeylElement> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s = 0; s < sys.rank(); ++s) {
      WeylElement y = f_conjugate_by_gen(tw, queue[head], s);
      if (seen.insert(y).second) {
        if (seen.size() > guard) {
          throw GuardExceeded("F-conjugacy class exceeds guard");
        }
        queue.push_back(y);
      }
    }
  }

  FConjClass cls;
  cls.elements = sys.sort_elements(std::vector<WeylElement>(seen.begin(), seen.end()));
  cls.min_length = sys.length(cls.elements.front());
  for (const auto& y : cls.elements) {
    if (sys.length(y) == cls.min_length) cls.minimal_elements.push_back(y);
  }
  cls.representative = cls.elements.front();
  Word best = sys.canonical_reduced_word(cls.representative);
  for (const auto& y : cls.elements) {
    Word w = sys.canonical_reduced_word(y);
    if (w < best) {
      best = std::move(w);
      cls.representative = y;
    }
  }
  cls.elliptic = is_elliptic(tw, cls);
  return cls;
}

// Partition of W into F-conjugacy classes, ordered by
// (min_length, representative canonical word).
inline std::vector<FConjClass> all_f_classes(const Twist& tw) {
  const CoxeterSystem& sys = tw.system();
  std::vector<FConjClass> classes;
  std::set<WeylElement> done;
  for (const auto& x : sys.enumerate_elements()) {
    if (done.count(x)) continue;
    FConjClass cls = f_conjugacy_class(tw, x);
    for (const auto& y : cls.elements) done.insert(y);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&](const FConjClass& a, const FConjClass& b) {
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    return sys.canonical_reduced_word(a.representative) <
           sys.canonical_reduced_word(b.representative);
  });
  return classes;
}

inline const std::vector<WeylElement>& min_length_elements(const FConjClass& cls) {
  return cls.minimal_elements;
}

enum class ShiftSearchStatus { Found, Absent, BudgetExceeded };

struct ShiftSearchResult {
  ShiftSearchStatus status = ShiftSearchStatus::Absent;
  std::optional<ShiftPath> path;
};

// Search for a ->_F path from x to y: BFS over generator conjugations
// with non-increasing length, layers scanned in canonical-word order.
// Absent means y is not ->_F-reachable; BudgetExceeded is reported
// separately.
inline ShiftSearchResult shifts_to(const Twist& tw, const WeylElement& x, const WeylElement& y,
                                   std::size_t budget = kDefaultShiftBudget) {
  const CoxeterSystem& sys = tw.system();
  auto word_less = [&](const WeylElement& a, const WeylElement& b) {
    return sys.canonical_reduced_word(a) < sys.canonical_reduced_word(b);
  };
  auto build_path = [&](const std::map<WeylElement, std::pair<WeylElement, int>>& parent,
                        WeylElement end) {
    ShiftPath path;
    path.start = x;
    std::vector<ShiftStep> rev;
    WeylElement cur = end;
    while (cur != x) {
      auto it = parent.find(cur);
      rev.push_back({it->second.second, cur});
      cur = it->second.first;
    }
    std::reverse(rev.begin(), rev.end());
    path.steps = std::move(rev);
    return path;
  };

  if (x == y) {
    ShiftSearchResult r;
    r.status = ShiftSearchStatus::Found;
    r.path = ShiftPath{x, {}};
    return r;
  }
  std::map<WeylElement, std::pair<WeylElement, int>> parent;
  std::set<WeylElement> seen{x};
  std::vector<WeylElement> frontier{x};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& u : frontier) {
      int lu = sys.length(u);
      for (int s = 0; s < sys.rank(); ++s) {
        WeylElement v = f_conjugate_by_gen(tw, u, s);
        if (sys.length(v) > lu) continue;
        if (!seen.insert(v).second) continue;
        parent.emplace(v, std::make_pair(u, s));
        if (v == y) {
          ShiftSearchResult r;
          r.status = ShiftSearchStatus::Found;
          r.path = build_path(parent, v);
          return r;
        }
        if (seen.size() > budget) {
          ShiftSearchResult r;
          r.status = ShiftSearchStatus::BudgetExceeded;
          return r;
        }
        next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end(), word_less);
    frontier = std::move(next);
  }
  return {};
}

// Descent to a minimal length element of the F-class of x, following the
// Geck--Kim--Pfeiffer strategy: breadth-first through the equal-length
// layer until a strictly length-decreasing conjugation appears, repeat.
// Deterministic: layers are scanned in canonical-word lexicographic order
// and generators in ascending order.
inline std::pair<WeylElement, ShiftPath> reduce_to_min(const Twist& tw, const WeylElement& x) {
  const CoxeterSystem& sys = tw.system();
  auto word_less = [&](const WeylElement& a, const WeylElement& b) {
    return sys.canonical_reduced_word(a) < sys.canonical_reduced_word(b);
  };
  ShiftPath path;
  path.start = x;
  WeylElement current = x;
  while (true) {
    int len = sys.length(current);
    std::map<WeylElement, std::pair<WeylElement, int>> parent;
    std::set<WeylElement> seen{current};
    std::vector<WeylElement> frontier{current};
    bool descended = false;
    while (!frontier.empty() && !descended) {
      std::vector<WeylElement> next;
      for (const WeylElement& u : frontier) {
        for (int s = 0; s < sys.rank(); ++s) {
          WeylElement v = f_conjugate_by_gen(tw, u, s);
          int lv = sys.length(v);
          if (lv < len) {
            // replay the equal-length walk to u, then the decreasing step
            std::vector<ShiftStep> walk;
            WeylElement cur = u;
            while (cur != current) {
              auto it = parent.find(cur);
              walk.push_back({it->second.second, cur});
              cur = it->second.first;
            }
            std::reverse(walk.begin(), walk.end());
            for (auto& st : walk) path.steps.push_back(std::move(st));
            path.steps.push_back({s, v});
            current = v;
            descended = true;
            break;
          }
          if (lv == len && seen.insert(v).second) {
            parent.emplace(v, std::make_pair(u, s));
            next.push_back(v);
          }
        }
        if (descended) break;
      }
      std::sort(next.begin(), next.end(), word_less);
      frontier = std::move(next);
    }
    if (!descended) break;  // no shorter element reachable: minimal
  }
  return {current, std::move(path)};
}

}  // namespace cxkit
