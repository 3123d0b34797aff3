#pragma once

#include <set>
#include <string>
#include <vector>

#include "cxkit/coxeter.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/qpoly.hpp"
#include "cxkit/twist.hpp"

namespace cxkit {

// Tuple (w_1, ..., w_r) of Weyl group elements over one system; r = 0 is
// allowed and stands for the full-flag case.
using DLTuple = std::vector<WeylElement>;

inline void validate_letters(const Twist& tw, const Word& w) {
  for (int letter : w) {
    if (letter < 0 || letter >= tw.system().rank()) {
      throw InputError("word letter " + std::to_string(letter + 1) + " out of range");
    }
  }
}

// F-orbits of S meeting the support. Returned as orbit indices into
// tw.orbits().
inline std::set<int> f_support(const Twist& tw, const WeylElement& x) {
  FOrbitSet os = tw.orbits();
  std::set<int> ids;
  for (int s : tw.system().support(x)) ids.insert(os.orbit_of[static_cast<std::size_t>(s)]);
  return ids;
}

inline std::set<int> f_support(const Twist& tw, const Word& w) {
  validate_letters(tw, w);
  FOrbitSet os = tw.orbits();
  std::set<int> ids;
  for (int letter : w) ids.insert(os.orbit_of[static_cast<std::size_t>(letter)]);
  return ids;
}

inline std::set<int> f_support(const Twist& tw, const DLTuple& t) {
  std::set<int> ids;
  for (const auto& x : t) {
    for (int id : f_support(tw, x)) ids.insert(id);
  }
  return ids;
}

// Full F-support with one simple reflection from each orbit, all orbits
// pairwise distinct. Checked on the canonical reduced word; the property
// does not depend on the choice.
inline bool is_coxeter_element(const Twist& tw, const WeylElement& x) {
  FOrbitSet os = tw.orbits();
  Word w = tw.system().canonical_reduced_word(x);
  std::set<int> ids;
  for (int letter : w) {
    int id = os.orbit_of[static_cast<std::size_t>(letter)];
    if (!ids.insert(id).second) return false;  // repeated orbit
  }
  return ids.size() == os.size();
}

inline bool is_irreducible_dl(const Twist& tw, const Word& w) {
  return f_support(tw, w).size() == tw.orbits().size();
}

inline bool is_irreducible_dl(const Twist& tw, const DLTuple& t) {
  return f_support(tw, t).size() == tw.orbits().size();
}

namespace detail {

// Sum of q^{l(w)} over F-fixed minimal coset representatives in W^J,
// where J is the union of the orbits in the support set I.
inline QPolynomial component_count_from_support(const Twist& tw, const std::set<int>& support_ids) {
  const CoxeterSystem& sys = tw.system();
  FOrbitSet os = tw.orbits();
  GeneratorSubset J;
  for (int id : support_ids) {
    for (int s : os.orbits[static_cast<std::size_t>(id)]) J.insert(s);
  }
  QPolynomial p;
  for (const auto& w : sys.min_coset_reps(J)) {
    if (tw.apply(w) == w) p.add_term(sys.length(w), 1);
  }
  return p;
}

}  // namespace detail

inline QPolynomial component_count(const Twist& tw, const Word& w) {
  return detail::component_count_from_support(tw, f_support(tw, w));
}

inline QPolynomial component_count(const Twist& tw, const DLTuple& t) {
  return detail::component_count_from_support(tw, f_support(tw, t));
}

inline int dl_dimension(const CoxeterSystem& sys, const DLTuple& t) {
  int d = 0;
  for (const auto& x : t) d += sys.length(x);
  return d;
}

// Number of strata X(w_1', ..., w_r') with w_i' <= w_i: the product of
// the lower Bruhat interval sizes. Interval enumeration is guarded per
// factor inside lower_interval.
inline unsigned long long strata_count(const CoxeterSystem& sys, const DLTuple& t) {
  unsigned long long count = 1;
  for (const auto& x : t) {
    unsigned long long size = sys.lower_interval(x).size();
    unsigned long long next;
    if (__builtin_mul_overflow(count, size, &next)) {
      throw GuardExceeded("strata count does not fit in 64 bits");
    }
    count = next;
  }
  return count;
}

// Carrell--Peterson criterion: the Poincare polynomial of [e, w] is
// palindromic.
inline bool is_rationally_smooth(const CoxeterSystem& sys, const WeylElement& w) {
  return sys.poincare_polynomial(w).is_palindromic();
}

struct SmoothnessVerdict {
  enum class Kind { SmoothByDihedralLongest, RationallySmoothAllFactors, Unknown };

  struct FactorEvidence {
    Word word;  // canonical reduced word of the factor
    bool dihedral_longest = false;
    bool rationally_smooth = false;
    std::string note;
  };

  Kind kind = Kind::Unknown;
  std::vector<FactorEvidence> factors;
  std::string caveat;
};

inline const char* to_string(SmoothnessVerdict::Kind k) {
  switch (k) {
    case SmoothnessVerdict::Kind::SmoothByDihedralLongest:
      return "SmoothByDihedralLongest";
    case SmoothnessVerdict::Kind::RationallySmoothAllFactors:
      return "RationallySmoothAllFactors";
    case SmoothnessVerdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

// Two evidence levels: every factor the longest element of a rank <= 2
// standard parabolic (smooth unconditionally), or every factor passing
// the palindromicity test (implies smoothness only in simply-laced
// types, recorded as a caveat).
inline SmoothnessVerdict smoothness_certificate(const CoxeterSystem& sys, const DLTuple& t) {
  SmoothnessVerdict v;
  bool all_dihedral = true;
  bool all_rational = true;
  for (const auto& x : t) {
    SmoothnessVerdict::FactorEvidence ev;
    ev.word = sys.canonical_reduced_word(x);
    GeneratorSubset supp = sys.support(x);
    if (supp.size() <= 2 && x == sys.longest_parabolic_element(supp)) {
      ev.dihedral_longest = true;
      ev.rationally_smooth = true;
      std::string names;
      for (int s : supp) {
        if (!names.empty()) names += ",";
        names += std::to_string(s + 1);
      }
      ev.note = "longest element of the parabolic subgroup {" + names + "}";
    } else {
      ev.rationally_smooth = is_rationally_smooth(sys, x);
      ev.note = ev.rationally_smooth ? "Poincare polynomial of [e,w] is palindromic"
                                     : "Poincare polynomial of [e,w] is not palindromic";
    }
    all_dihedral = all_dihedral && ev.dihedral_longest;
    all_rational = all_rational && ev.rationally_smooth;
    v.factors.push_back(std::move(ev));
  }
  if (all_dihedral) {
    v.kind = SmoothnessVerdict::Kind::SmoothByDihedralLongest;
  } else if (all_rational) {
    v.kind = SmoothnessVerdict::Kind::RationallySmoothAllFactors;
    v.caveat = "rational smoothness implies smoothness only in simply-laced types";
  } else {
    v.kind = SmoothnessVerdict::Kind::Unknown;
  }
  return v;
}

}  // namespace cxkit
