#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cxkit/braid.hpp"
#include "cxkit/coxeter.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/fconj.hpp"
#include "cxkit/twist.hpp"
#include "cxkit/word.hpp"

namespace cxkit {

// Moves of the word reduction engine. Each kind carries exactly the data
// its local invariant needs, so a trace can be replayed and re-checked
// independently of how it was produced.

// before and after have equal images in the braid monoid.
struct BraidRewrite {
  Word before;
  Word after;
};

// word has equal adjacent letters at position; the move deletes the left
// one.
struct SquareContraction {
  Word word;
  std::size_t position = 0;
};

// s v  ->  v F(s)
struct CyclicShiftLeft {
  int s = 0;
};

// v F(s)  ->  s v
struct CyclicShiftRight {
  int s = 0;
};

using ReductionMove =
    std::variant<BraidRewrite, SquareContraction, CyclicShiftLeft, CyclicShiftRight>;

inline const char* move_kind_name(const ReductionMove& mv) {
  switch (mv.index()) {
    case 0:
      return "braid-rewrite";
    case 1:
      return "square-contraction";
    case 2:
      return "cyclic-shift-left";
    case 3:
      return "cyclic-shift-right";
  }
  return "";
}

// The result each move invokes, named in serialized traces.
inline const char* move_paper_tag(const ReductionMove& mv) {
  switch (mv.index()) {
    case 0:
      return "braid-invariance";
    case 1:
      return "square-contraction";
    default:
      return "cyclic-shift";
  }
}

// Applies one move to the current word, checking its local invariant.
// Throws InputError with a diagnostic when the invariant fails.
inline Word replay_move(const Twist& tw, const Word& current, const ReductionMove& mv) {
  const CoxeterSystem& sys = tw.system();
  if (const auto* br = std::get_if<BraidRewrite>(&mv)) {
    if (current != br->before) {
      throw InputError("'before' does not match the current word");
    }
    validate_word(sys, br->after);
    if (!braid_equal(sys, br->before, br->after)) {
      throw InputError("words are not braid-equivalent");
    }
    return br->after;
  }
  if (const auto* sq = std::get_if<SquareContraction>(&mv)) {
    if (current != sq->word) {
      throw InputError("recorded word does not match the current word");
    }
    if (sq->position + 1 >= sq->word.size()) {
      throw InputError("position out of range");
    }
    if (sq->word[sq->position] != sq->word[sq->position + 1]) {
      throw InputError("letters at the position differ");
    }
    Word next = sq->word;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(sq->position));
    return next;
  }
  if (const auto* sl = std::get_if<CyclicShiftLeft>(&mv)) {
    if (sl->s < 0 || sl->s >= sys.rank()) throw InputError("bad generator");
    if (current.empty() || current.front() != sl->s) {
      throw InputError("word does not start with the generator");
    }
    Word next(current.begin() + 1, current.end());
    next.push_back(tw.sigma(sl->s));
    return next;
  }
  const auto& sr = std::get<CyclicShiftRight>(mv);
  if (sr.s < 0 || sr.s >= sys.rank()) throw InputError("bad generator");
  if (current.empty() || current.back() != tw.sigma(sr.s)) {
    throw InputError("word does not end with the twisted generator");
  }
  Word next;
  next.reserve(current.size());
  next.push_back(sr.s);
  next.insert(next.end(), current.begin(), current.end() - 1);
  return next;
}

struct ClassSummary {
  int min_length = 0;
  std::size_t size = 0;
  bool elliptic = false;
  bool contains_input = false;  // whether alpha(input) lies in the final class
};

struct ReductionResult {
  Word input;
  Word final_word;
  WeylElement x0;
  ClassSummary class_summary;
  std::vector<ReductionMove> trace;
};

// Reduces an arbitrary word over S to a reduced word of a minimal-length
// element in an F-conjugacy class, recording a replayable trace.
//
// Loop: while the word is not reduced, expose a square and contract one
// of its letters. Once reduced, if the element is minimal in its F-class
// we are done; otherwise take the first step of the Geck--Kim--Pfeiffer
// descent and realize it on words as a braid rewrite followed by a cyclic
// shift (left when the step generator is a left descent, right when its
// twist is a right descent), then repeat. Contractions strictly shorten
// the word and the descent is finite, so the loop terminates.
inline ReductionResult reduce_word(const Twist& tw, const Word& input) {
  const CoxeterSystem& sys = tw.system();
  validate_word(sys, input);

  ReductionResult res;
  res.input = input;
  Word word = input;

  while (true) {
    while (auto exposure = expose_square(sys, word)) {
      if (!exposure->moves.empty()) {
        res.trace.push_back(BraidRewrite{word, exposure->word});
      }
      res.trace.push_back(SquareContraction{exposure->word, exposure->position});
      word = exposure->word;
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(exposure->position));
    }

    WeylElement x = sys.element_from_word(word);
    ShiftPath path = reduce_to_min(tw, x).second;
    if (path.steps.empty()) {
      res.final_word = word;
      res.x0 = x;
      break;
    }

    int s = path.steps.front().s;
    if (sys.is_left_descent(s, x)) {
      Word target;
      target.push_back(s);
      Word rest = sys.canonical_reduced_word(sys.mult_gen_left(s, x));
      target.insert(target.end(), rest.begin(), rest.end());
      if (target != word) {
        res.trace.push_back(BraidRewrite{word, target});
        word = std::move(target);
      }
      res.trace.push_back(CyclicShiftLeft{s});
      Word next(word.begin() + 1, word.end());
      next.push_back(tw.sigma(s));
      word = std::move(next);
    } else {
      // Equal-length step whose generator is not a left descent: F(s) is
      // then a right descent, and the shift runs the other way.
      int fs = tw.sigma(s);
      if (!sys.is_right_descent(x, fs)) {
        throw std::logic_error("shift step with neither admissible descent");
      }
      Word target = sys.canonical_reduced_word(sys.mult_gen_right(x, fs));
      target.push_back(fs);
      if (target != word) {
        res.trace.push_back(BraidRewrite{word, target});
        word = std::move(target);
      }
      res.trace.push_back(CyclicShiftRight{s});
      Word next;
      next.push_back(s);
      next.insert(next.end(), word.begin(), word.end() - 1);
      word = std::move(next);
    }
  }

  FConjClass cls = f_conjugacy_class(tw, res.x0);
  res.class_summary.min_length = cls.min_length;
  res.class_summary.size = cls.elements.size();
  res.class_summary.elliptic = cls.elliptic;
  WeylElement input_elem = sys.element_from_word(input);
  res.class_summary.contains_input =
      std::find(cls.elements.begin(), cls.elements.end(), input_elem) != cls.elements.end();
  return res;
}

struct VerifyReport {
  bool ok = false;
  std::string diagnostic;
};

// Independent checker for a reduction certificate: replays every move,
// re-checking its local invariant, then re-computes minimality of the
// final element in its F-conjugacy class and the class summary.
inline VerifyReport verify_trace(const Twist& tw, const Word& input,
                                 const ReductionResult& result) {
  const CoxeterSystem& sys = tw.system();
  try {
    validate_word(sys, input);
  } catch (const InputError& e) {
    return {false, std::string("input word: ") + e.what()};
  }
  if (result.input != input) {
    return {false, "result does not record the given input word"};
  }
  Word cur = input;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    try {
      cur = replay_move(tw, cur, result.trace[i]);
    } catch (const InputError& e) {
      return {false, "move " + std::to_string(i + 1) + " (" +
                         move_kind_name(result.trace[i]) + "): " + e.what()};
    }
  }
  if (cur != result.final_word) {
    return {false, "replay does not reproduce the final word"};
  }
  if (!is_reduced(sys, cur)) {
    return {false, "final word is not reduced"};
  }
  WeylElement x = sys.element_from_word(cur);
  if (x != result.x0) {
    return {false, "final word does not spell the claimed element"};
  }
  FConjClass cls = f_conjugacy_class(tw, x);
  if (sys.length(x) != cls.min_length) {
    return {false, "final element is not of minimal length in its F-conjugacy class"};
  }
  const ClassSummary& cs = result.class_summary;
  bool contains_input =
      std::find(cls.elements.begin(), cls.elements.end(), sys.element_from_word(input)) !=
      cls.elements.end();
  if (cs.min_length != cls.min_length || cs.size != cls.elements.size() ||
      cs.elliptic != cls.elliptic || cs.contains_input != contains_input) {
    return {false, "class summary does not match the recomputed class"};
  }
  return {true, ""};
}

}  // namespace cxkit
