#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cxkit/coxeter.hpp"
#include "cxkit/errors.hpp"
#include "cxkit/word.hpp"

namespace cxkit {

inline constexpr std::size_t kDefaultMoveBudget = 100'000;

// One application of a braid relation: the m_{st} letters starting at
// `position` spell P(s,t) before the move and P(t,s) after.
struct BraidMove {
  std::size_t position = 0;
  int s = 0;
  int t = 0;

  friend bool operator==(const BraidMove& a, const BraidMove& b) {
    return a.position == b.position && a.s == b.s && a.t == b.t;
  }
};

// Left-greedy normal form of a positive braid: each factor is a simple
// (a Weyl group element), and every left descent of a factor is a right
// descent of its predecessor.
struct BraidNormalForm {
  std::vector<WeylElement> factors;

  friend bool operator==(const BraidNormalForm& a, const BraidNormalForm& b) {
    return a.factors == b.factors;
  }
  friend bool operator!=(const BraidNormalForm& a, const BraidNormalForm& b) {
    return !(a == b);
  }
};

inline void validate_word(const CoxeterSystem& sys, const Word& w) {
  for (int letter : w) {
    if (letter < 0 || letter >= sys.rank()) {
      throw InputError("word letter " + std::to_string(letter + 1) + " out of range");
    }
  }
}

inline bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  validate_word(sys, w);
  return sys.length(sys.element_from_word(w)) == static_cast<int>(w.size());
}

// The alternating word s t s t ... of length m_{st}.
inline Word alternating_word(int s, int t, int m) {
  Word w;
  w.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) w.push_back(k % 2 == 0 ? s : t);
  return w;
}

inline Word apply_braid_move(const CoxeterSystem& sys, const Word& w, const BraidMove& mv) {
  validate_word(sys, w);
  if (mv.s == mv.t || mv.s < 0 || mv.s >= sys.rank() || mv.t < 0 || mv.t >= sys.rank()) {
    throw InputError("invalid braid move generators");
  }
  int m = sys.bond_order(mv.s, mv.t);
  if (mv.position + static_cast<std::size_t>(m) > w.size()) {
    throw InputError("braid move segment out of range");
  }
  for (int k = 0; k < m; ++k) {
    int expected = (k % 2 == 0) ? mv.s : mv.t;
    if (w[mv.position + static_cast<std::size_t>(k)] != expected) {
      throw InputError("braid move segment does not spell the braid relation");
    }
  }
  Word out = w;
  for (int k = 0; k < m; ++k) {
    out[mv.position + static_cast<std::size_t>(k)] = (k % 2 == 0) ? mv.t : mv.s;
  }
  return out;
}

namespace detail {

// Braid moves applicable to w, in ascending position order.
inline std::vector<BraidMove> applicable_moves(const CoxeterSystem& sys, const Word& w) {
  std::vector<BraidMove> moves;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    int s = w[pos];
    int t = w[pos + 1];
    if (s == t) continue;
    int m = sys.bond_order(s, t);
    if (pos + static_cast<std::size_t>(m) > w.size()) continue;
    bool ok = true;
    for (int k = 0; k < m; ++k) {
      if (w[pos + static_cast<std::size_t>(k)] != ((k % 2 == 0) ? s : t)) {
        ok = false;
        break;
      }
    }
    if (ok) moves.push_back({pos, s, t});
  }
  return moves;
}

// BFS over the braid-move graph starting at `start`, stopping at the
// shallowest word satisfying `accept`; ties within a layer are broken by
// lexicographic word order. Returns that word and the move chain reaching
// it.
template <typename Accept>
std::optional<std::pair<Word, std::vector<BraidMove>>> bfs_braid_words(
    const CoxeterSystem& sys, const Word& start, Accept accept, std::size_t budget) {
  if (accept(start)) return std::make_pair(start, std::vector<BraidMove>{});
  std::map<Word, std::pair<Word, BraidMove>> parent;
  parent.emplace(start, std::make_pair(Word{}, BraidMove{}));
  std::vector<Word> frontier{start};
  auto reconstruct = [&](Word w) {
    std::vector<BraidMove> chain;
    while (w != start) {
      auto it = parent.find(w);
      chain.push_back(it->second.second);
      w = it->second.first;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& u : frontier) {
      for (const BraidMove& mv : applicable_moves(sys, u)) {
        Word v = apply_braid_move(sys, u, mv);
        if (parent.count(v)) continue;
        parent.emplace(v, std::make_pair(u, mv));
        next.push_back(v);
      }
    }
    if (parent.size() > budget) return std::nullopt;
    std::sort(next.begin(), next.end());
    for (const Word& v : next) {
      if (accept(v)) return std::make_pair(v, reconstruct(v));
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

// Explicit chain of braid moves turning one reduced word of an element
// into another. Existence is guaranteed by Matsumoto's theorem, so an
// empty result only signals budget exhaustion.
inline std::optional<std::vector<BraidMove>> matsumoto_path(
    const CoxeterSystem& sys, const Word& from, const Word& to,
    std::size_t budget = kDefaultMoveBudget) {
  if (!is_reduced(sys, from) || !is_reduced(sys, to)) {
    throw InputError("matsumoto_path requires reduced words");
  }
  if (sys.element_from_word(from) != sys.element_from_word(to)) {
    throw InputError("matsumoto_path requires words of the same element");
  }
  auto hit = detail::bfs_braid_words(sys, from, [&](const Word& w) { return w == to; }, budget);
  if (!hit) return std::nullopt;
  return hit->second;
}

// The left-greedy factorization of beta(w) into simples. Letters are
// absorbed into the previous factor while it stays reduced; sweeps repeat
// until every junction satisfies the greedy descent condition.
inline BraidNormalForm greedy_normal_form(const CoxeterSystem& sys, const Word& w) {
  validate_word(sys, w);
  struct Factor {
    WeylElement elem;
    int len;
  };
  std::vector<Factor> factors;
  factors.reserve(w.size());
  for (int letter : w) {
    factors.push_back({sys.simple_reflection(letter), 1});
  }

  auto absorb = [&](Factor& a, Factor& b) {
    bool moved = false;
    while (b.len > 0) {
      int pick = -1;
      for (int s : sys.left_descents(b.elem)) {
        if (!sys.is_right_descent(a.elem, s)) {
          pick = s;
          break;
        }
      }
      if (pick < 0) break;
      a.elem = sys.mult_gen_right(a.elem, pick);
      ++a.len;
      b.elem = sys.mult_gen_left(pick, b.elem);
      --b.len;
      moved = true;
    }
    return moved;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (absorb(factors[i], factors[i + 1])) changed = true;
    }
    std::erase_if(factors, [](const Factor& f) { return f.len == 0; });
  }

  BraidNormalForm nf;
  nf.factors.reserve(factors.size());
  for (auto& f : factors) nf.factors.push_back(std::move(f.elem));
  return nf;
}

// Concatenation of the canonical reduced words of the factors; a
// distinguished representative of the braid class.
inline Word expand(const CoxeterSystem& sys, const BraidNormalForm& nf) {
  Word w;
  for (const auto& f : nf.factors) {
    Word part = sys.canonical_reduced_word(f);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

inline bool braid_equal(const CoxeterSystem& sys, const Word& w, const Word& v) {
  return greedy_normal_form(sys, w) == greedy_normal_form(sys, v);
}

// A braid-equivalent word with an adjacent repeated letter, together with
// the move chain producing it and the 0-based index of the square. Empty
// for reduced words. Strategy: grow a reduced prefix letter by letter; at
// the first letter s that fails to extend it, rewrite the prefix to end
// with s and the square appears.
struct SquareExposure {
  Word word;
  std::vector<BraidMove> moves;
  std::size_t position = 0;
};

inline std::optional<SquareExposure> expose_square(const CoxeterSystem& sys, const Word& w,
                                                   std::size_t budget = kDefaultMoveBudget) {
  validate_word(sys, w);
  WeylElement prefix = sys.identity();
  for (std::size_t k = 0; k < w.size(); ++k) {
    int s = w[k];
    if (!sys.is_right_descent(prefix, s)) {
      prefix = sys.mult_gen_right(prefix, s);
      continue;
    }
    Word prefix_word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    auto hit = detail::bfs_braid_words(
        sys, prefix_word, [&](const Word& u) { return !u.empty() && u.back() == s; }, budget);
    if (!hit) {
      throw GuardExceeded("square exposure exceeded the move search budget");
    }
    SquareExposure exp;
    exp.word = hit->first;
    exp.word.insert(exp.word.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    exp.moves = std::move(hit->second);
    exp.position = k - 1;
    return exp;
  }
  return std::nullopt;  // the whole word is reduced
}

}  // namespace cxkit
