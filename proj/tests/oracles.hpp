#pragma once

// Reference models for the test suite. These deliberately avoid the
// library's root-lattice representation so they can serve as independent
// oracles: permutations for type A, signed permutations for type B,
// a presentation-level dihedral model for rank 2, brute-force braid-move
// closures, and small finite-field counts.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cxkit/coxeter.hpp"
#include "cxkit/word.hpp"

namespace oracles {

// ---- W(A_{n-1}) as permutations of {1..n} ----
// Letter i (0-based) is the transposition (i+1, i+2); a word maps to the
// composition of its letters read left to right (leftmost outermost).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline Perm perm_from_word(const cxkit::Word& w, int n) {
  Perm p = perm_identity(n);
  for (int letter : w) {
    std::swap(p[static_cast<std::size_t>(letter)], p[static_cast<std::size_t>(letter) + 1]);
  }
  return p;
}

inline int perm_inversions(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return inv;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[static_cast<std::size_t>(b[i] - 1)];
  }
  return c;
}

// p contains the pattern iff some increasing index choice is
// order-isomorphic to it.
inline bool contains_pattern(const Perm& p, const Perm& pattern) {
  const std::size_t n = p.size();
  const std::size_t k = pattern.size();
  std::vector<std::size_t> idx(k);
  // iterate over all k-subsets of {0..n-1} in lex order
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a) {
      for (std::size_t b = a + 1; b < k && iso; ++b) {
        if ((p[idx[a]] < p[idx[b]]) != (pattern[a] < pattern[b])) iso = false;
      }
    }
    if (iso) return true;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
  }
}

// ---- Dihedral group of order 2m from the presentation ----
// Elements r^a s^b with r = s1 s2, s = s1; lengths via breadth-first
// search over the Cayley graph.
struct DihedralElt {
  int rot = 0;
  int ref = 0;

  friend bool operator==(const DihedralElt& x, const DihedralElt& y) {
    return x.rot == y.rot && x.ref == y.ref;
  }
  friend bool operator<(const DihedralElt& x, const DihedralElt& y) {
    return std::pair(x.rot, x.ref) < std::pair(y.rot, y.ref);
  }
};

inline DihedralElt dihedral_mul(int m, DihedralElt x, DihedralElt y) {
  int rot = x.rot + (x.ref ? -y.rot : y.rot);
  rot %= m;
  if (rot < 0) rot += m;
  return {rot, x.ref ^ y.ref};
}

inline DihedralElt dihedral_gen(int m, int letter) {
  return letter == 0 ? DihedralElt{0, 1} : DihedralElt{m - 1, 1};
}

inline DihedralElt dihedral_from_word(int m, const cxkit::Word& w) {
  DihedralElt x{0, 0};
  for (int letter : w) x = dihedral_mul(m, x, dihedral_gen(m, letter));
  return x;
}

inline std::map<DihedralElt, int> dihedral_lengths(int m) {
  std::map<DihedralElt, int> dist;
  std::vector<DihedralElt> queue{{0, 0}};
  dist[{0, 0}] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    DihedralElt u = queue[head];
    for (int letter : {0, 1}) {
      DihedralElt v = dihedral_mul(m, u, dihedral_gen(m, letter));
      if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

// ---- W(B_n) as signed permutations ----
// An element is an odd bijection of {±1..±n}; stored as the images of
// 1..n. Letter i < n-1 swaps i+1 and i+2; letter n-1 negates n.
using SignedPerm = std::vector<int>;

inline SignedPerm signed_identity(int n) {
  SignedPerm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline SignedPerm signed_gen(int n, int letter) {
  SignedPerm p = signed_identity(n);
  if (letter == n - 1) {
    p[static_cast<std::size_t>(n - 1)] = -n;
  } else {
    std::swap(p[static_cast<std::size_t>(letter)], p[static_cast<std::size_t>(letter) + 1]);
  }
  return p;
}

inline SignedPerm signed_compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int img = b[i];
    c[i] = img > 0 ? a[static_cast<std::size_t>(img - 1)] : -a[static_cast<std::size_t>(-img - 1)];
  }
  return c;
}

inline SignedPerm signed_from_word(const cxkit::Word& w, int n) {
  SignedPerm p = signed_identity(n);
  for (int letter : w) p = signed_compose(p, signed_gen(n, letter));
  return p;
}

inline std::map<SignedPerm, int> signed_lengths(int n) {
  std::map<SignedPerm, int> dist;
  std::vector<SignedPerm> queue{signed_identity(n)};
  dist[signed_identity(n)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    SignedPerm u = queue[head];
    for (int letter = 0; letter < n; ++letter) {
      SignedPerm v = signed_compose(u, signed_gen(n, letter));
      if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

// ---- Brute-force braid-move closure over plain words ----
// Own move application, driven only by the Coxeter matrix.
inline std::set<cxkit::Word> braid_closure(const std::vector<std::vector<int>>& coxeter,
                                           const cxkit::Word& start) {
  std::set<cxkit::Word> seen{start};
  std::vector<cxkit::Word> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    cxkit::Word u = queue[head];
    for (std::size_t pos = 0; pos + 1 < u.size(); ++pos) {
      int s = u[pos];
      int t = u[pos + 1];
      if (s == t) continue;
      int m = coxeter[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      if (pos + static_cast<std::size_t>(m) > u.size()) continue;
      bool alternating = true;
      for (int k = 0; k < m; ++k) {
        if (u[pos + static_cast<std::size_t>(k)] != ((k % 2 == 0) ? s : t)) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      cxkit::Word v = u;
      for (int k = 0; k < m; ++k) {
        v[pos + static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : s;
      }
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen;
}

// All words of a given length over {0..rank-1}, lexicographic.
inline std::vector<cxkit::Word> all_words(int rank, int length) {
  std::vector<cxkit::Word> out;
  cxkit::Word w(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == rank - 1) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  if (length == 0) return {cxkit::Word{}};
  return out;
}

// All reduced words of an element, by recursion over left descents.
inline std::vector<cxkit::Word> all_reduced_words(const cxkit::CoxeterSystem& sys,
                                                  const cxkit::WeylElement& x) {
  if (sys.is_identity(x)) return {cxkit::Word{}};
  std::vector<cxkit::Word> out;
  for (int s : sys.left_descents(x)) {
    for (const auto& tail : all_reduced_words(sys, sys.mult_gen_left(s, x))) {
      cxkit::Word w;
      w.push_back(s);
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Complete flags in F_2^3, counted as incident (line, plane) pairs.
inline int count_complete_flags_f2_dim3() {
  int count = 0;
  for (int v = 1; v < 8; ++v) {
    for (int f = 1; f < 8; ++f) {
      if (__builtin_popcount(static_cast<unsigned>(v & f)) % 2 == 0) ++count;
    }
  }
  return count;
}

}  // namespace oracles
