#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cxkit/errors.hpp"
#include "cxkit/qpoly.hpp"
#include "cxkit/word.hpp"

namespace cxkit {

using GeneratorSubset = std::set<int>;

// A Weyl group element acting on the root lattice. `fwd` holds the images
// of the simple roots in simple-root coordinates (column j starts at
// offset j*rank); `inv` holds the images under the inverse element.
// Storing the inverse makes descent sets a sign test on a column.
// Equality and ordering use `fwd` only; `inv` is determined by it.
struct WeylElement {
  std::vector<int> fwd;
  std::vector<int> inv;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.fwd == b.fwd; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return a.fwd != b.fwd; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.fwd < b.fwd; }
};

namespace detail {

struct TypeFactor {
  char letter;
  int rank;
};

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t factor_group_order(const TypeFactor& f) {
  switch (f.letter) {
    case 'A':
      return factorial(f.rank + 1);
    case 'B':
    case 'C':
      return (std::uint64_t{1} << f.rank) * factorial(f.rank);
    case 'D':
      return (std::uint64_t{1} << (f.rank - 1)) * factorial(f.rank);
    case 'E':
      return f.rank == 6 ? 51840ULL : (f.rank == 7 ? 2903040ULL : 696729600ULL);
    case 'F':
      return 1152ULL;
    case 'G':
      return 12ULL;
  }
  return 0;
}

inline int factor_positive_root_count(const TypeFactor& f) {
  switch (f.letter) {
    case 'A':
      return f.rank * (f.rank + 1) / 2;
    case 'B':
    case 'C':
      return f.rank * f.rank;
    case 'D':
      return f.rank * (f.rank - 1);
    case 'E':
      return f.rank == 6 ? 36 : (f.rank == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return 0;
}

inline bool factor_rank_valid(char letter, int rank) {
  switch (letter) {
    case 'A':
      return rank >= 1 && rank <= 8;
    case 'B':
    case 'C':
      return rank >= 2 && rank <= 8;
    case 'D':
      return rank >= 4 && rank <= 8;
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
  }
  return false;
}

// Off-diagonal Cartan entries of one irreducible factor, written into the
// block starting at `off` of the full rank-n Cartan matrix. Conventions:
// a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), Bourbaki numbering.
inline void fill_factor_cartan(const TypeFactor& f, int off,
                               std::vector<std::vector<int>>& a) {
  const int n = f.rank;
  auto bond = [&](int i, int j, int aij, int aji) {
    a[off + i][off + j] = aij;
    a[off + j][off + i] = aji;
  };
  switch (f.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // last simple root short
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // last simple root long
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 2, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4.
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':  // roots 3,4 short
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':  // root 1 short
      bond(0, 1, -3, -1);
      break;
  }
}

inline int bond_order_from_product(int prod) {
  switch (prod) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
  }
  return -1;
}

inline std::vector<TypeFactor> parse_type_descriptor(const std::string& descriptor) {
  std::vector<TypeFactor> factors;
  std::size_t i = 0;
  if (descriptor.empty()) throw InputError("empty type descriptor");
  while (i < descriptor.size()) {
    char letter = descriptor[i];
    if (letter < 'A' || letter > 'G') {
      throw InputError("unknown type letter '" + std::string(1, letter) + "' in '" +
                       descriptor + "'");
    }
    ++i;
    if (i >= descriptor.size() || descriptor[i] < '1' || descriptor[i] > '8') {
      throw InputError("missing or invalid rank after '" + std::string(1, letter) +
                       "' in '" + descriptor + "'");
    }
    int rank = descriptor[i] - '0';
    ++i;
    if (!factor_rank_valid(letter, rank)) {
      throw InputError("rank " + std::to_string(rank) + " out of supported bounds for type " +
                       std::string(1, letter));
    }
    factors.push_back({letter, rank});
    if (i < descriptor.size()) {
      if (descriptor[i] != 'x') {
        throw InputError("expected 'x' between factors in '" + descriptor + "'");
      }
      ++i;
      if (i >= descriptor.size()) throw InputError("trailing 'x' in '" + descriptor + "'");
    }
  }
  return factors;
}

}  // namespace detail

// A finite crystallographic Coxeter system with exact integer root-lattice
// data. Immutable after construction; every operation is a pure function,
// so instances are safe to share across threads.
class CoxeterSystem {
 public:
  int rank() const { return n_; }
  const std::string& type() const { return type_; }
  std::uint64_t group_order() const { return order_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  int bond_order(int s, int t) const { return coxeter_[s][t]; }

  WeylElement identity() const {
    WeylElement e;
    e.fwd = id_mat_;
    e.inv = id_mat_;
    return e;
  }

  bool is_identity(const WeylElement& x) const { return x.fwd == id_mat_; }

  WeylElement simple_reflection(int i) const {
    check_gen(i);
    WeylElement s;
    s.fwd = id_mat_;
    for (int j = 0; j < n_; ++j) s.fwd[static_cast<std::size_t>(j) * n_ + i] -= cartan_[i][j];
    s.inv = s.fwd;
    return s;
  }

  // Image of a root-lattice vector under x.
  std::vector<int> apply(const WeylElement& x, const std::vector<int>& v) const {
    return apply_mat(x.fwd, v);
  }

  WeylElement multiply(const WeylElement& x, const WeylElement& y) const {
    WeylElement z;
    z.fwd.resize(static_cast<std::size_t>(n_) * n_);
    z.inv.resize(static_cast<std::size_t>(n_) * n_);
    for (int j = 0; j < n_; ++j) {
      mat_apply_column(x.fwd, y.fwd, j, z.fwd);
      mat_apply_column(y.inv, x.inv, j, z.inv);
    }
    return z;
  }

  WeylElement inverse(const WeylElement& x) const {
    WeylElement y;
    y.fwd = x.inv;
    y.inv = x.fwd;
    return y;
  }

  // s_i * x
  WeylElement mult_gen_left(int i, const WeylElement& x) const {
    check_gen(i);
    WeylElement z = x;
    for (int j = 0; j < n_; ++j) {
      reflect_in_place(i, &z.fwd[static_cast<std::size_t>(j) * n_]);
    }
    for (int j = 0; j < n_; ++j) {
      int c = cartan_[i][j];
      if (c == 0) continue;
      const int* col_i = &x.inv[static_cast<std::size_t>(i) * n_];
      int* col_j = &z.inv[static_cast<std::size_t>(j) * n_];
      for (int k = 0; k < n_; ++k) col_j[k] -= c * col_i[k];
    }
    return z;
  }

  // x * s_i
  WeylElement mult_gen_right(const WeylElement& x, int i) const {
    check_gen(i);
    WeylElement z = x;
    for (int j = 0; j < n_; ++j) {
      int c = cartan_[i][j];
      if (c == 0) continue;
      const int* col_i = &x.fwd[static_cast<std::size_t>(i) * n_];
      int* col_j = &z.fwd[static_cast<std::size_t>(j) * n_];
      for (int k = 0; k < n_; ++k) col_j[k] -= c * col_i[k];
    }
    for (int j = 0; j < n_; ++j) {
      reflect_in_place(i, &z.inv[static_cast<std::size_t>(j) * n_]);
    }
    return z;
  }

  // Bruhat length: the number of positive roots sent to negative roots.
  int length(const WeylElement& x) const {
    int count = 0;
    std::vector<int> img(n_);
    for (const auto& r : roots_) {
      apply_into(x.fwd, r, img);
      if (is_negative(img)) ++count;
    }
    return count;
  }

  GeneratorSubset left_descents(const WeylElement& x) const {
    GeneratorSubset d;
    for (int i = 0; i < n_; ++i) {
      if (column_negative(x.inv, i)) d.insert(i);
    }
    return d;
  }

  GeneratorSubset right_descents(const WeylElement& x) const {
    GeneratorSubset d;
    for (int i = 0; i < n_; ++i) {
      if (column_negative(x.fwd, i)) d.insert(i);
    }
    return d;
  }

  bool is_left_descent(int i, const WeylElement& x) const {
    check_gen(i);
    return column_negative(x.inv, i);
  }

  bool is_right_descent(const WeylElement& x, int i) const {
    check_gen(i);
    return column_negative(x.fwd, i);
  }

  // Lexicographically smallest reduced word, produced by repeatedly
  // removing the smallest left descent.
  Word canonical_reduced_word(const WeylElement& x) const {
    Word w;
    WeylElement cur = x;
    while (!is_identity(cur)) {
      int i = smallest_left_descent(cur);
      w.push_back(i);
      cur = mult_gen_left(i, cur);
    }
    return w;
  }

  WeylElement element_from_word(const Word& w) const {
    WeylElement x = identity();
    for (int letter : w) {
      if (letter < 0 || letter >= n_) {
        throw InputError("word letter " + std::to_string(letter + 1) + " out of range");
      }
      x = mult_gen_right(x, letter);
    }
    return x;
  }

  // Letters occurring in reduced words of x; equivalently {s : s <= x}.
  GeneratorSubset support(const WeylElement& x) const {
    GeneratorSubset s;
    for (int letter : canonical_reduced_word(x)) s.insert(letter);
    return s;
  }

  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const {
    WeylElement a = v;
    WeylElement b = w;
    int la = length(a);
    int lb = length(b);
    while (true) {
      if (la > lb) return false;
      if (lb == 0) return la == 0;
      int i = smallest_left_descent(b);
      b = mult_gen_left(i, b);
      --lb;
      if (is_left_descent(i, a)) {
        a = mult_gen_left(i, a);
        --la;
      }
    }
  }

  // The lower Bruhat interval [e, w], via downward cover moves w -> wt.
  std::vector<WeylElement> lower_interval(const WeylElement& w) const {
    std::set<WeylElement> seen;
    std::vector<WeylElement> queue;
    seen.insert(w);
    queue.push_back(w);
    const std::uint64_t guard = guard_limit();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      WeylElement u = queue[head];
      int lu = length(u);
      for (const auto& t : reflections_) {
        WeylElement v = multiply(u, t);
        if (length(v) != lu - 1) continue;
        if (seen.insert(v).second) {
          if (seen.size() > guard) {
            throw GuardExceeded("Bruhat interval exceeds guard (CXKIT_MAX_W=" +
                                std::to_string(guard) + ")");
          }
          queue.push_back(v);
        }
      }
    }
    return sort_elements(std::vector<WeylElement>(seen.begin(), seen.end()));
  }

  QPolynomial poincare_polynomial(const WeylElement& w) const {
    QPolynomial p;
    for (const auto& v : lower_interval(w)) p.add_term(length(v), 1);
    return p;
  }

  // All of W, sorted by (length, canonical reduced word).
  std::vector<WeylElement> enumerate_elements() const {
    const std::uint64_t guard = guard_limit();
    if (order_ > guard) {
      throw GuardExceeded("|W| = " + std::to_string(order_) + " exceeds guard (CXKIT_MAX_W=" +
                          std::to_string(guard) + ")");
    }
    std::set<WeylElement> seen;
    std::vector<WeylElement> queue;
    queue.push_back(identity());
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      WeylElement u = queue[head];
      for (int i = 0; i < n_; ++i) {
        WeylElement v = mult_gen_right(u, i);
        if (seen.insert(v).second) queue.push_back(v);
      }
    }
    return sort_elements(std::move(queue));
  }

  // Minimal-length representatives of the cosets w W_J.
  std::vector<WeylElement> min_coset_reps(const GeneratorSubset& J) const {
    check_subset(J);
    std::vector<WeylElement> reps;
    for (const auto& w : enumerate_elements()) {
      bool minimal = true;
      for (int j : J) {
        if (is_right_descent(w, j)) {
          minimal = false;
          break;
        }
      }
      if (minimal) reps.push_back(w);
    }
    return reps;  // enumerate_elements is already canonically sorted
  }

  WeylElement longest_parabolic_element(const GeneratorSubset& J) const {
    check_subset(J);
    WeylElement x = identity();
    bool grew = true;
    while (grew) {
      grew = false;
      for (int j : J) {
        if (!is_right_descent(x, j)) {
          x = mult_gen_right(x, j);
          grew = true;
          break;
        }
      }
    }
    return x;
  }

  WeylElement longest_element() const {
    GeneratorSubset all;
    for (int i = 0; i < n_; ++i) all.insert(i);
    return longest_parabolic_element(all);
  }

  const std::vector<WeylElement>& reflections() const { return reflections_; }

  std::vector<WeylElement> sort_elements(std::vector<WeylElement> elems) const {
    std::vector<std::pair<std::pair<int, Word>, WeylElement>> keyed;
    keyed.reserve(elems.size());
    for (auto& x : elems) {
      Word w = canonical_reduced_word(x);
      keyed.push_back({{static_cast<int>(w.size()), std::move(w)}, std::move(x)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeylElement> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
  }

  friend CoxeterSystem build_system(const std::string& descriptor);

 private:
  CoxeterSystem() = default;

  void check_gen(int i) const {
    if (i < 0 || i >= n_) {
      throw InputError("generator index " + std::to_string(i + 1) + " out of range");
    }
  }

  void check_subset(const GeneratorSubset& J) const {
    for (int j : J) check_gen(j);
  }

  static bool is_negative(const std::vector<int>& v) {
    bool nonzero = false;
    for (int c : v) {
      if (c > 0) return false;
      if (c < 0) nonzero = true;
    }
    return nonzero;
  }

  bool column_negative(const std::vector<int>& mat, int j) const {
    const int* col = &mat[static_cast<std::size_t>(j) * n_];
    for (int k = 0; k < n_; ++k) {
      if (col[k] > 0) return false;
    }
    return true;
  }

  int smallest_left_descent(const WeylElement& x) const {
    for (int i = 0; i < n_; ++i) {
      if (column_negative(x.inv, i)) return i;
    }
    throw std::logic_error("non-identity element without left descent");
  }

  // v <- s_i(v), touching only coordinate i.
  void reflect_in_place(int i, int* v) const {
    int c = 0;
    for (int j = 0; j < n_; ++j) c += cartan_[i][j] * v[j];
    v[i] -= c;
  }

  std::vector<int> apply_mat(const std::vector<int>& mat, const std::vector<int>& v) const {
    std::vector<int> out(n_, 0);
    apply_into(mat, v, out);
    return out;
  }

  void apply_into(const std::vector<int>& mat, const std::vector<int>& v,
                  std::vector<int>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (int j = 0; j < n_; ++j) {
      int c = v[j];
      if (c == 0) continue;
      const int* col = &mat[static_cast<std::size_t>(j) * n_];
      for (int k = 0; k < n_; ++k) out[k] += c * col[k];
    }
  }

  // out column j <- mat applied to (src column j)
  void mat_apply_column(const std::vector<int>& mat, const std::vector<int>& src, int j,
                        std::vector<int>& out) const {
    int* dst = &out[static_cast<std::size_t>(j) * n_];
    for (int k = 0; k < n_; ++k) dst[k] = 0;
    const int* v = &src[static_cast<std::size_t>(j) * n_];
    for (int l = 0; l < n_; ++l) {
      int c = v[l];
      if (c == 0) continue;
      const int* col = &mat[static_cast<std::size_t>(l) * n_];
      for (int k = 0; k < n_; ++k) dst[k] += c * col[k];
    }
  }

  int n_ = 0;
  std::string type_;
  std::uint64_t order_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::vector<int>> roots_;
  std::vector<WeylElement> reflections_;  // parallel to roots_
  std::vector<int> id_mat_;
};

inline CoxeterSystem build_system(const std::string& descriptor) {
  auto factors = detail::parse_type_descriptor(descriptor);

  CoxeterSystem sys;
  sys.type_ = descriptor;
  int n = 0;
  for (const auto& f : factors) n += f.rank;
  sys.n_ = n;

  sys.order_ = 1;
  const std::uint64_t guard = guard_limit();
  for (const auto& f : factors) {
    std::uint64_t fo = detail::factor_group_order(f);
    if (sys.order_ > guard / fo + 1) {
      sys.order_ = 0;  // definitely over any sane bound
    } else {
      sys.order_ *= fo;
    }
    if (sys.order_ == 0 || sys.order_ > guard) {
      throw GuardExceeded("|W(" + descriptor + ")| exceeds guard; raise CXKIT_MAX_W to override");
    }
  }

  sys.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) sys.cartan_[i][i] = 2;
  int off = 0;
  for (const auto& f : factors) {
    detail::fill_factor_cartan(f, off, sys.cartan_);
    off += f.rank;
  }

  sys.coxeter_.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    sys.coxeter_[i][i] = 1;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = detail::bond_order_from_product(sys.cartan_[i][j] * sys.cartan_[j][i]);
      if (m < 0) throw std::logic_error("non-crystallographic Cartan product");
      sys.coxeter_[i][j] = m;
    }
  }

  sys.id_mat_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) sys.id_mat_[static_cast<std::size_t>(j) * n + j] = 1;

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping track of one reflection chain per root.
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, int> index;
  std::vector<std::pair<int, int>> via;  // (parent root, generator), (-1,i) for simples
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    index[alpha] = static_cast<int>(roots.size());
    roots.push_back(alpha);
    via.push_back({-1, i});
  }
  auto is_positive = [](const std::vector<int>& v) {
    bool nonzero = false;
    for (int c : v) {
      if (c < 0) return false;
      if (c > 0) nonzero = true;
    }
    return nonzero;
  };
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> r = roots[head];
      int c = 0;
      for (int j = 0; j < n; ++j) c += sys.cartan_[i][j] * r[j];
      r[i] -= c;
      if (!is_positive(r)) continue;
      if (index.find(r) == index.end()) {
        index[r] = static_cast<int>(roots.size());
        roots.push_back(r);
        via.push_back({static_cast<int>(head), i});
      }
    }
  }

  int expected = 0;
  for (const auto& f : factors) expected += detail::factor_positive_root_count(f);
  if (static_cast<int>(roots.size()) != expected) {
    throw std::logic_error("positive root closure has unexpected size");
  }

  // Reflection of the root s_{i_1}...s_{i_k}(alpha_i) is the conjugate of
  // s_i by that chain.
  std::vector<WeylElement> refl(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (via[k].first < 0) {
      refl[k] = sys.simple_reflection(via[k].second);
    } else {
      int i = via[k].second;
      refl[k] = sys.mult_gen_left(i, sys.mult_gen_right(refl[static_cast<std::size_t>(via[k].first)], i));
    }
  }

  std::vector<std::size_t> order_idx(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) order_idx[k] = k;
  auto height = [](const std::vector<int>& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    int ha = height(roots[a]);
    int hb = height(roots[b]);
    if (ha != hb) return ha < hb;
    return roots[a] < roots[b];
  });
  for (std::size_t k : order_idx) {
    sys.roots_.push_back(roots[k]);
    sys.reflections_.push_back(refl[k]);
  }

  return sys;
}

}  // namespace cxkit
