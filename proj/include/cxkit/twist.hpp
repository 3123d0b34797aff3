#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cxkit/coxeter.hpp"
#include "cxkit/errors.hpp"

namespace cxkit {

// Partition of the generator set into F-orbits. Blocks are sorted and
// ordered by smallest member.
struct FOrbitSet {
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;  // generator index -> orbit index

  std::size_t size() const { return orbits.size(); }
};

// The automorphism F of (W, S), modeled as a permutation of the simple
// reflections preserving the Coxeter matrix. The Suzuki/Ree root-length
// exchange is invisible at this level; the q-constraint is metadata only.
class Twist {
 public:
  Twist(CoxeterSystem sys, std::vector<int> sigma, std::string label, std::string q_note)
      : sys_(std::move(sys)),
        sigma_(std::move(sigma)),
        label_(std::move(label)),
        q_note_(std::move(q_note)) {
    const int n = sys_.rank();
    identity_ = true;
    for (int i = 0; i < n; ++i) {
      if (sigma_[static_cast<std::size_t>(i)] != i) identity_ = false;
    }
    order_ = 1;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      int j = i;
      do {
        seen[static_cast<std::size_t>(j)] = true;
        j = sigma_[static_cast<std::size_t>(j)];
        ++len;
      } while (j != i);
      order_ = std::lcm(order_, len);
    }
  }

  const CoxeterSystem& system() const { return sys_; }
  int sigma(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& sigma() const { return sigma_; }
  int order() const { return order_; }
  bool is_identity_twist() const { return identity_; }
  const std::string& label() const { return label_; }
  const std::string& q_note() const { return q_note_; }

  Word apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
      if (letter < 0 || letter >= sys_.rank()) {
        throw InputError("word letter " + std::to_string(letter + 1) + " out of range");
      }
      out.push_back(sigma(letter));
    }
    return out;
  }

  // F(x), computed through any reduced word; F maps reduced words to
  // reduced words, so lengths are preserved.
  WeylElement apply(const WeylElement& x) const {
    if (identity_) return x;
    return sys_.element_from_word(apply(sys_.canonical_reduced_word(x)));
  }

  FOrbitSet orbits() const {
    const int n = sys_.rank();
    FOrbitSet os;
    os.orbit_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      if (os.orbit_of[static_cast<std::size_t>(i)] >= 0) continue;
      std::vector<int> block;
      int j = i;
      do {
        os.orbit_of[static_cast<std::size_t>(j)] = static_cast<int>(os.orbits.size());
        block.push_back(j);
        j = sigma(j);
      } while (j != i);
      std::sort(block.begin(), block.end());
      os.orbits.push_back(std::move(block));
    }
    return os;
  }

 private:
  CoxeterSystem sys_;
  std::vector<int> sigma_;
  int order_ = 1;
  bool identity_ = true;
  std::string label_;
  std::string q_note_;
};

inline Twist build_twist(const CoxeterSystem& sys, const std::vector<int>& sigma,
                         const std::string& label = "", const std::string& q_note = "") {
  const int n = sys.rank();
  if (static_cast<int>(sigma.size()) != n) {
    throw InputError("permutation size does not match rank");
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int img = sigma[static_cast<std::size_t>(i)];
    if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) {
      throw InputError("not a permutation of the generators");
    }
    hit[static_cast<std::size_t>(img)] = true;
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (sys.coxeter_matrix()[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s)])]
                              [static_cast<std::size_t>(sigma[static_cast<std::size_t>(t)])] !=
          sys.coxeter_matrix()[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) {
        throw CoxeterMatrixViolation(
            "permutation does not preserve the Coxeter matrix: m(" + std::to_string(s + 1) +
            "," + std::to_string(t + 1) + ") != m(" + std::to_string(sigma[static_cast<std::size_t>(s)] + 1) +
            "," + std::to_string(sigma[static_cast<std::size_t>(t)] + 1) + ")");
      }
    }
  }
  return Twist(sys, sigma, label, q_note);
}

inline Twist untwisted(const CoxeterSystem& sys) {
  std::vector<int> sigma(static_cast<std::size_t>(sys.rank()));
  std::iota(sigma.begin(), sigma.end(), 0);
  return Twist(sys, std::move(sigma), "", "");
}

namespace detail {

struct TwistedFactor {
  int twist_order;  // 1, 2, or 3
  TypeFactor factor;
};

inline std::vector<TwistedFactor> parse_twisted_descriptor(const std::string& descriptor) {
  std::vector<TwistedFactor> out;
  std::size_t i = 0;
  if (descriptor.empty()) throw InputError("empty descriptor");
  while (i < descriptor.size()) {
    int tw = 1;
    if (descriptor[i] == '2' || descriptor[i] == '3') {
      tw = descriptor[i] - '0';
      ++i;
    }
    if (i >= descriptor.size() || descriptor[i] < 'A' || descriptor[i] > 'G') {
      throw InputError("unknown descriptor '" + descriptor + "'");
    }
    char letter = descriptor[i];
    ++i;
    if (i >= descriptor.size() || descriptor[i] < '1' || descriptor[i] > '8') {
      throw InputError("missing or invalid rank in '" + descriptor + "'");
    }
    int rank = descriptor[i] - '0';
    ++i;
    if (!factor_rank_valid(letter, rank)) {
      throw InputError("rank " + std::to_string(rank) + " out of supported bounds for type " +
                       std::string(1, letter));
    }
    out.push_back({tw, {letter, rank}});
    if (i < descriptor.size()) {
      if (descriptor[i] != 'x') throw InputError("expected 'x' between factors in '" + descriptor + "'");
      ++i;
      if (i >= descriptor.size()) throw InputError("trailing 'x' in '" + descriptor + "'");
    }
  }
  return out;
}

// The standard diagram automorphism of one factor, as 0-based images
// within the factor.
inline std::vector<int> factor_diagram_twist(const TwistedFactor& tf) {
  const char letter = tf.factor.letter;
  const int n = tf.factor.rank;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
  if (tf.twist_order == 1) return sigma;
  if (tf.twist_order == 3) {
    if (letter != 'D' || n != 4) {
      throw InputError("twist order 3 is only defined for D4");
    }
    // triality: 3-cycle on the outer nodes 1 -> 3 -> 4 -> 1
    sigma[0] = 2;
    sigma[2] = 3;
    sigma[3] = 0;
    return sigma;
  }
  switch (letter) {
    case 'A':
      if (n < 2) throw InputError("2A requires rank >= 2");
      for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = n - 1 - i;
      return sigma;
    case 'D':
      std::swap(sigma[static_cast<std::size_t>(n - 2)], sigma[static_cast<std::size_t>(n - 1)]);
      return sigma;
    case 'E':
      if (n != 6) throw InputError("twisted E is only defined for E6");
      sigma[0] = 5;
      sigma[5] = 0;
      sigma[2] = 4;
      sigma[4] = 2;
      return sigma;
    case 'B':
      if (n != 2) throw InputError("twisted B is only defined for B2");
      std::swap(sigma[0], sigma[1]);
      return sigma;
    case 'F':
      sigma[0] = 3;
      sigma[1] = 2;
      sigma[2] = 1;
      sigma[3] = 0;
      return sigma;
    case 'G':
      std::swap(sigma[0], sigma[1]);
      return sigma;
  }
  throw InputError("no registry twist for type " + std::string(1, letter));
}

inline std::string suzuki_ree_note(const TwistedFactor& tf) {
  if (tf.twist_order != 2) return "";
  switch (tf.factor.letter) {
    case 'B':
      return "q an odd power of sqrt(2)";
    case 'F':
      return "q an odd power of sqrt(2)";
    case 'G':
      return "q an odd power of sqrt(3)";
    default:
      return "";
  }
}

}  // namespace detail

// System plus standard twist for descriptors like "A3", "2A3", "3D4",
// "2B2", or products with per-factor prefixes ("2A2xA1"). Non-registry
// twists go through build_twist with an explicit permutation.
inline Twist registry_twist(const std::string& descriptor) {
  auto tfs = detail::parse_twisted_descriptor(descriptor);

  std::string base;
  for (const auto& tf : tfs) {
    if (!base.empty()) base += 'x';
    base += tf.factor.letter;
    base += static_cast<char>('0' + tf.factor.rank);
  }
  CoxeterSystem sys = build_system(base);

  std::vector<int> sigma;
  std::string q_note;
  bool nontrivial = false;
  for (const auto& tf : tfs) {
    int off = static_cast<int>(sigma.size());
    auto part = detail::factor_diagram_twist(tf);
    for (int img : part) sigma.push_back(off + img);
    if (tf.twist_order > 1) nontrivial = true;
    std::string note = detail::suzuki_ree_note(tf);
    if (!note.empty()) {
      if (!q_note.empty()) q_note += "; ";
      q_note += note;
    }
  }
  std::string label = nontrivial ? descriptor : "";
  return build_twist(sys, sigma, label, q_note);
}

inline std::set<int> f_support_orbits_of_letters(const FOrbitSet& os, const Word& letters) {
  std::set<int> ids;
  for (int letter : letters) ids.insert(os.orbit_of[static_cast<std::size_t>(letter)]);
  return ids;
}

inline FOrbitSet f_orbits(const Twist& tw) { return tw.orbits(); }

inline WeylElement apply_twist(const Twist& tw, const WeylElement& x) { return tw.apply(x); }

}  // namespace cxkit
