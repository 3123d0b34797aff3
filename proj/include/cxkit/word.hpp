#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cxkit/errors.hpp"

namespace cxkit {

// A word over the simple reflections. Letters are stored as 0-based
// generator indices; the text form uses 1-based labels ("1 2 1").
using Word = std::vector<int>;

inline Word parse_word(const std::string& text, int rank) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("invalid word letter '" + tok + "'");
    }
    if (pos != tok.size() || v < 1 || v > rank) {
      throw InputError("invalid word letter '" + tok + "'");
    }
    w.push_back(static_cast<int>(v) - 1);
  }
  return w;
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

// Subword (Bruhat) order on the free monoid: u embeds into w as a
// subsequence. The greedy leftmost match decides this.
inline bool word_subword_leq(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
    if (w[j] == u[i]) ++i;
  }
  return i == u.size();
}

}  // namespace cxkit
