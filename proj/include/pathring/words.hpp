#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathring/rational.hpp"

namespace pathring {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
/// Formal Q-linear combination of words; zero coefficients are never stored.
using WordSum = std::map<Word, Rational>;
/// Formal combination of tensors u ⊗ v.
using WordPairSum = std::map<std::pair<Word, Word>, Rational>;

template <class Key>
void add_term(std::map<Key, Rational>& s, const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

template <class Key>
void add_scaled(std::map<Key, Rational>& s, const std::map<Key, Rational>& t, const Rational& c) {
  for (const auto& [k, x] : t) add_term(s, k, c * x);
}

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

/// All words of length <= max_length over `letters` letters, ordered by
/// length and then lexicographically.
inline std::vector<Word> all_words(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t n = 1; n <= max_length; ++n) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter l = 0; l < letters; ++l) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline std::string format_word(const std::vector<std::string>& names, const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "|";
    s += names.at(w[i]);
  }
  return s + "]";
}

}  // namespace pathring
