#pragma once

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace artin {

// A group word is a sequence of nonzero signed generator indices: letter +i
// is the generator s_i, letter -i its inverse. Words are plain data; nothing
// keeps them freely reduced, operations reduce where they need to.
using Word = std::vector<int>;

// Reduced words in a free group use the same representation; the fg_*
// operations in freegroup.hpp maintain the no-adjacent-cancellation
// invariant.
using FreeWord = Word;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

// w^k; negative k uses the inverse word.
inline Word power(const Word& w, long long k) {
  const Word base = k >= 0 ? w : inverse(w);
  const long long reps = k >= 0 ? k : -k;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long long i = 0; i < reps; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

// Stack scan: cancels every adjacent (+i,-i) pair, in any group.
inline void free_reduce_inplace(Word& w) {
  std::size_t top = 0;
  for (int letter : w) {
    if (top > 0 && w[top - 1] == -letter) {
      --top;
    } else {
      w[top++] = letter;
    }
  }
  w.resize(top);
}

inline Word freely_reduced(Word w) {
  free_reduce_inplace(w);
  return w;
}

// Exponent sum = image under the length homomorphism s_i -> 1.
inline long long exponent_sum(const Word& w) {
  long long sum = 0;
  for (int letter : w) sum += letter > 0 ? 1 : -1;
  return sum;
}

inline int max_index(const Word& w) {
  int m = 0;
  for (int letter : w) m = std::max(m, std::abs(letter));
  return m;
}

// Parses whitespace-separated signed indices. A positive max_rank bounds the
// allowed |letter|; zero disables the range check. Errors name the offending
// token.
inline Word parse_word(const std::string& text, int max_rank = 0) {
  Word out;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("word: token '" + token +
                                  "' is not an integer");
    }
    if (used != token.size())
      throw std::invalid_argument("word: token '" + token +
                                  "' is not an integer");
    if (value == 0)
      throw std::invalid_argument("word: token '" + token +
                                  "' is zero, generators are numbered from 1");
    if (max_rank > 0 && std::abs(value) > max_rank)
      throw std::invalid_argument("word: token '" + token +
                                  "' is out of range for rank " +
                                  std::to_string(max_rank));
    out.push_back(value);
  }
  return out;
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace artin
