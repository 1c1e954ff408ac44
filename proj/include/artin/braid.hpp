#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "artin/freegroup.hpp"
#include "artin/garside.hpp"
#include "artin/word.hpp"

namespace artin {

// A word in the braid group on rank+1 strands, letters over the Artin
// generators sigma_1..sigma_rank.
struct BraidWord {
  int rank = 0;
  Word word;

  BraidWord() = default;
  BraidWord(int rank_, Word word_) : rank(rank_), word(std::move(word_)) {
    if (rank < 1)
      throw std::invalid_argument("braid: rank must be >= 1");
    if (max_index(word) > rank)
      throw std::invalid_argument("braid: word letter exceeds rank " +
                                  std::to_string(rank));
  }
};

struct OracleOptions {
  std::size_t letter_budget = default_letter_budget;
  // Words longer than this are decided by normal form instead of the free
  // group action; the two must agree wherever both run.
  std::size_t nf_threshold = 64;
};

namespace detail {

// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, the rest fixed.
inline Substitution braid_letter_substitution(int strands, int letter) {
  Substitution s = Substitution::identity(strands);
  const int i = letter > 0 ? letter : -letter;
  if (letter > 0) {
    s.images[static_cast<std::size_t>(i - 1)] = FreeWord{i, i + 1, -i};
    s.images[static_cast<std::size_t>(i)] = FreeWord{i};
  } else {
    s.images[static_cast<std::size_t>(i - 1)] = FreeWord{i + 1};
    s.images[static_cast<std::size_t>(i)] = FreeWord{-(i + 1), i, i + 1};
  }
  return s;
}

}  // namespace detail

// The faithful action on the free group of rank strands: the composite of
// the letterwise substitutions, leftmost letter applied first.
inline Substitution artin_action(const BraidWord& w,
                                 const OracleOptions& opts = {}) {
  const int strands = w.rank + 1;
  Substitution acc = Substitution::identity(strands);
  for (int letter : w.word)
    acc = sub_then(acc, detail::braid_letter_substitution(strands, letter),
                   opts.letter_budget);
  return acc;
}

inline GarsideNF garside_nf(const BraidWord& w) {
  return garside_normal_form(w.rank, w.word);
}

// Word equality in the braid group. Short words go through the free group
// action, long ones through the Garside normal form; both are complete
// decision procedures.
inline bool braid_equal(const BraidWord& u, const BraidWord& v,
                        const OracleOptions& opts = {}) {
  if (u.rank != v.rank)
    throw std::invalid_argument("braid_equal: rank mismatch");
  if (std::max(u.word.size(), v.word.size()) > opts.nf_threshold)
    return garside_nf(u) == garside_nf(v);
  return artin_action(u, opts) == artin_action(v, opts);
}

// Image under the length homomorphism sigma_i -> 1.
inline long long braid_length(const BraidWord& w) {
  return exponent_sum(w.word);
}

// Induced permutation of strand endpoints, letters applied left to right.
inline Perm braid_perm(const BraidWord& w) {
  const int strands = w.rank + 1;
  Perm p = Perm::identity(strands);
  for (int letter : w.word)
    p = p.then(Perm::transposition(strands, letter > 0 ? letter : -letter));
  return p;
}

// Full twist (sigma_1..sigma_n)^{n+1}: the generator of the centre.
inline Word full_twist_word(int rank) {
  Word delta;
  for (int i = 1; i <= rank; ++i) delta.push_back(i);
  return power(delta, rank + 1);
}

inline bool is_central(const BraidWord& w, const OracleOptions& opts = {}) {
  for (int i = 1; i <= w.rank; ++i) {
    const Word gen{i};
    BraidWord left(w.rank, concat(w.word, gen));
    BraidWord right(w.rank, concat(gen, w.word));
    if (!braid_equal(left, right, opts)) return false;
  }
  return true;
}

// True iff u v^-1 is the centre power zeta^k forced by the length
// homomorphism; lengths off the d-grid settle the question without touching
// the oracle.
inline bool equal_mod_center(const BraidWord& u, const BraidWord& v,
                             const OracleOptions& opts = {}) {
  if (u.rank != v.rank)
    throw std::invalid_argument("equal_mod_center: rank mismatch");
  const long long d =
      static_cast<long long>(u.rank) * (u.rank + 1);  // length of the twist
  const long long diff = braid_length(u) - braid_length(v);
  if (diff % d != 0) return false;
  const long long k = diff / d;
  const Word shifted =
      freely_reduced(concat(v.word, power(full_twist_word(u.rank), k)));
  return braid_equal(u, BraidWord(u.rank, shifted), opts);
}

}  // namespace artin
