#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

// Word in the dihedral Artin group A(I2(m)), generators a = 1, b = 2.
struct DihedralWord {
  int m = 0;
  Word word;

  DihedralWord() = default;
  DihedralWord(int m_, Word word_) : m(m_), word(std::move(word_)) {
    if (m < 3)
      throw std::invalid_argument("dihedral: label m must be >= 3");
    if (max_index(word) > 2)
      throw std::invalid_argument("dihedral: letters must be +-1 or +-2");
  }
};

// A simple element of the dihedral Garside monoid: an alternating positive
// word, remembered as (length, first letter). Length 0 is the identity,
// length m the Garside element Delta (whose two spellings are identified;
// both degenerate cases store first = 0).
struct DihedralSimple {
  int len = 0;
  int first = 0;

  friend bool operator==(const DihedralSimple&, const DihedralSimple&) = default;
};

struct DihedralNF {
  int m = 0;
  long long inf = 0;
  std::vector<DihedralSimple> factors;

  friend bool operator==(const DihedralNF&, const DihedralNF&) = default;
};

namespace detail {

inline int other_letter(int x) { return x == 1 ? 2 : 1; }

inline int simple_last(const DihedralSimple& s) {
  return s.len % 2 == 1 ? s.first : other_letter(s.first);
}

// Delta^-1 s Delta: trivial for even m, swaps the two generators for odd m.
inline DihedralSimple dihedral_twist(const DihedralSimple& s, int m) {
  if (m % 2 == 0 || s.first == 0) return s;
  return {s.len, other_letter(s.first)};
}

// Absorbs the longest left divisor of q that extends p; the simples form
// two chains meeting only at the identity and Delta, so one absorption
// already leaves the pair left-weighted.
inline bool make_dihedral_pair_weighted(DihedralSimple& p, DihedralSimple& q,
                                        int m) {
  if (p.len == m || q.len == 0) return false;
  // complement of p starts opposite to p's last letter; the identity's
  // complement is Delta, which matches either start of q
  int take = 0;
  int take_first = 0;
  if (p.len == 0) {
    take = q.len == m ? m : q.len;
    take_first = q.len == m ? 1 : q.first;
  } else {
    const int want = other_letter(simple_last(p));
    if (q.len == m || q.first == want) {
      take = std::min(m - p.len, q.len);
      take_first = want;
    }
  }
  if (take == 0) return false;

  const int p_first = p.len == 0 ? take_first : p.first;
  p.len += take;
  p.first = p.len == m ? 0 : p_first;

  const int q_first = q.len == m ? take_first : q.first;
  q.len -= take;
  q.first = q.len == 0 ? 0 : (take % 2 == 0 ? q_first : other_letter(q_first));
  return true;
}

}  // namespace detail

inline DihedralNF dihedral_nf(const DihedralWord& w) {
  const int m = w.m;
  DihedralNF nf;
  nf.m = m;
  std::vector<DihedralSimple>& fs = nf.factors;

  for (int letter : w.word) {
    const int x = letter > 0 ? letter : -letter;
    if (letter > 0) {
      fs.push_back({1, x});
    } else {
      // letter^-1 = Delta^-1 (Delta letter^-1); the complement is the
      // alternating word of length m-1 ending with the other generator
      nf.inf -= 1;
      for (DihedralSimple& f : fs) f = detail::dihedral_twist(f, m);
      fs.push_back({m - 1, m % 2 == 0 ? detail::other_letter(x) : x});
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j)
      if (detail::make_dihedral_pair_weighted(fs[j], fs[j + 1], m))
        changed = true;
    const std::size_t before = fs.size();
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const DihedralSimple& f) { return f.len == 0; }),
             fs.end());
    if (fs.size() != before) changed = true;
  }
  while (!fs.empty() && fs.front().len == m) {
    nf.inf += 1;
    fs.erase(fs.begin());
  }
  return nf;
}

inline bool dihedral_equal(const DihedralWord& u, const DihedralWord& v) {
  if (u.m != v.m)
    throw std::invalid_argument("dihedral_equal: label mismatch");
  return dihedral_nf(u) == dihedral_nf(v);
}

// Spells a simple factor back out as a positive word.
inline Word dihedral_simple_word(const DihedralSimple& s, int m) {
  const int first = s.len == m ? 1 : s.first;
  Word out;
  for (int k = 0; k < s.len; ++k)
    out.push_back(k % 2 == 0 ? first : detail::other_letter(first));
  return out;
}

}  // namespace artin
