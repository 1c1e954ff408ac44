#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

// Permutation of {1..k}, one-line notation. Composition is left-to-right
// throughout: a.then(b) maps x to b(a(x)). This matches reading a braid
// word left to right and is the convention every oracle here relies on.
struct Perm {
  std::vector<int> img;

  static Perm identity(int k) {
    Perm p;
    p.img.resize(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) p.img[static_cast<std::size_t>(i - 1)] = i;
    return p;
  }

  static Perm transposition(int k, int i) {
    Perm p = identity(k);
    std::swap(p.img[static_cast<std::size_t>(i - 1)],
              p.img[static_cast<std::size_t>(i)]);
    return p;
  }

  // The reversal i -> k+1-i, the permutation of the half twist.
  static Perm longest(int k) {
    Perm p;
    p.img.resize(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
      p.img[static_cast<std::size_t>(i - 1)] = k + 1 - i;
    return p;
  }

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i - 1)]; }

  Perm then(const Perm& o) const {
    Perm out;
    out.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      out.img[i] = o.img[static_cast<std::size_t>(img[i] - 1)];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      out.img[static_cast<std::size_t>(img[i] - 1)] = static_cast<int>(i + 1);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != static_cast<int>(i + 1)) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
};

// Number of inversions = crossing count of the permutation braid.
inline int perm_length(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.img.size(); ++i)
    for (std::size_t j = i + 1; j < p.img.size(); ++j)
      if (p.img[i] > p.img[j]) ++count;
  return count;
}

// Left Garside normal form Delta^inf . f_1 ... f_k on rank+1 strands.
// Factors are permutation braids, never trivial and never the half twist;
// pure Delta powers have an empty factor list. Equality of normal forms is
// equality in the braid group.
struct GarsideNF {
  int rank = 0;
  long long inf = 0;
  std::vector<Perm> factors;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

namespace detail {

// Conjugation by the half twist: Delta^-1 p Delta.
inline Perm twist_conjugate(const Perm& p, const Perm& w0) {
  return w0.then(p).then(w0);
}

// Makes the pair (p, q) left-weighted: while some atom starts q but does
// not finish p, slide it across. Both replacements keep the product fixed
// and keep both sides permutation braids.
inline bool make_pair_weighted(Perm& p, Perm& q) {
  const int strands = p.size();
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    Perm pinv = p.inverse();
    for (int i = 1; i < strands; ++i) {
      const bool starts_q = q(i) > q(i + 1);
      const bool finishes_p = pinv(i) > pinv(i + 1);
      if (starts_q && !finishes_p) {
        // p <- p sigma_i: exchange the values i, i+1
        for (auto& v : p.img) {
          if (v == i)
            v = i + 1;
          else if (v == i + 1)
            v = i;
        }
        std::swap(pinv.img[static_cast<std::size_t>(i - 1)],
                  pinv.img[static_cast<std::size_t>(i)]);
        // q <- sigma_i^-1 q: exchange the entries at positions i, i+1
        std::swap(q.img[static_cast<std::size_t>(i - 1)],
                  q.img[static_cast<std::size_t>(i)]);
        moved = true;
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace detail

inline GarsideNF garside_normal_form(int rank, const Word& word) {
  if (rank < 1) throw std::invalid_argument("garside: rank must be >= 1");
  const int strands = rank + 1;
  const Perm w0 = Perm::longest(strands);

  GarsideNF nf;
  nf.rank = rank;
  std::vector<Perm>& fs = nf.factors;

  // Letter conversion. sigma_i is itself a simple factor;
  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), and pushing the Delta^-1 to
  // the front twist-conjugates everything accumulated so far.
  for (int letter : word) {
    const int i = letter > 0 ? letter : -letter;
    if (i > rank)
      throw std::invalid_argument("garside: letter " + std::to_string(letter) +
                                  " exceeds rank " + std::to_string(rank));
    if (letter > 0) {
      fs.push_back(Perm::transposition(strands, i));
    } else {
      nf.inf -= 1;
      for (Perm& f : fs) f = detail::twist_conjugate(f, w0);
      fs.push_back(w0.then(Perm::transposition(strands, i)));
    }
  }

  // Left-to-right sweeps until every adjacent pair is left-weighted.
  // Trivial factors are dropped wherever they appear; half twists bubble to
  // the front on their own and join the Delta power there.
  const std::size_t sweep_cap = fs.size() + 16;
  std::size_t sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j)
      if (detail::make_pair_weighted(fs[j], fs[j + 1])) changed = true;
    const std::size_t before = fs.size();
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const Perm& f) { return f.is_identity(); }),
             fs.end());
    if (fs.size() != before) changed = true;
    if (changed && ++sweeps > sweep_cap)
      throw std::logic_error("garside: normalization did not converge");
  }
  while (!fs.empty() && fs.front() == w0) {
    nf.inf += 1;
    fs.erase(fs.begin());
  }
  return nf;
}

inline std::string format_perm(const Perm& p) {
  std::string out = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out + "]";
}

}  // namespace artin
