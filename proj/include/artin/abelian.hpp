#pragma once

#include <cstdlib>
#include <string>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

// Abelianized value of a word: a pair when the family splits its generators
// into two classes, a single total exponent otherwise (stored in r).
struct AbValue {
  bool is_pair = false;
  long long r = 0;
  long long s = 0;

  friend bool operator==(const AbValue&, const AbValue&) = default;
};

inline bool has_rank_two_abelianization(const ArtinType& t) {
  switch (t.family) {
    case Family::B:
    case Family::F4:
    case Family::AffC:
      return true;
    case Family::I2:
      return t.label % 2 == 0;
    case Family::A:
    case Family::AffA:
      return false;
  }
  return false;
}

// Class of generator i: 1 or 2 for the two-class families, 0 otherwise.
// B(n): {s_1..s_{n-1}} vs {s_n}; I2 even: {a} vs {b}; F4: {s1,s2} vs
// {s3,s4}; AffC: middle generators vs the two ends.
inline int generator_class(const ArtinType& t, int i) {
  if (i < 1 || i > t.rank)
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range for " + type_tag(t));
  if (!has_rank_two_abelianization(t)) return 0;
  switch (t.family) {
    case Family::B: return i < t.rank ? 1 : 2;
    case Family::I2: return i == 1 ? 1 : 2;
    case Family::F4: return i <= 2 ? 1 : 2;
    case Family::AffC: return (i == 1 || i == t.rank) ? 2 : 1;
    default: return 0;
  }
}

inline AbValue abelianization(const ArtinType& t, const Word& w) {
  AbValue out;
  out.is_pair = has_rank_two_abelianization(t);
  for (int letter : w) {
    const int i = letter > 0 ? letter : -letter;
    const int sign = letter > 0 ? 1 : -1;
    if (!out.is_pair) {
      out.r += sign;
    } else if (generator_class(t, i) == 1) {
      out.r += sign;
    } else {
      out.s += sign;
    }
  }
  return out;
}

inline std::string format_ab_value(const AbValue& v) {
  if (!v.is_pair) return std::to_string(v.r);
  return "(" + std::to_string(v.r) + ", " + std::to_string(v.s) + ")";
}

}  // namespace artin
