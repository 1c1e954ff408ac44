#pragma once

#include <stdexcept>

#include "artin/abelian.hpp"
#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

// Centre of an irreducible finite type Artin group: a word generating it,
// its length d, and its abelianized image. The affine families carry a
// trivial-centre marker instead.
struct CenterData {
  ArtinType group;
  bool trivial = false;
  Word zeta;
  long long d = 0;
  AbValue ab_image;
};

inline CenterData center_data(const ArtinType& t) {
  CenterData c;
  c.group = t;
  switch (t.family) {
    case Family::A: {
      // full twist (s_1..s_n)^{n+1}
      Word delta;
      for (int i = 1; i <= t.rank; ++i) delta.push_back(i);
      c.zeta = power(delta, t.rank + 1);
      break;
    }
    case Family::B: {
      // delta^n with delta = s_1..s_n
      Word delta;
      for (int i = 1; i <= t.rank; ++i) delta.push_back(i);
      c.zeta = power(delta, t.rank);
      break;
    }
    case Family::I2:
      // (ab)^{m/2} for even m, (ab)^m for odd m
      c.zeta = power(Word{1, 2}, t.label % 2 == 0 ? t.label / 2 : t.label);
      break;
    case Family::F4:
      c.zeta = power(Word{1, 2, 3, 4}, 6);
      break;
    case Family::AffA:
    case Family::AffC:
      c.trivial = true;
      return c;
  }
  c.d = static_cast<long long>(c.zeta.size());
  c.ab_image = abelianization(t, c.zeta);
  return c;
}

}  // namespace artin
