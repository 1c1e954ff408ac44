#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/abelian.hpp"
#include "artin/center.hpp"
#include "artin/coxeter.hpp"
#include "artin/errors.hpp"
#include "artin/morphism.hpp"
#include "artin/word.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;

// A transvection x -> x zeta^{lambda(x)} held at parameter level. For a
// rank-two abelianization lambda is (p,q): a generator with abelianized
// coordinates (r_i,s_i) picks up zeta^{p r_i + q s_i}. For a rank-one
// abelianization the single parameter sends x to x zeta^{m l(x)}.
struct Transvection {
  ArtinType group;
  bool is_pair = false;
  long long p = 0;  // the single parameter in the rank-one case
  long long q = 0;

  friend bool operator==(const Transvection&, const Transvection&) = default;
};

inline Transvection transvection(const ArtinType& t, long long p,
                                 long long q) {
  if (center_data(t).trivial)
    throw std::invalid_argument("transvection: " + type_tag(t) +
                                " has trivial centre");
  if (!has_rank_two_abelianization(t))
    throw std::invalid_argument("transvection: " + type_tag(t) +
                                " needs the single-parameter form");
  return {t, true, p, q};
}

inline Transvection transvection(const ArtinType& t, long long m) {
  if (center_data(t).trivial)
    throw std::invalid_argument("transvection: " + type_tag(t) +
                                " has trivial centre");
  if (has_rank_two_abelianization(t))
    throw std::invalid_argument("transvection: " + type_tag(t) +
                                " needs the (p,q) form");
  return {t, false, m, 0};
}

// The power k with T(zeta) = zeta^k: 1 + p r + q s over the abelianized
// centre image (r,s), or 1 + m d in the rank-one case.
inline long long zeta_exponent(const Transvection& t) {
  const CenterData c = center_data(t.group);
  if (t.is_pair) return 1 + t.p * c.ab_image.r + t.q * c.ab_image.s;
  return 1 + t.p * c.d;
}

// An automorphism exactly when the restriction to the centre is one.
inline bool is_automorphism(const Transvection& t) {
  const long long k = zeta_exponent(t);
  return k == 1 || k == -1;
}

// T o U at parameter level: parameters add when T fixes zeta and subtract
// when T inverts it. Composites with other exponents leave the transvection
// group and are not represented.
inline Transvection tv_compose(const Transvection& t, const Transvection& u) {
  if (t.group != u.group || t.is_pair != u.is_pair)
    throw std::invalid_argument("tv_compose: mismatched transvections");
  const long long k = zeta_exponent(t);
  if (k != 1 && k != -1)
    throw std::invalid_argument(
        "tv_compose: left factor is not an automorphism (zeta exponent " +
        std::to_string(k) + ")");
  Transvection out = t;
  out.p = k == 1 ? t.p + u.p : t.p - u.p;
  out.q = k == 1 ? t.q + u.q : t.q - u.q;
  return out;
}

struct TvStructure {
  enum class Kind { trivial, infinite_cyclic, infinite_dihedral };
  Kind kind = Kind::trivial;
  std::optional<Transvection> generator;   // translation, normalized to p = 1
  std::optional<Transvection> reflection;  // I2(4) only
};

// Tv(A) for each family: trivial when the abelianization has rank one
// (k = 1 + m d = +-1 forces m = 0 since d > 2), infinite cyclic generated
// by the p = 1 solution of p r + q s = 0 otherwise, and infinite dihedral
// for I2(4) where k = -1 also has solutions.
inline TvStructure tv_structure(const ArtinType& t) {
  TvStructure out;
  const CenterData c = center_data(t);
  if (c.trivial || !has_rank_two_abelianization(t)) return out;
  if (t.family == Family::I2 && t.label == 4) {
    out.kind = TvStructure::Kind::infinite_dihedral;
    out.generator = transvection(t, 1LL, -1LL);
    out.reflection = transvection(t, 0LL, -1LL);
    return out;
  }
  out.kind = TvStructure::Kind::infinite_cyclic;
  // p r + q s = 0 with p = 1: q = -r/s, integral for every supported case
  out.generator = transvection(t, 1LL, -(c.ab_image.r / c.ab_image.s));
  return out;
}

// Word-level application: each letter s_i^+- becomes s_i^+- zeta^{+-e_i}.
inline Word tv_apply(const Transvection& t, const Word& w) {
  if (t.group.family == Family::F4)
    throw unsupported_error("tv_apply: no word-level oracle for F4");
  const CenterData c = center_data(t.group);
  Word out;
  for (int letter : w) {
    const int i = letter > 0 ? letter : -letter;
    if (i > t.group.rank)
      throw std::invalid_argument("tv_apply: letter out of range");
    long long e = 0;
    if (t.is_pair)
      e = generator_class(t.group, i) == 1 ? t.p : t.q;
    else
      e = t.p;
    out.push_back(letter);
    const Word central = power(c.zeta, letter > 0 ? e : -e);
    out.insert(out.end(), central.begin(), central.end());
  }
  free_reduce_inplace(out);
  return out;
}

inline Morphism tv_as_morphism(const Transvection& t) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(t.group);
  f.name = "transvection";
  for (int i = 1; i <= t.group.rank; ++i)
    f.images.push_back(tv_apply(t, Word{i}));
  return f;
}

// n_1 = 1+d, n_{i+1} = 1 + d n_1 n_2 .. n_i: pairwise coprime and all
// congruent to 1 mod d. The values grow doubly exponentially, hence the
// unbounded integers.
inline std::vector<BigInt> comm_sequence(long long d, int count) {
  if (d < 3) throw std::invalid_argument("comm_sequence: d must be >= 3");
  if (count < 1) throw std::invalid_argument("comm_sequence: count must be >= 1");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  BigInt product = 1;
  for (int i = 0; i < count; ++i) {
    const BigInt next = 1 + d * product;
    out.push_back(next);
    product *= next;
  }
  return out;
}

// Executable witness for T_{md+1} o T_{kd+1} = T_{(md+1)(kd+1)}: composing
// the length-multiple parameters m then k gives m + k + m k d, whose zeta
// exponent factors as (md+1)(kd+1).
inline bool comm_compose_check(long long d, long long m, long long k) {
  const BigInt composite_param = BigInt(m) + k + BigInt(m) * k * d;
  const BigInt exponent = 1 + composite_param * d;
  const BigInt expected = (BigInt(m) * d + 1) * (BigInt(k) * d + 1);
  return exponent == expected;
}

}  // namespace artin
