#pragma once

#include <stdexcept>
#include <string>

#include "artin/coxeter.hpp"
#include "artin/morphism.hpp"
#include "artin/word.hpp"

namespace artin {

// The named homomorphisms between the supported groups. Every map here
// with an oracle-bound codomain is machine-checked against the domain
// relations by the harness; none is taken on trust.

// A(B_n) -> A(A_n): s_i -> sigma_i for i < n, s_n -> sigma_n^2.
inline Morphism embed_b_in_a(int n) {
  Morphism f;
  f.domain = GroupRef::group(type_b(n));
  f.codomain = GroupRef::group(type_a(n));
  f.name = "embed_B_in_A";
  for (int i = 1; i < n; ++i) f.images.push_back(Word{i});
  f.images.push_back(Word{n, n});
  return f;
}

// Affine C of rank n -> A(A_n): the two end generators double up.
inline Morphism embed_affc_in_a(int n) {
  Morphism f;
  f.domain = GroupRef::group(type_aff_c(n));
  f.codomain = GroupRef::group(type_a(n));
  f.name = "embed_AffC_in_A";
  f.images.push_back(Word{1, 1});
  for (int i = 2; i < n; ++i) f.images.push_back(Word{i});
  f.images.push_back(Word{n, n});
  return f;
}

// The inversion s_i -> s_i^-1, defined for every family.
inline Morphism inversion(const ArtinType& t) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(t);
  f.name = "epsilon";
  for (int i = 1; i <= t.rank; ++i) f.images.push_back(Word{-i});
  return f;
}

namespace detail {
inline int cycle_index(int raw, int n) {
  int r = raw % n;
  if (r <= 0) r += n;
  return r;
}
}  // namespace detail

// Rotation t_i -> t_{i+k} of the affine A cycle of rank n.
inline Morphism graph_rotation(int rank, int k) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_aff_a(rank));
  f.name = "graph_rotation";
  for (int i = 1; i <= rank; ++i)
    f.images.push_back(Word{detail::cycle_index(i + k, rank)});
  return f;
}

// Reflection t_i -> t_{axis+1-i} of the affine A cycle.
inline Morphism graph_reflection(int rank, int axis) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_aff_a(rank));
  f.name = "graph_reflection";
  for (int i = 1; i <= rank; ++i)
    f.images.push_back(Word{detail::cycle_index(axis + 1 - i, rank)});
  return f;
}

// The graph involution of A(B_n) extended to the whole group:
// s_i -> s_{n-i} for i < n and s_n -> (delta s_{n-1} .. s_1)^-1, which
// sends delta = s_1..s_n to delta^-1.
inline Morphism tau_b(int n) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_b(n));
  f.name = "tau_B";
  for (int i = 1; i < n; ++i) f.images.push_back(Word{n - i});
  Word delta_down;
  for (int i = 1; i <= n; ++i) delta_down.push_back(i);
  for (int i = n - 1; i >= 1; --i) delta_down.push_back(i);
  f.images.push_back(inverse(delta_down));
  return f;
}

// a -> aba, b -> a^-1; generates the infinite cyclic part of Out for even m.
inline Morphism eta_i2(int m) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_i2(m));
  f.name = "eta_I2";
  f.images.push_back(Word{1, 2, 1});
  f.images.push_back(Word{-1});
  return f;
}

// The graph involution a <-> b.
inline Morphism gamma_i2(int m) {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_i2(m));
  f.name = "gamma_I2";
  f.images.push_back(Word{2});
  f.images.push_back(Word{1});
  return f;
}

// The exceptional transvection of A(I2(4)): a -> a, b -> (aba)^-1.
inline Morphism t0_i2() {
  Morphism f;
  f.domain = f.codomain = GroupRef::group(type_i2(4));
  f.name = "T0_I2";
  f.images.push_back(Word{1});
  f.images.push_back(Word{-1, -2, -1});
  return f;
}

// Affine A of rank n inside A(B_n): t_i = delta^{i-1} s_1 delta^{1-i}.
// delta-conjugation then rotates the cycle, and delta^n = zeta closes it up.
inline Morphism affa_in_b(int n) {
  Morphism f;
  f.domain = GroupRef::group(type_aff_a(n));
  f.codomain = GroupRef::group(type_b(n));
  f.name = "affA_in_B";
  Word delta;
  for (int i = 1; i <= n; ++i) delta.push_back(i);
  for (int i = 1; i <= n; ++i) {
    Word image = power(delta, i - 1);
    image.push_back(1);
    const Word back = power(delta, 1 - i);
    image.insert(image.end(), back.begin(), back.end());
    f.images.push_back(freely_reduced(image));
  }
  return f;
}

// A(B_n) -> Z with kernel the affine subgroup: only s_n counts.
inline Morphism angular_projection(int n) {
  Morphism f;
  f.domain = GroupRef::group(type_b(n));
  f.codomain = GroupRef::integers();
  f.name = "angular_projection";
  for (int i = 1; i < n; ++i) f.images.push_back(Word{});
  f.images.push_back(Word{1});
  return f;
}

// By-name lookup used by the command line. `n` is the rank, or the label m
// for the I2 maps; `k` feeds the graph rotation amount / reflection axis.
inline Morphism catalog_morphism(const std::string& name, int n, int k = 1) {
  if (name == "embed_B_in_A") return embed_b_in_a(n);
  if (name == "embed_AffC_in_A") return embed_affc_in_a(n);
  if (name == "tau_B") return tau_b(n);
  if (name == "eta_I2") return eta_i2(n);
  if (name == "gamma_I2") return gamma_i2(n);
  if (name == "T0_I2") {
    if (n != 4)
      throw std::invalid_argument("T0_I2 exists only for m = 4");
    return t0_i2();
  }
  if (name == "affA_in_B") return affa_in_b(n);
  if (name == "angular_projection") return angular_projection(n);
  if (name == "graph_rotation") return graph_rotation(n, k);
  if (name == "graph_reflection") return graph_reflection(n, k);
  throw std::invalid_argument("unknown catalog morphism '" + name + "'");
}

}  // namespace artin
